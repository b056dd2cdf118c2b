#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "factoriad/fincat.hpp"
#include "factoriad/report.hpp"

namespace factoriad {

/// Size guards for operations whose cost grows with iterated constructions.
/// `tower` bounds the base morphism count for anything that walks the third
/// iterate; enumeration bounds are separate.
struct SizeGuard {
  int tower = 12;
  int enumerate_fs = 10;
  int enumerate_strict_fs = 12;
  int enumerate_algebras = 6;
};

/// The category of squares over a base, with provenance back to it.
/// Objects are base morphisms; a morphism x^ -> y^ is a commuting pair
/// (top, bottom) with bottom.x = y.top.
struct ArrowCat {
  CatPtr base;
  CatPtr cat;
  std::vector<int> object_of;             // object -> base morphism (a bijection)
  std::vector<int> object_index;          // base morphism -> object
  std::vector<std::array<int, 2>> legs;   // morphism -> {top, bottom}
  std::vector<int> diag;                  // morphism -> base morphism (common diagonal)
  std::unordered_map<std::uint64_t, int> lookup;

  int top(int m) const { return legs[m][0]; }
  int bottom(int m) const { return legs[m][1]; }
  /// Morphism with the given source/target objects (as base morphisms) and
  /// legs; -1 when the square does not commute.
  int square(int src_bm, int tgt_bm, int top_bm, int bot_bm) const;
  int square_or_throw(int src_bm, int tgt_bm, int top_bm, int bot_bm) const;
};

ArrowCat arrow_category(CatPtr base);

/// Full and faithful embedding x |-> (identity square), f |-> (f, f).
Functor arrow_unit(const ArrowCat& a);

/// Diagonal multiplication: squares-of-squares collapse onto the diagonal.
/// `aa` must be arrow_category(a.cat).
Functor arrow_mult(const ArrowCat& a, const ArrowCat& aa);

/// Apply the squares construction to a functor: both legs and both endpoints
/// are mapped. `ac`/`ad` are the arrow categories over f's source/target.
Functor arrow_map(const ArrowCat& ac, const ArrowCat& ad, const Functor& f);

struct StrictFactorParts {
  int left;    // (1, bottom): x^ -> diag^
  int middle;  // object index of the diagonal
  int right;   // (top, 1): diag^ -> y^
};

/// f = (top, 1).(1, bottom) through the diagonal object.
StrictFactorParts strict_factor(const ArrowCat& a, int m);

struct MorphismClassPair {
  std::vector<char> left;   // E or E0 membership by morphism index
  std::vector<char> right;  // M or M0 membership
};

/// E = squares with invertible top leg, M = invertible bottom leg.
MorphismClassPair canonical_fs(const ArrowCat& a);
/// Same with "identity" in place of "invertible".
MorphismClassPair canonical_strict_fs(const ArrowCat& a);

struct FacePair {
  Functor lower;  // domain functor: x^ |-> dom x, square |-> top
  Functor upper;  // codomain functor
};

FacePair faces(const ArrowCat& a);

struct ConnectionPair {
  Functor lower;  // x^ |-> (x, 1): x^ -> 1^
  Functor upper;  // x^ |-> (1, x): 1^ -> x^
};

ConnectionPair connections(const ArrowCat& a, const ArrowCat& aa);

/// Every linking equation between the monad and the cubical structure:
/// face/degeneracy laws, counit and co-absorbancy of connections,
/// co-associativity, and the four groups tying them to the multiplication.
CheckReport check_cubical_equations(CatPtr base, const SizeGuard& guard = {});

}  // namespace factoriad
