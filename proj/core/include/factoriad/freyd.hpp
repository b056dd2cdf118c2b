#pragma once

#include <vector>

#include "factoriad/arrowmonad.hpp"
#include "factoriad/fincat.hpp"
#include "factoriad/report.hpp"

namespace factoriad {

/// The quotient of the squares category that identifies parallel squares with
/// equal diagonals, together with provenance.
struct FreydCat {
  CatPtr base;
  ArrowCat arrows;  // squares over base
  CatPtr cat;       // the quotient
  Functor projection;                  // arrows.cat -> cat
  std::vector<int> object_of;          // object -> base morphism
  std::vector<int> object_index;       // base morphism -> object
  std::vector<std::vector<int>> reps;  // morphism (class) -> sorted square indices
  std::vector<int> diag;               // morphism (class) -> base morphism

  int class_of_square(int square) const { return projection.on_morphisms[square]; }
  /// Class of the square with the given data; -1 when it does not commute.
  int square(int src_bm, int tgt_bm, int top_bm, int bot_bm) const;
  int square_or_throw(int src_bm, int tgt_bm, int top_bm, int bot_bm) const;
  /// Legs of the least representative.
  int top(int m) const { return arrows.top(reps[m][0]); }
  int bottom(int m) const { return arrows.bottom(reps[m][0]); }
};

/// Parallel squares are related iff their diagonals coincide.
Congruence freyd_congruence(const ArrowCat& a);

FreydCat freyd_completion(CatPtr base);
/// Completion over a squares category that has already been built.
FreydCat freyd_completion_from(ArrowCat arrows);

/// E0 = classes of (1, f) squares, M0 = classes of (f, 1) squares.
MorphismClassPair canonical_proper_strict_fs(const FreydCat& f);

/// The fs spanned by the canonical strict pair. Also recomputes E from the
/// split-epi characterization and throws CatError if the two disagree.
MorphismClassPair spanned_fs(const FreydCat& f);

Functor freyd_unit(const FreydCat& f);  // base -> cat

/// `ff` must be freyd_completion(f.cat). Checks that the value is independent
/// of every representative choice and throws CatError otherwise.
Functor freyd_mult(const FreydCat& f, const FreydCat& ff);

/// Functor between completions induced by g: base(fc) -> base(fd).
Functor freyd_map(const FreydCat& fc, const FreydCat& fd, const Functor& g);

/// Epi/mono transfer: invertible-free statement that a class inherits epi
/// (mono) from any representative's top (bottom) leg.
CheckReport check_epi_mono_transfer(const FreydCat& f);

/// The projection as a strict morphism of monads: compatibility with both
/// units and both multiplications, the latter through the two equal forms of
/// the squared projection.
CheckReport check_projection_monad_morphism(CatPtr base, const SizeGuard& guard = {});

}  // namespace factoriad
