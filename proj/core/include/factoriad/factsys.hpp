#pragma once

#include <optional>
#include <vector>

#include "factoriad/arrowmonad.hpp"
#include "factoriad/fincat.hpp"
#include "factoriad/freyd.hpp"
#include "factoriad/report.hpp"

namespace factoriad {

struct FactorisationSystem {
  CatPtr base;
  std::vector<char> in_e;
  std::vector<char> in_m;

  bool operator==(const FactorisationSystem& o) const {
    return same_category(base, o.base) && in_e == o.in_e && in_m == o.in_m;
  }
};

struct StrictFactorisationSystem {
  CatPtr base;
  std::vector<char> in_e0;
  std::vector<char> in_m0;

  bool operator==(const StrictFactorisationSystem& o) const {
    return same_category(base, o.base) && in_e0 == o.in_e0 && in_m0 == o.in_m0;
  }
};

FactorisationSystem make_fs(CatPtr base, const std::vector<char>& e, const std::vector<char>& m);
FactorisationSystem fs_from_names(CatPtr base, const std::vector<std::string>& e,
                                  const std::vector<std::string>& m);
StrictFactorisationSystem strict_fs_from_names(CatPtr base, const std::vector<std::string>& e0,
                                               const std::vector<std::string>& m0);

/// Axioms checked exhaustively: both classes contain every invertible
/// morphism and are closed under composition, every morphism factors as
/// M-after-E, and E is orthogonal to M.
CheckReport check_factorisation_system(const FactorisationSystem& fs);
bool is_fs(const FactorisationSystem& fs);

/// Subcategories containing all identities, with strictly unique
/// factorisation of every morphism.
CheckReport check_strict_factorisation_system(const StrictFactorisationSystem& fs);
bool is_strict_fs(const StrictFactorisationSystem& fs);

/// The unique fs containing a strict one: u = m.e lands in E iff m is
/// invertible, dually for M. Throws CatError when the input is not strict.
FactorisationSystem span_strict(const StrictFactorisationSystem& fs);

bool equivalent_strict(const StrictFactorisationSystem& a, const StrictFactorisationSystem& b);

bool is_proper(const FactorisationSystem& fs);
bool is_proper_strict(const StrictFactorisationSystem& fs);

/// Pruned search over composition-closed E candidates with the orthogonal
/// complement as M. Guarded by `guard.enumerate_fs`.
std::vector<FactorisationSystem> enumerate_fs(CatPtr base, const SizeGuard& guard = {});
std::vector<StrictFactorisationSystem> enumerate_strict_fs(CatPtr base,
                                                           const SizeGuard& guard = {});

struct FactorTriple {
  int e = -1;
  int mid = -1;
  int m = -1;
};

/// Per-morphism structural factorisation with identities mapped to
/// (id, object, id).
struct FactorisationChoice {
  CatPtr base;
  std::vector<FactorTriple> triples;
};

/// Lexicographically least valid (mid, e, m) per morphism.
FactorisationChoice default_choice(const FactorisationSystem& fs);
/// Lexicographically greatest; used to exercise choice-independence.
FactorisationChoice reverse_choice(const FactorisationSystem& fs);
/// Validates totality, identity normalisation and membership.
std::vector<std::string> choice_violations(const FactorisationSystem& fs,
                                           const FactorisationChoice& choice);

FactorTriple factor(const FactorisationChoice& choice, int morphism);

/// The unique comparison between two factorisations of the same morphism.
/// Throws CatError when the fill-in is missing or not unique.
int comparison_iso(const FinCategory& c, const FactorTriple& a, const FactorTriple& b);

/// Extension of f: X -> A along the squares construction: a square maps to
/// the orthogonal fill-in between the chosen factorisations of its endpoint
/// images. `ax` is the squares category over f.source.
Functor extend_functor(const ArrowCat& ax, const Functor& f, const FactorisationSystem& fs_a,
                       const FactorisationChoice& choice);

/// Proper variant: the extension is constant on diagonal classes and factors
/// through the completion's projection. `fx` completes f.source.
Functor extend_functor_proper(const FreydCat& fx, const Functor& f,
                              const FactorisationSystem& fs_a,
                              const FactorisationChoice& choice);

FactorisationSystem fs_from_class_pair(CatPtr base, const MorphismClassPair& pair);
StrictFactorisationSystem strict_fs_from_class_pair(CatPtr base, const MorphismClassPair& pair);

std::vector<std::string> fs_member_names(const FinCategory& c, const std::vector<char>& mask);

}  // namespace factoriad
