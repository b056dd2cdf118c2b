#pragma once

#include <vector>

#include "factoriad/factsys.hpp"
#include "factoriad/json_io.hpp"
#include "factoriad/monad.hpp"

namespace factoriad {

/// An algebra for P or Fr: structure functor t: TX -> X, optionally with a
/// coherence table over T²X objects. An empty table means strict (identity
/// components throughout).
struct Algebra {
  MonadKind kind = MonadKind::P;
  CatPtr base;
  Functor structure;
  std::vector<int> coherence;

  bool strict() const { return coherence.empty(); }
};

/// Morphism of algebras (f, phi): phi indexed by TX objects, with
/// phi[o]: f(t(o)) -> t'(Tf(o)).
struct AlgebraMorphism {
  Functor f;
  std::vector<int> phi;
};

/// Unit law plus t.Tt = t.mult, both exhaustive. Requires an on-the-nose
/// algebra (empty or all-identity coherence table).
CheckReport check_strict_algebra(const MonadTower& tower, const Algebra& a);
CheckReport check_strict_algebra(const Algebra& a, const SizeGuard& guard = {});

/// Unitarity, invertible natural coherence, unit-whiskering identities and
/// the associativity coherence over third-iterate objects; each condition is
/// reported separately.
CheckReport check_pseudo_algebra(const MonadTower& tower, const Algebra& a);
CheckReport check_pseudo_algebra(const Algebra& a, const SizeGuard& guard = {});

struct AlgebraLegs {
  NatTransformation left;   // domain functor -> t, component t(1, x)
  NatTransformation right;  // t -> codomain functor, component t(x, 1)
};

/// The two natural families carving each morphism out of its structure
/// image; right.left recomposes the morphism.
AlgebraLegs algebra_legs(const MonadTower& tower, const Algebra& a);

/// E = morphisms whose right leg is invertible, M = left leg invertible.
/// Coherence data is never consulted.
FactorisationSystem algebra_to_fs(const MonadTower& tower, const Algebra& a);
StrictFactorisationSystem strict_algebra_to_strict_fs(const MonadTower& tower, const Algebra& a);

/// Structure functor from a choice of factorisations; squares map to
/// orthogonal fill-ins and the coherence component at a square compares the
/// two induced factorisations of its diagonal.
Algebra fs_to_pseudo_algebra(const MonadTower& tower, const FactorisationSystem& fs,
                             const FactorisationChoice& choice);
Algebra strict_fs_to_algebra(const MonadTower& tower, const StrictFactorisationSystem& fs);

CheckReport check_algebra_morphism(const MonadTower& tx, const Algebra& ax, const MonadTower& ty,
                                   const Algebra& ay, const AlgebraMorphism& m);

/// Coherence of a transformation between two algebra morphisms.
bool check_two_cell(const MonadTower& tx, const Algebra& ax, const MonadTower& ty,
                    const Algebra& ay, const AlgebraMorphism& m1, const AlgebraMorphism& m2,
                    const NatTransformation& alpha);

/// Morphism of algebras induced by an fs-preserving functor between the
/// algebras built from two chosen factorisations.
AlgebraMorphism induced_algebra_morphism(const MonadTower& tx, const Algebra& ax,
                                         const MonadTower& ty, const Algebra& ay,
                                         const Functor& f);

bool roundtrip_fs(const MonadTower& tower, const FactorisationSystem& fs,
                  const FactorisationChoice& choice);

/// The pseudo isomorphism (1, phi) between two algebras inducing the same fs.
AlgebraMorphism roundtrip_algebra(const MonadTower& tower, const Algebra& a, const Algebra& b);

/// True iff the structure functor is constant on diagonal classes.
bool is_r_compatible(const MonadTower& tower, const Algebra& a);

/// Push a compatible P-algebra down to the completion. Throws CatError on
/// incompatible input.
Algebra induce_fr_algebra(const MonadTower& p_tower, const MonadTower& fr_tower,
                          const Algebra& a);

/// For every enumerated fs with the default choice: proper iff the derived
/// structure functor is compatible with the diagonal congruence; includes the
/// cancellation mechanism on M-members.
CheckReport proper_correspondence_check(CatPtr base, const SizeGuard& guard = {});

/// Brute force over structure assignments pinned by the unit law, pruned by
/// functoriality, filtered by the strict laws.
std::vector<Algebra> enumerate_strict_algebras(MonadKind kind, CatPtr base,
                                               const SizeGuard& guard = {});

/// Name-table round trips against the generated tower layout.
Algebra algebra_from_data(const MonadTower& tower, const AlgebraData& data);
AlgebraData algebra_to_data(const MonadTower& tower, const Algebra& a);

}  // namespace factoriad
