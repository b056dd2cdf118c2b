#include <algorithm>

#include "doctest.h"
#include "factoriad/algcorr.hpp"
#include "factoriad/fincat.hpp"
#include "factoriad/fixtures.hpp"
#include "testcats.hpp"

using namespace factoriad;
using testcats::group_z2;
using testcats::iso_pair;

namespace {

std::vector<CatPtr> corpus() {
  return {fixtures::two(), fixtures::three(), fixtures::idem(), fixtures::split(),
          fixtures::pair()};
}

Algebra face_algebra(const MonadTower& tower, bool lower) {
  FacePair face = faces(tower.t.arrow);
  return Algebra{MonadKind::P, tower.base, lower ? face.lower : face.upper, {}};
}

}  // namespace

TEST_CASE("the two face algebras are strict for every fixture") {
  for (const auto& c : corpus()) {
    MonadTower tower = make_tower(MonadKind::P, c);
    CAPTURE(c->objects());
    CHECK(check_strict_algebra(tower, face_algebra(tower, true)).ok());
    CHECK(check_strict_algebra(tower, face_algebra(tower, false)).ok());
  }
}

TEST_CASE("a unit-law functor that is not an algebra fails associativity") {
  CatPtr idem = fixtures::idem();
  MonadTower tower = make_tower(MonadKind::P, idem);

  int candidates = 0, algebras = 0, assoc_failures = 0;
  for (const auto& t : enumerate_functors(tower.t.cat(), idem)) {
    if (!functors_equal(compose_functors(t, tower.unit), identity_functor(idem))) continue;
    ++candidates;
    Algebra a{MonadKind::P, idem, t, {}};
    CheckReport report = check_strict_algebra(tower, a);
    if (report.ok()) {
      ++algebras;
    } else {
      for (const auto& r : report.records)
        if (!r.pass) {
          CHECK(r.law == "associativity t.Tt = t.mult");
          CHECK_FALSE(r.counterexample.empty());
        }
      ++assoc_failures;
    }
  }
  CHECK(algebras == 2);
  CHECK(candidates > algebras);
  CHECK(assoc_failures == candidates - algebras);
}

TEST_CASE("structure legs") {
  for (const auto& c : corpus()) {
    MonadTower tower = make_tower(MonadKind::P, c);
    const FinCategory& b = *c;

    SUBCASE("lower face: left leg is the identity, right leg the morphism") {
      Algebra lower = face_algebra(tower, true);
      AlgebraLegs legs = algebra_legs(tower, lower);
      CHECK(check_natural(legs.left));
      CHECK(check_natural(legs.right));
      for (int o = 0; o < tower.t.cat()->object_count(); ++o) {
        int x = tower.t.object_of(o);
        CHECK(legs.left.components[o] == b.identity(b.dom(x)));
        CHECK(legs.right.components[o] == x);
      }
    }
    SUBCASE("upper face: dual") {
      Algebra upper = face_algebra(tower, false);
      AlgebraLegs legs = algebra_legs(tower, upper);
      for (int o = 0; o < tower.t.cat()->object_count(); ++o) {
        int x = tower.t.object_of(o);
        CHECK(legs.left.components[o] == x);
        CHECK(legs.right.components[o] == b.identity(b.cod(x)));
      }
    }
    SUBCASE("legs recompose the morphism and collapse on units") {
      for (const auto& fs : enumerate_fs(c)) {
        Algebra a = fs_to_pseudo_algebra(tower, fs, default_choice(fs));
        AlgebraLegs legs = algebra_legs(tower, a);
        CHECK(check_natural(legs.left));
        CHECK(check_natural(legs.right));
        for (int o = 0; o < tower.t.cat()->object_count(); ++o) {
          int x = tower.t.object_of(o);
          CHECK(b.compose(legs.right.components[o], legs.left.components[o]) == x);
          if (b.is_identity(x)) {
            CHECK(b.is_identity(legs.left.components[o]));
            CHECK(b.is_identity(legs.right.components[o]));
          }
        }
      }
    }
    SUBCASE("legs agree with the connection squares") {
      ArrowCat aa = arrow_category(tower.t.cat());
      ConnectionPair conn = connections(tower.t.arrow, aa);
      for (const auto& fs : enumerate_fs(c)) {
        Algebra a = fs_to_pseudo_algebra(tower, fs, default_choice(fs));
        AlgebraLegs legs = algebra_legs(tower, a);
        for (int o = 0; o < tower.t.cat()->object_count(); ++o) {
          int upper_sq = aa.object_of[conn.upper.on_objects[o]];
          int lower_sq = aa.object_of[conn.lower.on_objects[o]];
          CHECK(legs.left.components[o] == a.structure.on_morphisms[upper_sq]);
          CHECK(legs.right.components[o] == a.structure.on_morphisms[lower_sq]);
        }
      }
    }
  }
}

TEST_CASE("derived systems of the face algebras") {
  for (const auto& c : corpus()) {
    MonadTower tower = make_tower(MonadKind::P, c);
    FactorisationSystem from_lower = algebra_to_fs(tower, face_algebra(tower, true));
    FactorisationSystem from_upper = algebra_to_fs(tower, face_algebra(tower, false));
    for (int f = 0; f < c->morphism_count(); ++f) {
      CHECK(from_lower.in_e[f] == (is_iso(*c, f) ? 1 : 0));
      CHECK(from_lower.in_m[f] == 1);
      CHECK(from_upper.in_e[f] == 1);
      CHECK(from_upper.in_m[f] == (is_iso(*c, f) ? 1 : 0));
    }
  }
}

TEST_CASE("pseudo algebras derived from systems pass every condition") {
  for (const auto& c : corpus()) {
    MonadTower tower = make_tower(MonadKind::P, c);
    for (const auto& fs : enumerate_fs(c)) {
      Algebra a = fs_to_pseudo_algebra(tower, fs, default_choice(fs));
      CheckReport report = check_pseudo_algebra(tower, a);
      CAPTURE(c->objects());
      for (const auto& r : report.records) {
        CAPTURE(r.law);
        CHECK(r.pass);
      }
      // the derived system never reads the coherence table
      Algebra stripped = a;
      stripped.coherence.clear();
      CHECK(algebra_to_fs(tower, a) == algebra_to_fs(tower, stripped));
    }
  }
}

TEST_CASE("coherence corruption fails 3.3 with a located counterexample") {
  CatPtr z2 = group_z2();
  MonadTower tower = make_tower(MonadKind::P, z2);
  Algebra a = face_algebra(tower, true);
  CHECK(check_strict_algebra(tower, a).ok());

  // explicit identity coherence, then a non-identity iso at a unit image
  const FinCategory& c2 = *tower.tt.cat();
  a.coherence.assign(c2.object_count(), -1);
  for (int o = 0; o < c2.object_count(); ++o)
    a.coherence[o] = z2->identity(a.structure.on_objects[tower.mult.on_objects[o]]);
  CHECK(check_pseudo_algebra(tower, a).ok());

  Functor map_unit = monad_map(tower.t, tower.tt, tower.unit);
  int target = map_unit.on_objects[tower.t.object_index(z2->morphism_index("g"))];
  a.coherence[target] = z2->morphism_index("g");  // iso, but not the identity
  CheckReport report = check_pseudo_algebra(tower, a);
  CHECK_FALSE(report.ok());
  bool located = false;
  for (const auto& r : report.records) {
    if (r.law == "3.2 components invertible") CHECK(r.pass);
    if (r.law == "3.3 coherence on unit squares" && !r.pass && !r.counterexample.empty())
      located = true;
  }
  CHECK(located);
}

TEST_CASE("strict correspondence is a bijection with identity round trips") {
  for (const auto& c : {fixtures::two(), fixtures::idem(), fixtures::split(), fixtures::pair(),
                        fixtures::three()}) {
    MonadTower tower = make_tower(MonadKind::P, c);
    auto systems = enumerate_strict_fs(c);
    auto algebras = enumerate_strict_algebras(MonadKind::P, c);
    CAPTURE(c->objects());
    CHECK(systems.size() == algebras.size());
    for (const auto& fs : systems) {
      Algebra a = strict_fs_to_algebra(tower, fs);
      CHECK(check_strict_algebra(tower, a).ok());
      CHECK(strict_algebra_to_strict_fs(tower, a) == fs);
    }
    for (const auto& a : algebras) {
      auto fs = strict_algebra_to_strict_fs(tower, a);
      Algebra back = strict_fs_to_algebra(tower, fs);
      CHECK(functors_equal(back.structure, a.structure));
    }
  }
}

TEST_CASE("strict correspondence counts") {
  CHECK(enumerate_strict_algebras(MonadKind::P, fixtures::two()).size() == 2);
  CHECK(enumerate_strict_algebras(MonadKind::P, fixtures::idem()).size() == 2);
  CHECK(enumerate_strict_algebras(MonadKind::Fr, fixtures::idem()).empty());

  int proper_strict_idem = 0;
  for (const auto& fs : enumerate_strict_fs(fixtures::idem()))
    if (is_proper_strict(fs)) ++proper_strict_idem;
  CHECK(proper_strict_idem == 0);

  SizeGuard tight;
  tight.enumerate_algebras = 2;
  CHECK_THROWS_AS(enumerate_strict_algebras(MonadKind::P, fixtures::two(), tight), GuardError);
}

TEST_CASE("the trivial strict systems give the face algebras") {
  CatPtr two = fixtures::two();
  MonadTower tower = make_tower(MonadKind::P, two);
  auto lower_fs = strict_fs_from_names(two, {"id0", "id1"}, {"a", "id0", "id1"});
  auto upper_fs = strict_fs_from_names(two, {"a", "id0", "id1"}, {"id0", "id1"});
  Algebra from_lower = strict_fs_to_algebra(tower, lower_fs);
  Algebra from_upper = strict_fs_to_algebra(tower, upper_fs);
  FacePair face = faces(tower.t.arrow);
  CHECK(functors_equal(from_lower.structure, face.lower));
  CHECK(functors_equal(from_upper.structure, face.upper));
}

TEST_CASE("legs recompose for every enumerated strict algebra") {
  for (const auto& c : {fixtures::two(), fixtures::idem(), fixtures::split()}) {
    MonadTower tower = make_tower(MonadKind::P, c);
    for (const auto& a : enumerate_strict_algebras(MonadKind::P, c)) {
      AlgebraLegs legs = algebra_legs(tower, a);
      for (int o = 0; o < tower.t.cat()->object_count(); ++o) {
        int x = tower.t.object_of(o);
        CHECK(c->compose(legs.right.components[o], legs.left.components[o]) == x);
      }
    }
  }
}

TEST_CASE("the free algebra on the squares category is the canonical strict system") {
  for (const auto& base : {fixtures::two(), fixtures::pair()}) {
    ArrowCat a = arrow_category(base);
    ArrowCat aa = arrow_category(a.cat);
    MonadTower tower = make_tower(MonadKind::P, a.cat);
    auto strict = strict_fs_from_class_pair(a.cat, canonical_strict_fs(a));
    Algebra alg = strict_fs_to_algebra(tower, strict);
    CAPTURE(base->objects());
    CHECK(check_strict_algebra(tower, alg).ok());
    CHECK(functors_equal(alg.structure, arrow_mult(a, aa)));
  }
  // the idempotent's third iterate overflows the square cap; the tower
  // refuses it cleanly instead of thrashing
  CHECK_THROWS_AS(make_tower(MonadKind::P, arrow_category(fixtures::idem()).cat), GuardError);
}

TEST_CASE("round trip from systems through pseudo algebras") {
  for (const auto& c : corpus()) {
    MonadTower tower = make_tower(MonadKind::P, c);
    for (const auto& fs : enumerate_fs(c)) {
      CAPTURE(c->objects());
      CHECK(roundtrip_fs(tower, fs, default_choice(fs)));
      CHECK(roundtrip_fs(tower, fs, reverse_choice(fs)));
    }
  }
}

TEST_CASE("two choices give a verified pseudo isomorphism") {
  for (const auto& c : corpus()) {
    MonadTower tower = make_tower(MonadKind::P, c);
    for (const auto& fs : enumerate_fs(c)) {
      Algebra a = fs_to_pseudo_algebra(tower, fs, default_choice(fs));
      Algebra b = fs_to_pseudo_algebra(tower, fs, reverse_choice(fs));
      AlgebraMorphism iso = roundtrip_algebra(tower, a, b);
      CheckReport report = check_algebra_morphism(tower, a, tower, b, iso);
      CAPTURE(c->objects());
      for (const auto& r : report.records) {
        CAPTURE(r.law);
        CHECK(r.pass);
      }
      // reflexive case: the comparison collapses to identities
      AlgebraMorphism self = roundtrip_algebra(tower, a, a);
      for (int o = 0; o < tower.t.cat()->object_count(); ++o)
        CHECK(c->is_identity(self.phi[o]));
    }
  }
}

TEST_CASE("a face algebra and its derived-system algebra are pseudo isomorphic") {
  CatPtr split = fixtures::split();
  MonadTower tower = make_tower(MonadKind::P, split);
  Algebra lower = face_algebra(tower, true);
  FactorisationSystem fs = algebra_to_fs(tower, lower);  // (isos, all)
  Algebra derived = fs_to_pseudo_algebra(tower, fs, default_choice(fs));
  AlgebraMorphism iso = roundtrip_algebra(tower, lower, derived);
  CHECK(check_algebra_morphism(tower, lower, tower, derived, iso).ok());

  // algebras inducing different systems are rejected
  CHECK_THROWS_AS(roundtrip_algebra(tower, lower, face_algebra(tower, false)), CatError);
}

TEST_CASE("fs-preserving functors induce coherent algebra morphisms") {
  CatPtr two = fixtures::two();
  MonadTower tx = make_tower(MonadKind::P, two);
  for (const auto& target : {fixtures::split(), fixtures::idem(), fixtures::two()}) {
    MonadTower ty = make_tower(MonadKind::P, target);
    for (const auto& fsx : enumerate_fs(two)) {
      Algebra ax = fs_to_pseudo_algebra(tx, fsx, default_choice(fsx));
      for (const auto& fsy : enumerate_fs(target)) {
        Algebra ay = fs_to_pseudo_algebra(ty, fsy, default_choice(fsy));
        for (const auto& f : enumerate_functors(two, target)) {
          bool preserves = true;
          for (int m = 0; m < two->morphism_count(); ++m) {
            if (fsx.in_e[m] && !fsy.in_e[f.on_morphisms[m]]) preserves = false;
            if (fsx.in_m[m] && !fsy.in_m[f.on_morphisms[m]]) preserves = false;
          }
          if (!preserves) continue;
          AlgebraMorphism m = induced_algebra_morphism(tx, ax, ty, ay, f);
          CheckReport report = check_algebra_morphism(tx, ax, ty, ay, m);
          CAPTURE(target->objects());
          for (const auto& r : report.records) {
            CAPTURE(r.law);
            CHECK(r.pass);
          }
        }
      }
    }
  }
}

TEST_CASE("two-cells between induced morphisms satisfy the exchange condition") {
  CatPtr two = fixtures::two();
  CatPtr split = fixtures::split();
  MonadTower tx = make_tower(MonadKind::P, two);
  MonadTower ty = make_tower(MonadKind::P, split);
  for (const auto& fsx : enumerate_fs(two)) {
    Algebra ax = fs_to_pseudo_algebra(tx, fsx, default_choice(fsx));
    for (const auto& fsy : enumerate_fs(split)) {
      Algebra ay = fs_to_pseudo_algebra(ty, fsy, default_choice(fsy));
      auto functors = enumerate_functors(two, split);
      std::vector<std::pair<Functor, AlgebraMorphism>> preserving;
      for (const auto& f : functors) {
        bool preserves = true;
        for (int m = 0; m < two->morphism_count(); ++m) {
          if (fsx.in_e[m] && !fsy.in_e[f.on_morphisms[m]]) preserves = false;
          if (fsx.in_m[m] && !fsy.in_m[f.on_morphisms[m]]) preserves = false;
        }
        if (preserves) preserving.push_back({f, induced_algebra_morphism(tx, ax, ty, ay, f)});
      }
      for (const auto& [f, mf] : preserving) {
        for (const auto& [g, mg] : preserving) {
          for (const auto& alpha : enumerate_natural(f, g))
            CHECK(check_two_cell(tx, ax, ty, ay, mf, mg, alpha));
        }
      }
    }
  }
}

TEST_CASE("compatibility with the diagonal congruence") {
  CatPtr split = fixtures::split();
  MonadTower tower = make_tower(MonadKind::P, split);

  SUBCASE("the lower face on split is not compatible") {
    CHECK_FALSE(is_r_compatible(tower, face_algebra(tower, true)));
    CHECK_THROWS_AS(
        induce_fr_algebra(tower, make_tower(MonadKind::Fr, split), face_algebra(tower, true)),
        CatError);
  }

  SUBCASE("thin bases are always compatible") {
    for (const auto& c : {fixtures::two(), fixtures::three()}) {
      MonadTower t = make_tower(MonadKind::P, c);
      CHECK(is_r_compatible(t, face_algebra(t, true)));
      CHECK(is_r_compatible(t, face_algebra(t, false)));
    }
  }

  SUBCASE("the proper system's algebra descends to the completion") {
    FactorisationSystem proper = fs_from_names(split, {"idA", "idB", "p"}, {"idA", "idB", "s"});
    REQUIRE(is_fs(proper));
    REQUIRE(is_proper(proper));
    Algebra a = fs_to_pseudo_algebra(tower, proper, default_choice(proper));
    CHECK(is_r_compatible(tower, a));
    MonadTower fr_tower = make_tower(MonadKind::Fr, split);
    Algebra induced = induce_fr_algebra(tower, fr_tower, a);
    CheckReport report = check_pseudo_algebra(fr_tower, induced);
    for (const auto& r : report.records) {
      CAPTURE(r.law);
      CHECK(r.pass);
    }
    // the composite through the projection recovers the original structure
    Functor back = compose_functors(induced.structure, fr_tower.t.fr->projection);
    CHECK(functors_equal(back, a.structure));
  }
}

TEST_CASE("proper correspondence") {
  for (const auto& c : {fixtures::two(), fixtures::idem(), fixtures::split()}) {
    CheckReport report = proper_correspondence_check(c);
    CAPTURE(c->objects());
    for (const auto& r : report.records) {
      CAPTURE(r.law);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("groupoids exercise non-identity coherence") {
  // with non-identity isomorphisms the factorisation choices genuinely
  // differ and the coherence table stops being trivial
  for (const auto& c : {group_z2(), iso_pair()}) {
    MonadTower tower = make_tower(MonadKind::P, c);
    auto systems = enumerate_fs(c);
    REQUIRE(systems.size() == 1);  // a groupoid has only (all, all)
    const auto& fs = systems[0];
    for (int m = 0; m < c->morphism_count(); ++m) {
      CHECK(fs.in_e[m]);
      CHECK(fs.in_m[m]);
    }

    FactorisationChoice lo = default_choice(fs);
    FactorisationChoice hi = reverse_choice(fs);
    bool choices_differ = false;
    for (int m = 0; m < c->morphism_count(); ++m)
      if (lo.triples[m].e != hi.triples[m].e) choices_differ = true;
    CHECK(choices_differ);

    Algebra a = fs_to_pseudo_algebra(tower, fs, lo);
    Algebra b = fs_to_pseudo_algebra(tower, fs, hi);
    int nontrivial = 0;
    for (int o = 0; o < tower.tt.cat()->object_count(); ++o)
      if (!c->is_identity(a.coherence[o])) ++nontrivial;
    // the two-object groupoid is the case with genuinely pseudo coherence;
    // on the one-object group both choices happen to stay strict
    if (c->object_count() == 2) CHECK(nontrivial == 3);
    if (c->object_count() == 1) CHECK(nontrivial == 0);

    CheckReport ra = check_pseudo_algebra(tower, a);
    for (const auto& r : ra.records) {
      CAPTURE(r.law);
      CAPTURE(r.counterexample);
      CHECK(r.pass);
    }
    CHECK(check_pseudo_algebra(tower, b).ok());
    CHECK(roundtrip_fs(tower, fs, lo));
    CHECK(roundtrip_fs(tower, fs, hi));

    // the two choices are linked by a non-identity pseudo isomorphism
    AlgebraMorphism iso = roundtrip_algebra(tower, a, b);
    bool phi_nontrivial = false;
    for (int o = 0; o < tower.t.cat()->object_count(); ++o)
      if (!c->is_identity(iso.phi[o])) phi_nontrivial = true;
    CHECK(phi_nontrivial);
    CheckReport rm = check_algebra_morphism(tower, a, tower, b, iso);
    for (const auto& r : rm.records) {
      CAPTURE(r.law);
      CAPTURE(r.counterexample);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("groupoid strict correspondence and compatibility") {
  for (const auto& c : {group_z2(), iso_pair()}) {
    MonadTower tower = make_tower(MonadKind::P, c);
    auto systems = enumerate_strict_fs(c);
    auto algebras = enumerate_strict_algebras(MonadKind::P, c);
    CHECK(systems.size() == 2);
    CHECK(algebras.size() == 2);
    for (const auto& fs : systems) {
      Algebra a = strict_fs_to_algebra(tower, fs);
      CHECK(strict_algebra_to_strict_fs(tower, a) == fs);
    }
    CHECK(proper_correspondence_check(c).ok());
    // in a groupoid every square already has its diagonal as sole datum
    for (const auto& a : algebras) CHECK(is_r_compatible(tower, a));
  }
  CHECK(check_monad_laws(MonadKind::P, group_z2()).ok());
  CHECK(check_monad_laws(MonadKind::Fr, group_z2()).ok());
  CHECK(check_monad_laws(MonadKind::P, iso_pair()).ok());
  CHECK(check_monad_laws(MonadKind::Fr, iso_pair()).ok());
  CHECK(check_cubical_equations(group_z2()).ok());
  CHECK(check_cubical_equations(iso_pair()).ok());
}

TEST_CASE("algebra tables round trip through the file form") {
  CatPtr split = fixtures::split();
  MonadTower tower = make_tower(MonadKind::P, split);
  FactorisationSystem proper = fs_from_names(split, {"idA", "idB", "p"}, {"idA", "idB", "s"});
  Algebra a = fs_to_pseudo_algebra(tower, proper, default_choice(proper));
  AlgebraData data = algebra_to_data(tower, a);
  Algebra back = algebra_from_data(tower, data);
  CHECK(functors_equal(back.structure, a.structure));
  CHECK(back.coherence == a.coherence);

  AlgebraData broken = data;
  broken.on_morphisms.erase(broken.on_morphisms.begin());
  CHECK_THROWS_AS(algebra_from_data(tower, broken), LoadError);

  // the induced completion algebra round trips through its file form too
  MonadTower fr_tower = make_tower(MonadKind::Fr, split);
  Algebra induced = induce_fr_algebra(tower, fr_tower, a);
  AlgebraData fr_data = algebra_to_data(fr_tower, induced);
  CHECK(fr_data.monad == "Fr");
  Algebra fr_back = algebra_from_data(fr_tower, fr_data);
  CHECK(functors_equal(fr_back.structure, induced.structure));
  CHECK(fr_back.coherence == induced.coherence);
  CHECK(check_pseudo_algebra(fr_tower, fr_back).ok());
}
