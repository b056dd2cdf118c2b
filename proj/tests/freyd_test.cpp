#include "doctest.h"
#include "factoriad/factsys.hpp"
#include "factoriad/fincat.hpp"
#include "factoriad/fixtures.hpp"
#include "factoriad/freyd.hpp"
#include "factoriad/monad.hpp"

using namespace factoriad;

namespace {

std::vector<CatPtr> corpus() {
  return {fixtures::two(), fixtures::three(), fixtures::idem(), fixtures::split(),
          fixtures::pair()};
}

}  // namespace

TEST_CASE("diagonal congruence") {
  SUBCASE("discrete on a thin base") {
    ArrowCat a = arrow_category(fixtures::two());
    Congruence cong = freyd_congruence(a);
    CHECK(validate_congruence(cong));
    CHECK(static_cast<int>(cong.classes.size()) == a.cat->morphism_count());
  }

  SUBCASE("split merges parallel squares over one diagonal") {
    CatPtr split = fixtures::split();
    ArrowCat a = arrow_category(split);
    Congruence cong = freyd_congruence(a);
    CHECK(validate_congruence(cong));
    int p = split->morphism_index("p");
    int sq1 = a.square_or_throw(p, p, split->morphism_index("e"), split->morphism_index("idB"));
    int sq2 = a.square_or_throw(p, p, split->morphism_index("idA"), split->morphism_index("idB"));
    CHECK(sq1 != sq2);
    CHECK(cong.class_of[sq1] == cong.class_of[sq2]);
  }

  SUBCASE("identity squares are singletons unless a parallel square shares their diagonal") {
    ArrowCat a2 = arrow_category(fixtures::two());
    Congruence c2 = freyd_congruence(a2);
    for (int o = 0; o < a2.cat->object_count(); ++o)
      CHECK(c2.classes[c2.class_of[a2.cat->identity(o)]].size() == 1);

    CatPtr split = fixtures::split();
    ArrowCat as = arrow_category(split);
    Congruence cs = freyd_congruence(as);
    int e_obj = as.object_index[split->morphism_index("e")];
    // (e, e): e -> e shares the diagonal e with the identity square of e
    CHECK(cs.classes[cs.class_of[as.cat->identity(e_obj)]].size() > 1);
  }

  SUBCASE("one seed merge closes to a valid congruence inside the diagonal one") {
    CatPtr split = fixtures::split();
    ArrowCat a = arrow_category(split);
    int p = split->morphism_index("p");
    int sq1 = a.square_or_throw(p, p, split->morphism_index("e"), split->morphism_index("idB"));
    int sq2 = a.square_or_throw(p, p, split->morphism_index("idA"), split->morphism_index("idB"));
    Congruence seeded = make_congruence(a.cat, {{sq1, sq2}});
    CHECK(validate_congruence(seeded));
    CHECK(seeded.class_of[sq1] == seeded.class_of[sq2]);
    // the closure stays within the full diagonal congruence
    Congruence full = freyd_congruence(a);
    for (const auto& cls : seeded.classes)
      for (int m : cls) CHECK(full.class_of[m] == full.class_of[cls[0]]);
  }
}

TEST_CASE("completion sizes and structure") {
  FreydCat two = freyd_completion(fixtures::two());
  CHECK(two.cat->object_count() == 3);
  CHECK(two.cat->morphism_count() == 6);
  CHECK(same_category(two.cat, arrow_category(fixtures::two()).cat));

  FreydCat split = freyd_completion(fixtures::split());
  CHECK(split.cat->morphism_count() < split.arrows.cat->morphism_count());
  CHECK(split.cat->morphism_count() == 26);

  FreydCat idem = freyd_completion(fixtures::idem());
  CHECK(idem.cat->object_count() == 2);
  CHECK(idem.cat->morphism_count() == 5);

  for (const auto& c : corpus()) {
    FreydCat f = freyd_completion(c);
    CHECK(validate_category(*f.cat).ok());
    CHECK(check_functor(f.projection));
    // full: every class keeps the endpoints of its representatives
    for (int m = 0; m < f.cat->morphism_count(); ++m) {
      CHECK_FALSE(f.reps[m].empty());
      for (int r : f.reps[m]) {
        CHECK(f.projection.on_morphisms[r] == m);
        CHECK(f.arrows.diag[r] == f.diag[m]);  // diagonal constant on the class
      }
    }
  }
}

TEST_CASE("epi and mono transfer to classes") {
  for (const auto& c : corpus()) {
    FreydCat f = freyd_completion(c);
    CheckReport report = check_epi_mono_transfer(f);
    CAPTURE(c->objects());
    CHECK(report.ok());
  }
}

TEST_CASE("canonical proper strict classes") {
  for (const auto& c : corpus()) {
    FreydCat f = freyd_completion(c);
    MorphismClassPair pair = canonical_proper_strict_fs(f);
    StrictFactorisationSystem strict = strict_fs_from_class_pair(f.cat, pair);
    CAPTURE(c->objects());
    CHECK(is_strict_fs(strict));
    CHECK(is_proper_strict(strict));

    // identity classes sit in both parts
    for (int o = 0; o < f.cat->object_count(); ++o) {
      CHECK(pair.left[f.cat->identity(o)]);
      CHECK(pair.right[f.cat->identity(o)]);
    }

    // canonical factorisation: [f] = [f',1].[1,f''] with both diagonals f-bar
    const FinCategory& b = *c;
    for (int m = 0; m < f.cat->morphism_count(); ++m) {
      int x = f.object_of[f.cat->dom(m)];
      int y = f.object_of[f.cat->cod(m)];
      int top = f.top(m);
      int bot = f.bottom(m);
      int d = f.diag[m];
      int left = f.square_or_throw(x, d, b.identity(b.dom(x)), bot);
      int right = f.square_or_throw(d, y, top, b.identity(b.cod(y)));
      CHECK(f.cat->compose(right, left) == m);
      CHECK(f.diag[left] == d);
      CHECK(f.diag[right] == d);
      CHECK(pair.left[left]);
      CHECK(pair.right[right]);
    }
  }
}

TEST_CASE("spanned fs agrees with the split-epi characterization") {
  for (const auto& c : corpus()) {
    FreydCat f = freyd_completion(c);
    // spanned_fs throws if the characterization disagrees with the span
    MorphismClassPair spanned = spanned_fs(f);
    FactorisationSystem fs = fs_from_class_pair(f.cat, spanned);
    CAPTURE(c->objects());
    CHECK(is_fs(fs));
    CHECK(is_proper(fs));
    for (int o = 0; o < f.cat->object_count(); ++o) {
      CHECK(spanned.left[f.cat->identity(o)]);
      CHECK(spanned.right[f.cat->identity(o)]);
    }
  }

  // the canonical epi [1, a] of the completion of two
  CatPtr two = fixtures::two();
  FreydCat f = freyd_completion(two);
  MorphismClassPair spanned = spanned_fs(f);
  int a = two->morphism_index("a");
  int cls = f.square_or_throw(two->morphism_index("id0"), a, two->morphism_index("id0"), a);
  CHECK(spanned.left[cls]);
}

TEST_CASE("unit of the completion") {
  CatPtr two = fixtures::two();
  FreydCat f = freyd_completion(two);
  Functor unit = freyd_unit(f);
  CHECK(check_functor(unit));
  int a = two->morphism_index("a");
  int expected = f.square_or_throw(two->morphism_index("id0"), two->morphism_index("id1"), a, a);
  CHECK(unit.on_morphisms[a] == expected);
}

TEST_CASE("multiplication of the completion is representative-independent") {
  for (const auto& c : corpus()) {
    FreydCat f = freyd_completion(c);
    FreydCat ff = freyd_completion(f.cat);
    // freyd_mult throws on representative dependence
    Functor mu = freyd_mult(f, ff);
    CAPTURE(c->objects());
    CHECK(check_functor(mu));
  }

  // split: [e, idB]: p -> p collapses onto the class over p
  CatPtr split = fixtures::split();
  FreydCat f = freyd_completion(split);
  FreydCat ff = freyd_completion(f.cat);
  Functor mu = freyd_mult(f, ff);
  int p = split->morphism_index("p");
  int cls = f.square_or_throw(p, p, split->morphism_index("e"), split->morphism_index("idB"));
  int obj = ff.object_index[cls];
  CHECK(f.object_of[mu.on_objects[obj]] == p);
}

TEST_CASE("completion monad laws") {
  for (const auto& c : corpus()) {
    CheckReport report = check_monad_laws(MonadKind::Fr, c);
    CAPTURE(c->objects());
    CHECK(report.ok());
  }
  CHECK(check_monad_laws(MonadKind::Fr, fixtures::empty()).ok());
  CHECK(check_monad_laws(MonadKind::Fr, fixtures::one()).ok());
}

TEST_CASE("projection is a strict morphism of monads") {
  for (const auto& c : corpus()) {
    CheckReport report = check_projection_monad_morphism(c);
    CAPTURE(c->objects());
    for (const auto& r : report.records) {
      CAPTURE(r.law);
      CHECK(r.pass);
    }
  }
}
