#include "factoriad/freyd.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "factoriad/factsys.hpp"
#include "factoriad/monad.hpp"

namespace factoriad {

int FreydCat::square(int src_bm, int tgt_bm, int top_bm, int bot_bm) const {
  int s = arrows.square(src_bm, tgt_bm, top_bm, bot_bm);
  return s < 0 ? -1 : projection.on_morphisms[s];
}

int FreydCat::square_or_throw(int src_bm, int tgt_bm, int top_bm, int bot_bm) const {
  return projection.on_morphisms[arrows.square_or_throw(src_bm, tgt_bm, top_bm, bot_bm)];
}

Congruence freyd_congruence(const ArrowCat& a) {
  std::map<std::tuple<int, int, int>, int> anchor;  // (src, tgt, diagonal) -> first seen
  std::vector<std::pair<int, int>> related;
  for (int m = 0; m < a.cat->morphism_count(); ++m) {
    std::tuple<int, int, int> key{a.cat->dom(m), a.cat->cod(m), a.diag[m]};
    auto [it, inserted] = anchor.try_emplace(key, m);
    if (!inserted) related.push_back({it->second, m});
  }
  return make_congruence(a.cat, related);
}

FreydCat freyd_completion_from(ArrowCat arrows) {
  FreydCat f;
  f.base = arrows.base;
  f.arrows = std::move(arrows);
  Congruence cong = freyd_congruence(f.arrows);
  QuotientResult q = quotient(f.arrows.cat, cong);
  f.cat = q.cat;
  f.projection = std::move(q.projection);

  const FinCategory& b = *f.base;
  f.object_of.resize(f.cat->object_count());
  f.object_index.assign(b.morphism_count(), -1);
  for (int o = 0; o < f.cat->object_count(); ++o) {
    int bm = b.morphism_index(f.cat->object_name(o));
    if (bm < 0) throw CatError("freyd completion: object '" + f.cat->object_name(o) + "' lost");
    f.object_of[o] = bm;
    f.object_index[bm] = o;
  }

  f.reps.assign(f.cat->morphism_count(), {});
  f.diag.assign(f.cat->morphism_count(), -1);
  for (std::size_t c = 0; c < cong.classes.size(); ++c) {
    int cls = f.projection.on_morphisms[cong.classes[c][0]];
    f.reps[cls] = cong.classes[c];
    f.diag[cls] = f.arrows.diag[cong.classes[c][0]];
  }
  return f;
}

FreydCat freyd_completion(CatPtr base) { return freyd_completion_from(arrow_category(base)); }

MorphismClassPair canonical_proper_strict_fs(const FreydCat& f) {
  const FinCategory& b = *f.base;
  MorphismClassPair pair;
  pair.left.assign(f.cat->morphism_count(), 0);
  pair.right.assign(f.cat->morphism_count(), 0);
  for (int m = 0; m < f.cat->morphism_count(); ++m) {
    for (int r : f.reps[m]) {
      if (b.is_identity(f.arrows.top(r))) pair.left[m] = 1;
      if (b.is_identity(f.arrows.bottom(r))) pair.right[m] = 1;
    }
  }
  return pair;
}

MorphismClassPair spanned_fs(const FreydCat& f) {
  StrictFactorisationSystem strict = strict_fs_from_class_pair(f.cat, canonical_proper_strict_fs(f));
  FactorisationSystem spanned = span_strict(strict);

  // split-epi characterization of E, checked against the span
  const FinCategory& b = *f.base;
  for (int m = 0; m < f.cat->morphism_count(); ++m) {
    int x = f.object_of[f.cat->dom(m)];
    int y = f.object_of[f.cat->cod(m)];
    int top = f.top(m);
    bool split = false;
    for (int u : b.hom(b.dom(y), b.dom(x))) {
      int tu = b.compose(top, u);
      if (tu >= 0 && b.compose(y, tu) == y) {
        split = true;
        break;
      }
    }
    if (split != (spanned.in_e[m] != 0))
      throw CatError("spanned fs disagrees with the split-epi characterization at '" +
                     f.cat->morphism_name(m) + "'");
  }

  MorphismClassPair pair;
  pair.left = spanned.in_e;
  pair.right = spanned.in_m;
  return pair;
}

Functor freyd_unit(const FreydCat& f) {
  return compose_functors(f.projection, arrow_unit(f.arrows));
}

Functor freyd_mult(const FreydCat& f, const FreydCat& ff) {
  if (!same_category(ff.base, f.cat)) throw CatError("freyd_mult: ff must complete f.cat");
  const FinCategory& b = *f.base;

  Functor mu;
  mu.source = ff.cat;
  mu.target = f.cat;
  mu.on_objects.resize(ff.cat->object_count());
  mu.on_morphisms.assign(ff.cat->morphism_count(), -1);
  for (int o = 0; o < ff.cat->object_count(); ++o)
    mu.on_objects[o] = f.object_index[f.diag[ff.object_of[o]]];

  for (int m = 0; m < ff.cat->morphism_count(); ++m) {
    int value = -1;
    for (int rep : ff.reps[m]) {
      int xi0 = ff.arrows.object_of[ff.arrows.cat->dom(rep)];
      int xi1 = ff.arrows.object_of[ff.arrows.cat->cod(rep)];
      int d0 = f.diag[xi0];
      int d1 = f.diag[xi1];
      int left_class = ff.arrows.top(rep);     // f.cat morphism
      int right_class = ff.arrows.bottom(rep);
      for (int lr : f.reps[left_class]) {
        for (int rr : f.reps[right_class]) {
          int top = f.arrows.top(lr);
          int bot = f.arrows.bottom(rr);
          int cls = f.square(d0, d1, top, bot);
          if (cls < 0)
            throw CatError("freyd_mult: square (" + b.morphism_name(top) + "|" +
                           b.morphism_name(bot) + ") over the diagonals does not commute");
          if (value < 0) value = cls;
          if (cls != value)
            throw CatError("freyd_mult: value depends on the representative at '" +
                           ff.cat->morphism_name(m) + "'");
        }
      }
    }
    mu.on_morphisms[m] = value;
  }
  return mu;
}

Functor freyd_map(const FreydCat& fc, const FreydCat& fd, const Functor& g) {
  if (!same_category(g.source, fc.base) || !same_category(g.target, fd.base))
    throw CatError("freyd_map: functor endpoints do not match the completions");
  Functor r;
  r.source = fc.cat;
  r.target = fd.cat;
  r.on_objects.resize(fc.cat->object_count());
  r.on_morphisms.assign(fc.cat->morphism_count(), -1);
  for (int o = 0; o < fc.cat->object_count(); ++o)
    r.on_objects[o] = fd.object_index[g.mor(fc.object_of[o])];
  for (int m = 0; m < fc.cat->morphism_count(); ++m) {
    int value = -1;
    for (int rep : fc.reps[m]) {
      int src = g.mor(fc.arrows.object_of[fc.arrows.cat->dom(rep)]);
      int tgt = g.mor(fc.arrows.object_of[fc.arrows.cat->cod(rep)]);
      int cls = fd.square_or_throw(src, tgt, g.mor(fc.arrows.top(rep)), g.mor(fc.arrows.bottom(rep)));
      if (value < 0) value = cls;
      if (cls != value)
        throw CatError("freyd_map: value depends on the representative at '" +
                       fc.cat->morphism_name(m) + "'");
    }
    r.on_morphisms[m] = value;
  }
  return r;
}

CheckReport check_epi_mono_transfer(const FreydCat& f) {
  CheckReport report;
  const FinCategory& b = *f.base;
  std::vector<char> epi(b.morphism_count()), mono(b.morphism_count());
  for (int m = 0; m < b.morphism_count(); ++m) {
    epi[m] = is_epi(b, m) ? 1 : 0;
    mono[m] = is_mono(b, m) ? 1 : 0;
  }
  LawCheck epi_check("epi transfer", "§2 if f' is epi so is [f]");
  LawCheck mono_check("mono transfer", "§2 if f'' is mono so is [f]");
  for (int m = 0; m < f.cat->morphism_count(); ++m) {
    bool top_epi = false, bottom_mono = false;
    for (int r : f.reps[m]) {
      if (epi[f.arrows.top(r)]) top_epi = true;
      if (mono[f.arrows.bottom(r)]) bottom_mono = true;
    }
    if (top_epi && !is_epi(*f.cat, m))
      epi_check.violate("class '" + f.cat->morphism_name(m) + "' is not epi");
    if (bottom_mono && !is_mono(*f.cat, m))
      mono_check.violate("class '" + f.cat->morphism_name(m) + "' is not mono");
  }
  epi_check.flush(report);
  mono_check.flush(report);
  return report;
}

CheckReport check_projection_monad_morphism(CatPtr base, const SizeGuard& guard) {
  require_tower_guard(MonadKind::Fr, *base, guard, "projection-check");

  CheckReport report;
  ArrowCat a = arrow_category(base);
  ArrowCat aa = arrow_category(a.cat);
  FreydCat f = freyd_completion_from(a);         // shares the squares construction
  FreydCat ff = freyd_completion(f.cat);
  FreydCat fr_of_squares = freyd_completion_from(aa);

  Functor eta = arrow_unit(f.arrows);
  Functor mu = arrow_mult(f.arrows, aa);
  Functor eta_prime = freyd_unit(f);
  Functor mu_prime = freyd_mult(f, ff);
  const Functor& p = f.projection;

  LawCheck unit_check("projection preserves units", "§2 (3) strict morphism of monads");
  {
    Functor lhs = compose_functors(p, eta);
    if (!functors_equal(lhs, eta_prime)) unit_check.violate("p . unit != unit'");
  }
  unit_check.flush(report);

  // the squared projection, both ways
  Functor p2_a = compose_functors(freyd_map(fr_of_squares, ff, p), fr_of_squares.projection);
  Functor p2_b = compose_functors(ff.projection, arrow_map(aa, ff.arrows, p));
  LawCheck p2_check("squared projection agrees both ways", "§2 (3) p2 = Fr(p).pP = pFr.P(p)");
  if (!functors_equal(p2_a, p2_b)) {
    for (int m = 0; m < aa.cat->morphism_count(); ++m)
      if (p2_a.on_morphisms[m] != p2_b.on_morphisms[m]) {
        p2_check.violate("at square '" + aa.cat->morphism_name(m) + "'");
        break;
      }
  }
  p2_check.flush(report);

  LawCheck mult_check("projection intertwines multiplications", "§2 (3) strict morphism of monads");
  {
    Functor lhs = compose_functors(p, mu);
    Functor rhs = compose_functors(mu_prime, p2_a);
    if (!functors_equal(lhs, rhs)) {
      for (int o = 0; o < aa.cat->object_count(); ++o)
        if (lhs.on_objects[o] != rhs.on_objects[o]) {
          mult_check.violate("at object '" + aa.cat->object_name(o) + "'");
          break;
        }
      for (int m = 0; m < aa.cat->morphism_count(); ++m)
        if (lhs.on_morphisms[m] != rhs.on_morphisms[m]) {
          mult_check.violate("at square '" + aa.cat->morphism_name(m) + "'");
          break;
        }
    }
  }
  mult_check.flush(report);
  return report;
}

}  // namespace factoriad
