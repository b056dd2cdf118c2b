#include "factoriad/algcorr.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace factoriad {

namespace {

// coherence component at a second-iterate object; identity when strict
int theta_at(const MonadTower& tower, const Algebra& a, int tt_obj) {
  if (!a.strict()) return a.coherence[tt_obj];
  int mid = a.structure.on_objects[tower.mult.on_objects[tt_obj]];
  return tower.base->identity(mid);
}

std::string obj_name(const FinCategory& c, int o) { return "'" + c.object_name(o) + "'"; }
std::string mor_name(const FinCategory& c, int m) { return "'" + c.morphism_name(m) + "'"; }

// the square (1, x): unit(dom x) -> x^ as a TX-morphism
int left_unit_square(const MonadTower& tower, int x) {
  const FinCategory& b = *tower.base;
  int id = b.identity(b.dom(x));
  return tower.t.square_or_throw(id, x, id, x);
}

// the square (x, 1): x^ -> unit(cod x)
int right_unit_square(const MonadTower& tower, int x) {
  const FinCategory& b = *tower.base;
  int id = b.identity(b.cod(x));
  return tower.t.square_or_throw(x, id, x, id);
}

}  // namespace

CheckReport check_strict_algebra(const MonadTower& tower, const Algebra& a) {
  CheckReport report;
  const FinCategory& b = *tower.base;
  const char* anchor = "§1 t.Pt = t.muX";

  LawCheck functorial("structure is a functor", "§1 factorisation algebra");
  for (const auto& v : functor_violations(a.structure)) functorial.violate(v);
  functorial.flush(report);

  LawCheck strictness("coherence table absent or identity", anchor);
  if (!a.strict()) {
    for (std::size_t o = 0; o < a.coherence.size(); ++o)
      if (!b.is_identity(a.coherence[o]))
        strictness.violate("component at '" + tower.tt.cat()->object_name(static_cast<int>(o)) +
                           "' is not an identity");
  }
  strictness.flush(report);

  LawCheck unit_law("unit law t.unit = 1", "§1 factorisation algebra");
  {
    Functor lhs = compose_functors(a.structure, tower.unit);
    Functor ident = identity_functor(tower.base);
    if (!functors_equal(lhs, ident)) {
      for (int o = 0; o < b.object_count(); ++o)
        if (lhs.on_objects[o] != o) unit_law.violate("at object " + obj_name(b, o));
      for (int m = 0; m < b.morphism_count(); ++m)
        if (lhs.on_morphisms[m] != m) unit_law.violate("at morphism " + mor_name(b, m));
    }
  }
  unit_law.flush(report);

  LawCheck assoc("associativity t.Tt = t.mult", anchor);
  {
    Functor tt_map = monad_map(tower.tt, tower.t, a.structure);
    Functor lhs = compose_functors(a.structure, tt_map);
    Functor rhs = compose_functors(a.structure, tower.mult);
    const FinCategory& c2 = *tower.tt.cat();
    for (int o = 0; o < c2.object_count(); ++o)
      if (lhs.on_objects[o] != rhs.on_objects[o])
        assoc.violate("at object " + obj_name(c2, o));
    for (int m = 0; m < c2.morphism_count(); ++m)
      if (lhs.on_morphisms[m] != rhs.on_morphisms[m])
        assoc.violate("at morphism " + mor_name(c2, m));
  }
  assoc.flush(report);
  return report;
}

CheckReport check_strict_algebra(const Algebra& a, const SizeGuard& guard) {
  require_tower_guard(a.kind, *a.base, guard, "algebra-check");
  return check_strict_algebra(make_tower(a.kind, a.base), a);
}

CheckReport check_pseudo_algebra(const MonadTower& tower, const Algebra& a) {
  CheckReport report;
  const FinCategory& b = *tower.base;
  const FinCategory& c2 = *tower.tt.cat();

  LawCheck functorial("structure is a functor", "§3 (1)");
  for (const auto& v : functor_violations(a.structure)) functorial.violate(v);
  functorial.flush(report);

  LawCheck unitary("3.1 unitary: t.unit = 1", "§3 (1)");
  {
    Functor lhs = compose_functors(a.structure, tower.unit);
    Functor ident = identity_functor(tower.base);
    if (!functors_equal(lhs, ident)) unitary.violate("t.unit differs from the identity");
  }
  unitary.flush(report);

  Functor tt_map = monad_map(tower.tt, tower.t, a.structure);
  Functor lhs_fun = compose_functors(a.structure, tt_map);   // t.Tt
  Functor rhs_fun = compose_functors(a.structure, tower.mult);  // t.mult

  std::vector<int> theta(c2.object_count());
  for (int o = 0; o < c2.object_count(); ++o) theta[o] = theta_at(tower, a, o);

  LawCheck natural("coherence is natural t.Tt -> t.mult", "§3 (2)");
  {
    NatTransformation n{lhs_fun, rhs_fun, theta};
    for (const auto& v : natural_violations(n)) natural.violate(v);
  }
  natural.flush(report);

  LawCheck iso("3.2 components invertible", "§3 (2)");
  for (int o = 0; o < c2.object_count(); ++o)
    if (!is_iso(b, theta[o])) iso.violate("at " + obj_name(c2, o));
  iso.flush(report);

  LawCheck unit_coh("3.3 coherence on unit squares", "§3 (3)");
  {
    Functor map_unit = monad_map(tower.t, tower.tt, tower.unit);  // T(unit): TX -> T²X
    Functor unit_at = monad_unit(tower.tt);                       // unit at TX
    const FinCategory& c1 = *tower.t.cat();
    for (int o = 0; o < c1.object_count(); ++o) {
      if (!b.is_identity(theta[map_unit.on_objects[o]]))
        unit_coh.violate("T(unit) image of " + obj_name(c1, o));
      if (!b.is_identity(theta[unit_at.on_objects[o]]))
        unit_coh.violate("unit-at-TX image of " + obj_name(c1, o));
    }
  }
  unit_coh.flush(report);

  LawCheck assoc_coh("3.4 associativity coherence", "§3 (4)");
  for (int phi = 0; phi < c2.morphism_count(); ++phi) {
    int xi0 = c2.dom(phi);
    int xi1 = c2.cod(phi);
    // T applied to the coherence, then collapsed by the structure
    int m1 = a.structure.on_morphisms[tt_map.on_morphisms[phi]];
    int m2 = a.structure.on_morphisms[tower.mult.on_morphisms[phi]];
    int t_theta;
    try {
      t_theta = a.structure.on_morphisms[tower.t.square_or_throw(m1, m2, theta[xi0], theta[xi1])];
    } catch (const CatError&) {
      assoc_coh.violate("coherence legs do not form a square at " + mor_name(c2, phi));
      continue;
    }
    int lhs = b.compose(theta[tower.tt.object_index(tower.mult.on_morphisms[phi])], t_theta);
    int rhs = b.compose(theta[tower.tt.object_index(tower.tt.diagonal(phi))],
                        theta[tower.tt.object_index(tt_map.on_morphisms[phi])]);
    if (lhs < 0 || rhs < 0 || lhs != rhs) assoc_coh.violate("at " + mor_name(c2, phi));
  }
  assoc_coh.flush(report);
  return report;
}

CheckReport check_pseudo_algebra(const Algebra& a, const SizeGuard& guard) {
  require_tower_guard(a.kind, *a.base, guard, "algebra-check");
  return check_pseudo_algebra(make_tower(a.kind, a.base), a);
}

AlgebraLegs algebra_legs(const MonadTower& tower, const Algebra& a) {
  if (tower.kind != MonadKind::P)
    throw CatError("legs as natural transformations need the squares construction");
  AlgebraLegs legs;
  FacePair face = faces(tower.t.arrow);
  const FinCategory& c1 = *tower.t.cat();

  legs.left.source = face.lower;
  legs.left.target = a.structure;
  legs.right.source = a.structure;
  legs.right.target = face.upper;
  legs.left.components.resize(c1.object_count());
  legs.right.components.resize(c1.object_count());
  for (int o = 0; o < c1.object_count(); ++o) {
    int x = tower.t.object_of(o);
    legs.left.components[o] = a.structure.on_morphisms[left_unit_square(tower, x)];
    legs.right.components[o] = a.structure.on_morphisms[right_unit_square(tower, x)];
  }
  return legs;
}

namespace {

// membership masks from the legs; works for both constructions
void leg_masks(const MonadTower& tower, const Algebra& a, std::vector<char>& left_iso,
               std::vector<char>& right_iso, std::vector<char>& left_id,
               std::vector<char>& right_id) {
  const FinCategory& b = *tower.base;
  left_iso.assign(b.morphism_count(), 0);
  right_iso.assign(b.morphism_count(), 0);
  left_id.assign(b.morphism_count(), 0);
  right_id.assign(b.morphism_count(), 0);
  for (int x = 0; x < b.morphism_count(); ++x) {
    int left = a.structure.on_morphisms[left_unit_square(tower, x)];
    int right = a.structure.on_morphisms[right_unit_square(tower, x)];
    left_iso[x] = is_iso(b, left) ? 1 : 0;
    right_iso[x] = is_iso(b, right) ? 1 : 0;
    left_id[x] = b.is_identity(left) ? 1 : 0;
    right_id[x] = b.is_identity(right) ? 1 : 0;
  }
}

}  // namespace

FactorisationSystem algebra_to_fs(const MonadTower& tower, const Algebra& a) {
  std::vector<char> left_iso, right_iso, left_id, right_id;
  leg_masks(tower, a, left_iso, right_iso, left_id, right_id);
  FactorisationSystem fs{tower.base, right_iso, left_iso};
  CheckReport check = check_factorisation_system(fs);
  if (!check.ok()) {
    for (const auto& r : check.records)
      if (!r.pass)
        throw CatError("algebra_to_fs: derived classes fail the fs axioms (" + r.law + ": " +
                       r.counterexample + "); the input was not an algebra");
  }
  return fs;
}

StrictFactorisationSystem strict_algebra_to_strict_fs(const MonadTower& tower, const Algebra& a) {
  std::vector<char> left_iso, right_iso, left_id, right_id;
  leg_masks(tower, a, left_iso, right_iso, left_id, right_id);
  StrictFactorisationSystem fs{tower.base, right_id, left_id};
  CheckReport check = check_strict_factorisation_system(fs);
  if (!check.ok())
    throw CatError("strict_algebra_to_strict_fs: derived classes are not a strict fs");
  return fs;
}

Algebra fs_to_pseudo_algebra(const MonadTower& tower, const FactorisationSystem& fs,
                             const FactorisationChoice& choice) {
  if (tower.kind != MonadKind::P)
    throw CatError("fs_to_pseudo_algebra: construction runs over the squares monad");
  if (!same_category(fs.base, tower.base))
    throw CatError("fs_to_pseudo_algebra: fs lives on a different category");
  {
    auto bad = choice_violations(fs, choice);
    if (!bad.empty()) throw CatError("fs_to_pseudo_algebra: " + bad.front());
  }
  const FinCategory& b = *tower.base;
  const ArrowCat& ar = tower.t.arrow;
  const FinCategory& c1 = *tower.t.cat();

  Algebra a;
  a.kind = MonadKind::P;
  a.base = tower.base;
  a.structure.source = tower.t.cat();
  a.structure.target = tower.base;
  a.structure.on_objects.resize(c1.object_count());
  a.structure.on_morphisms.assign(c1.morphism_count(), -1);

  for (int o = 0; o < c1.object_count(); ++o)
    a.structure.on_objects[o] = choice.triples[tower.t.object_of(o)].mid;

  for (int m = 0; m < c1.morphism_count(); ++m) {
    const FactorTriple& tx = choice.triples[ar.object_of[c1.dom(m)]];
    const FactorTriple& ty = choice.triples[ar.object_of[c1.cod(m)]];
    int u = b.compose(ty.e, ar.top(m));
    int v = b.compose(ar.bottom(m), tx.m);
    int found = -1;
    for (int w : b.hom(tx.mid, ty.mid)) {
      if (b.compose(w, tx.e) == u && b.compose(ty.m, w) == v) {
        if (found >= 0)
          throw CatError("fs_to_pseudo_algebra: fill-in not unique at " + mor_name(*ar.cat, m));
        found = w;
      }
    }
    if (found < 0)
      throw CatError("fs_to_pseudo_algebra: no fill-in at " + mor_name(*ar.cat, m));
    a.structure.on_morphisms[m] = found;
  }

  if (!check_functor(a.structure))
    throw CatError("fs_to_pseudo_algebra: induced structure is not a functor");

  // coherence: compare the two factorisations of each square's diagonal
  const FinCategory& c2 = *tower.tt.cat();
  a.coherence.assign(c2.object_count(), -1);
  for (int o = 0; o < c2.object_count(); ++o) {
    int xi = tower.tt.object_of(o);  // a TX-morphism (a square)
    const FactorTriple& tx = choice.triples[ar.object_of[c1.dom(xi)]];
    const FactorTriple& ty = choice.triples[ar.object_of[c1.cod(xi)]];
    int w = a.structure.on_morphisms[xi];
    const FactorTriple& tw = choice.triples[w];
    FactorTriple outer{b.compose(tw.e, tx.e), tw.mid, b.compose(ty.m, tw.m)};
    const FactorTriple& inner = choice.triples[ar.diag[xi]];
    if (outer.e < 0 || outer.m < 0 || b.compose(outer.m, outer.e) != ar.diag[xi])
      throw CatError("fs_to_pseudo_algebra: outer factorisation broken at " +
                     mor_name(*ar.cat, xi));
    a.coherence[o] = comparison_iso(b, outer, inner);
  }
  return a;
}

Algebra strict_fs_to_algebra(const MonadTower& tower, const StrictFactorisationSystem& fs) {
  FactorisationSystem spanned = span_strict(fs);
  const FinCategory& b = *tower.base;

  // the strict factorisations themselves are the choice
  FactorisationChoice choice;
  choice.base = fs.base;
  choice.triples.resize(b.morphism_count());
  for (int u = 0; u < b.morphism_count(); ++u) {
    FactorTriple triple;
    int count = 0;
    for (int e = 0; e < b.morphism_count(); ++e) {
      if (!fs.in_e0[e] || b.dom(e) != b.dom(u)) continue;
      for (int mm : b.hom(b.cod(e), b.cod(u))) {
        if (fs.in_m0[mm] && b.compose(mm, e) == u) {
          triple = {e, b.cod(e), mm};
          ++count;
        }
      }
    }
    if (count != 1) throw CatError("strict_fs_to_algebra: input is not strictly unique");
    choice.triples[u] = triple;
  }

  Algebra a = fs_to_pseudo_algebra(tower, spanned, choice);
  for (std::size_t o = 0; o < a.coherence.size(); ++o) {
    if (!b.is_identity(a.coherence[o]))
      throw CatError("strict_fs_to_algebra: coherence is not the identity at '" +
                     tower.tt.cat()->object_name(static_cast<int>(o)) + "'");
  }
  a.coherence.clear();  // strict on the nose
  return a;
}

CheckReport check_algebra_morphism(const MonadTower& tx, const Algebra& ax, const MonadTower& ty,
                                   const Algebra& ay, const AlgebraMorphism& m) {
  CheckReport report;
  const FinCategory& y = *ty.base;
  const FinCategory& c1x = *tx.t.cat();

  Functor tf = monad_map(tx.t, ty.t, m.f);  // T(F)

  LawCheck natural("phi is natural F.t -> t'.TF", "§3 (5)");
  {
    NatTransformation n{compose_functors(m.f, ax.structure), compose_functors(ay.structure, tf),
                        m.phi};
    for (const auto& v : natural_violations(n)) natural.violate(v);
  }
  natural.flush(report);

  LawCheck iso("phi components invertible", "§3 (5)");
  for (int o = 0; o < c1x.object_count(); ++o)
    if (!is_iso(y, m.phi[o])) iso.violate("at " + obj_name(c1x, o));
  iso.flush(report);

  LawCheck unit_coh("3.5 phi on unit objects", "§3 (5)");
  for (int o = 0; o < tx.base->object_count(); ++o) {
    if (!y.is_identity(m.phi[tx.unit.on_objects[o]]))
      unit_coh.violate("at object '" + tx.base->object_name(o) + "'");
  }
  unit_coh.flush(report);

  LawCheck mult_coh("3.6 phi against multiplication", "§3 (6)");
  {
    Functor tt_map_x = monad_map(tx.tt, tx.t, ax.structure);  // Tt over X
    Functor ttf = monad_map(tx.tt, ty.tt, tf);                // T²F
    const FinCategory& c2x = *tx.tt.cat();
    for (int xi = 0; xi < c2x.object_count(); ++xi) {
      int theta_x = theta_at(tx, ax, xi);
      int lhs = y.compose(m.phi[tx.mult.on_objects[xi]], m.f.on_morphisms[theta_x]);

      int txm = tx.tt.object_of(xi);  // TX-morphism under xi
      int m1 = m.f.on_morphisms[ax.structure.on_morphisms[txm]];
      int m2 = ay.structure.on_morphisms[tf.on_morphisms[txm]];
      int t_phi;
      try {
        t_phi = ay.structure.on_morphisms[ty.t.square_or_throw(
            m1, m2, m.phi[c1x.dom(txm)], m.phi[c1x.cod(txm)])];
      } catch (const CatError&) {
        mult_coh.violate("phi legs do not form a square at " + obj_name(c2x, xi));
        continue;
      }
      int theta_y = theta_at(ty, ay, ttf.on_objects[xi]);
      int rhs = y.compose(theta_y, y.compose(t_phi, m.phi[tt_map_x.on_objects[xi]]));
      if (lhs < 0 || rhs < 0 || lhs != rhs) mult_coh.violate("at " + obj_name(c2x, xi));
    }
  }
  mult_coh.flush(report);
  return report;
}

bool check_two_cell(const MonadTower& tx, const Algebra& ax, const MonadTower& ty,
                    const Algebra& ay, const AlgebraMorphism& m1, const AlgebraMorphism& m2,
                    const NatTransformation& alpha) {
  const FinCategory& y = *ty.base;
  const FinCategory& c1x = *tx.t.cat();
  for (int o = 0; o < c1x.object_count(); ++o) {
    int x = tx.t.object_of(o);
    int lhs = y.compose(m2.phi[o], alpha.components[ax.structure.on_objects[o]]);
    int square;
    try {
      square = ty.t.square_or_throw(m1.f.on_morphisms[x], m2.f.on_morphisms[x],
                                    alpha.components[tx.base->dom(x)],
                                    alpha.components[tx.base->cod(x)]);
    } catch (const CatError&) {
      return false;
    }
    int rhs = y.compose(ay.structure.on_morphisms[square], m1.phi[o]);
    if (lhs < 0 || rhs < 0 || lhs != rhs) return false;
  }
  return true;
}

AlgebraMorphism induced_algebra_morphism(const MonadTower& tx, const Algebra& ax,
                                         const MonadTower& ty, const Algebra& ay,
                                         const Functor& f) {
  const FinCategory& y = *ty.base;
  const FinCategory& c1x = *tx.t.cat();
  AlgebraMorphism m;
  m.f = f;
  m.phi.resize(c1x.object_count());
  for (int o = 0; o < c1x.object_count(); ++o) {
    int x = tx.t.object_of(o);
    int fx = f.on_morphisms[x];
    int left_x = ax.structure.on_morphisms[left_unit_square(tx, x)];
    int right_x = ax.structure.on_morphisms[right_unit_square(tx, x)];
    FactorTriple image{f.on_morphisms[left_x], f.on_objects[tx.base->cod(left_x)],
                       f.on_morphisms[right_x]};
    int fo = ty.t.object_index(fx);
    FactorTriple chosen{ay.structure.on_morphisms[left_unit_square(ty, fx)],
                        ay.structure.on_objects[fo],
                        ay.structure.on_morphisms[right_unit_square(ty, fx)]};
    m.phi[o] = comparison_iso(y, image, chosen);
  }
  return m;
}

bool roundtrip_fs(const MonadTower& tower, const FactorisationSystem& fs,
                  const FactorisationChoice& choice) {
  Algebra a = fs_to_pseudo_algebra(tower, fs, choice);
  return algebra_to_fs(tower, a) == fs;
}

AlgebraMorphism roundtrip_algebra(const MonadTower& tower, const Algebra& a, const Algebra& b) {
  if (!(algebra_to_fs(tower, a) == algebra_to_fs(tower, b)))
    throw CatError("roundtrip_algebra: the algebras induce different systems");
  const FinCategory& base = *tower.base;
  const FinCategory& c1 = *tower.t.cat();
  AlgebraMorphism m;
  m.f = identity_functor(tower.base);
  m.phi.resize(c1.object_count());
  for (int o = 0; o < c1.object_count(); ++o) {
    int x = tower.t.object_of(o);
    FactorTriple fa{a.structure.on_morphisms[left_unit_square(tower, x)],
                    a.structure.on_objects[o],
                    a.structure.on_morphisms[right_unit_square(tower, x)]};
    FactorTriple fb{b.structure.on_morphisms[left_unit_square(tower, x)],
                    b.structure.on_objects[o],
                    b.structure.on_morphisms[right_unit_square(tower, x)]};
    m.phi[o] = comparison_iso(base, fa, fb);
  }
  return m;
}

bool is_r_compatible(const MonadTower& tower, const Algebra& a) {
  if (tower.kind != MonadKind::P)
    throw CatError("is_r_compatible applies to algebras over the squares monad");
  const ArrowCat& ar = tower.t.arrow;
  std::map<std::tuple<int, int, int>, int> seen;  // (src, tgt, diagonal) -> value
  for (int m = 0; m < ar.cat->morphism_count(); ++m) {
    std::tuple<int, int, int> key{ar.cat->dom(m), ar.cat->cod(m), ar.diag[m]};
    auto [it, inserted] = seen.try_emplace(key, a.structure.on_morphisms[m]);
    if (!inserted && it->second != a.structure.on_morphisms[m]) return false;
  }
  return true;
}

Algebra induce_fr_algebra(const MonadTower& p_tower, const MonadTower& fr_tower,
                          const Algebra& a) {
  if (!is_r_compatible(p_tower, a))
    throw CatError("induce_fr_algebra: the structure functor is not compatible with the "
                   "diagonal congruence");
  if (!same_category(p_tower.base, fr_tower.base))
    throw CatError("induce_fr_algebra: towers live on different bases");
  const FreydCat& f = *fr_tower.t.fr;

  Algebra out;
  out.kind = MonadKind::Fr;
  out.base = fr_tower.base;
  out.structure.source = fr_tower.t.cat();
  out.structure.target = fr_tower.base;
  out.structure.on_objects.resize(f.cat->object_count());
  out.structure.on_morphisms.assign(f.cat->morphism_count(), -1);
  for (int o = 0; o < f.cat->object_count(); ++o) {
    int bm = f.object_of[o];
    out.structure.on_objects[o] = a.structure.on_objects[p_tower.t.object_index(bm)];
  }
  for (int m = 0; m < f.cat->morphism_count(); ++m) {
    int value = -1;
    for (int r : f.reps[m]) {
      int pr = p_tower.t.arrow.square_or_throw(
          f.arrows.object_of[f.arrows.cat->dom(r)], f.arrows.object_of[f.arrows.cat->cod(r)],
          f.arrows.top(r), f.arrows.bottom(r));
      int v = a.structure.on_morphisms[pr];
      if (value < 0) value = v;
      if (v != value) throw CatError("induce_fr_algebra: representatives disagree");
    }
    out.structure.on_morphisms[m] = value;
  }

  if (!a.strict()) {
    const FinCategory& ff2 = *fr_tower.tt.cat();
    out.coherence.assign(ff2.object_count(), -1);
    for (int o = 0; o < ff2.object_count(); ++o) {
      int cls = fr_tower.tt.object_of(o);  // FrX-morphism (a class of squares)
      int value = -1;
      for (int r : f.reps[cls]) {
        int pr = p_tower.t.arrow.square_or_throw(
            f.arrows.object_of[f.arrows.cat->dom(r)], f.arrows.object_of[f.arrows.cat->cod(r)],
            f.arrows.top(r), f.arrows.bottom(r));
        int v = a.coherence[p_tower.tt.object_index(pr)];
        if (value < 0) value = v;
        if (v != value)
          throw CatError("induce_fr_algebra: coherence depends on the representative");
      }
      out.coherence[o] = value;
    }
  }
  return out;
}

CheckReport proper_correspondence_check(CatPtr base, const SizeGuard& guard) {
  CheckReport report;
  const FinCategory& b = *base;
  MonadTower tower = make_tower(MonadKind::P, base);

  std::vector<FactorisationSystem> systems = enumerate_fs(base, guard);
  LawCheck equivalence("proper iff diagonal-compatible", "§4 (D)");
  LawCheck mechanism("M-members cancel through the left leg", "§4 (D) (8)");
  for (const auto& fs : systems) {
    FactorisationChoice choice = default_choice(fs);
    Algebra a = fs_to_pseudo_algebra(tower, fs, choice);
    bool proper = is_proper(fs);
    bool compatible = is_r_compatible(tower, a);
    if (proper != compatible) {
      std::string e_names;
      for (const auto& n : fs_member_names(b, fs.in_e)) e_names += n + " ";
      equivalence.violate("E = { " + e_names + "}: proper=" + (proper ? "yes" : "no") +
                          " compatible=" + (compatible ? "yes" : "no"));
    }
    if (!proper) continue;

    for (int mm = 0; mm < b.morphism_count(); ++mm) {
      if (!fs.in_m[mm]) continue;
      int u = a.structure.on_morphisms[left_unit_square(tower, mm)];
      for (int f1 = 0; f1 < b.morphism_count(); ++f1) {
        if (!b.composable(mm, f1)) continue;
        for (int f2 = 0; f2 < b.morphism_count(); ++f2) {
          if (b.dom(f2) != b.dom(f1) || b.cod(f2) != b.cod(f1)) continue;
          int h = b.compose(mm, f1);
          if (h != b.compose(mm, f2)) continue;
          int id = b.identity(b.dom(f1));
          int sq1 = tower.t.square_or_throw(id, mm, f1, h);
          int sq2 = tower.t.square_or_throw(id, mm, f2, h);
          int t1 = a.structure.on_morphisms[sq1];
          int t2 = a.structure.on_morphisms[sq2];
          if (t1 != t2 || t1 != b.compose(u, f1) || t2 != b.compose(u, f2) || f1 != f2)
            mechanism.violate("m=" + mor_name(b, mm) + " f1=" + mor_name(b, f1) +
                              " f2=" + mor_name(b, f2));
        }
      }
    }
  }
  equivalence.flush(report);
  mechanism.flush(report);
  return report;
}

std::vector<Algebra> enumerate_strict_algebras(MonadKind kind, CatPtr base,
                                               const SizeGuard& guard) {
  const FinCategory& b = *base;
  if (b.morphism_count() > guard.enumerate_algebras)
    throw GuardError("enumerate-algebras: " + std::to_string(b.morphism_count()) +
                     " morphisms, over the guard of " + std::to_string(guard.enumerate_algebras));

  MonadTower tower = make_tower(kind, base);
  const FinCategory& c1 = *tower.t.cat();

  std::vector<int> pin_obj(c1.object_count(), -1);
  std::vector<int> pin_mor(c1.morphism_count(), -1);
  for (int o = 0; o < b.object_count(); ++o) pin_obj[tower.unit.on_objects[o]] = o;
  for (int m = 0; m < b.morphism_count(); ++m) pin_mor[tower.unit.on_morphisms[m]] = m;

  std::vector<Algebra> out;
  std::vector<int> obj_map(c1.object_count(), -1);
  std::vector<int> mor_map(c1.morphism_count(), -1);

  auto try_candidate = [&]() {
    Functor t{tower.t.cat(), base, obj_map, mor_map};
    if (!check_functor(t)) return;
    Algebra a{kind, base, std::move(t), {}};
    if (check_strict_algebra(tower, a).ok()) out.push_back(std::move(a));
  };

  auto assign_morphisms = [&](auto&& self, int next) -> void {
    if (next == c1.morphism_count()) {
      try_candidate();
      return;
    }
    // mor_map[next] must already hold the candidate here
    auto viable = [&]() {
      if (pin_mor[next] >= 0 && mor_map[next] != pin_mor[next]) return false;
      for (int other = 0; other <= next; ++other) {
        int gf = c1.composable(next, other) ? c1.compose(next, other) : -1;
        if (gf >= 0 && gf <= next && mor_map[gf] >= 0) {
          if (b.compose(mor_map[next], mor_map[other]) != mor_map[gf]) return false;
        }
        int fg = c1.composable(other, next) ? c1.compose(other, next) : -1;
        if (fg >= 0 && fg <= next && mor_map[fg] >= 0) {
          if (b.compose(mor_map[other], mor_map[next]) != mor_map[fg]) return false;
        }
      }
      return true;
    };
    if (c1.is_identity(next)) {
      mor_map[next] = b.identity(obj_map[c1.dom(next)]);
      if (viable()) self(self, next + 1);
      mor_map[next] = -1;
      return;
    }
    for (int cand : b.hom(obj_map[c1.dom(next)], obj_map[c1.cod(next)])) {
      mor_map[next] = cand;
      if (viable()) self(self, next + 1);
    }
    mor_map[next] = -1;
  };

  auto assign_objects = [&](auto&& self, int next) -> void {
    if (next == c1.object_count()) {
      assign_morphisms(assign_morphisms, 0);
      return;
    }
    if (pin_obj[next] >= 0) {
      obj_map[next] = pin_obj[next];
      self(self, next + 1);
      obj_map[next] = -1;
      return;
    }
    for (int cand = 0; cand < b.object_count(); ++cand) {
      obj_map[next] = cand;
      self(self, next + 1);
    }
    obj_map[next] = -1;
  };

  assign_objects(assign_objects, 0);
  return out;
}

Algebra algebra_from_data(const MonadTower& tower, const AlgebraData& data) {
  if (monad_from_name(data.monad) != tower.kind)
    throw LoadError("algebra: monad '" + data.monad + "' does not match the requested tower");
  const FinCategory& b = *tower.base;
  const FinCategory& c1 = *tower.t.cat();
  const FinCategory& c2 = *tower.tt.cat();

  Algebra a;
  a.kind = tower.kind;
  a.base = tower.base;
  a.structure.source = tower.t.cat();
  a.structure.target = tower.base;
  a.structure.on_objects.assign(c1.object_count(), -1);
  a.structure.on_morphisms.assign(c1.morphism_count(), -1);

  for (const auto& [from, to] : data.on_objects) {
    int o = c1.object_index(from);
    if (o < 0) throw LoadError("algebra: unknown derived object '" + from + "'");
    int v = b.object_index(to);
    if (v < 0) throw LoadError("algebra: unknown base object '" + to + "'");
    a.structure.on_objects[o] = v;
  }
  for (const auto& [from, to] : data.on_morphisms) {
    int m = c1.morphism_index(from);
    if (m < 0) throw LoadError("algebra: unknown derived morphism '" + from + "'");
    int v = b.morphism_index(to);
    if (v < 0) throw LoadError("algebra: unknown base morphism '" + to + "'");
    a.structure.on_morphisms[m] = v;
  }
  for (int o = 0; o < c1.object_count(); ++o)
    if (a.structure.on_objects[o] < 0)
      throw LoadError("algebra: object '" + c1.object_name(o) + "' not assigned");
  for (int m = 0; m < c1.morphism_count(); ++m)
    if (a.structure.on_morphisms[m] < 0)
      throw LoadError("algebra: morphism '" + c1.morphism_name(m) + "' not assigned");

  if (data.has_theta) {
    a.coherence.assign(c2.object_count(), -1);
    for (const auto& [from, to] : data.theta) {
      int o = c2.object_index(from);
      if (o < 0) throw LoadError("algebra: unknown second-level object '" + from + "'");
      int v = b.morphism_index(to);
      if (v < 0) throw LoadError("algebra: unknown base morphism '" + to + "'");
      a.coherence[o] = v;
    }
    for (int o = 0; o < c2.object_count(); ++o)
      if (a.coherence[o] < 0)
        throw LoadError("algebra: theta missing at '" + c2.object_name(o) + "'");
  }
  return a;
}

AlgebraData algebra_to_data(const MonadTower& tower, const Algebra& a) {
  const FinCategory& b = *tower.base;
  const FinCategory& c1 = *tower.t.cat();
  AlgebraData data;
  data.monad = monad_name(tower.kind);
  for (int o = 0; o < c1.object_count(); ++o)
    data.on_objects[c1.object_name(o)] = b.object_name(a.structure.on_objects[o]);
  for (int m = 0; m < c1.morphism_count(); ++m)
    data.on_morphisms[c1.morphism_name(m)] = b.morphism_name(a.structure.on_morphisms[m]);
  if (!a.strict()) {
    data.has_theta = true;
    const FinCategory& c2 = *tower.tt.cat();
    for (int o = 0; o < c2.object_count(); ++o)
      data.theta[c2.object_name(o)] = b.morphism_name(a.coherence[o]);
  }
  return data;
}

}  // namespace factoriad
