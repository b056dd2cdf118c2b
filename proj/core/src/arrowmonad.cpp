#include "factoriad/arrowmonad.hpp"

#include <algorithm>
#include <string>

#include "factoriad/monad.hpp"

namespace factoriad {

namespace {

std::uint64_t square_key(int src, int tgt, int top, int bot) {
  return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(src)) << 48) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(tgt)) << 32) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(top)) << 16) |
         static_cast<std::uint64_t>(static_cast<std::uint16_t>(bot));
}

std::string square_name(const FinCategory& b, int src, int tgt, int top, int bot) {
  return "(" + b.morphism_name(top) + "|" + b.morphism_name(bot) + "):" + b.morphism_name(src) +
         "->" + b.morphism_name(tgt);
}

}  // namespace

int ArrowCat::square(int src_bm, int tgt_bm, int top_bm, int bot_bm) const {
  auto it = lookup.find(square_key(src_bm, tgt_bm, top_bm, bot_bm));
  return it == lookup.end() ? -1 : it->second;
}

int ArrowCat::square_or_throw(int src_bm, int tgt_bm, int top_bm, int bot_bm) const {
  int m = square(src_bm, tgt_bm, top_bm, bot_bm);
  if (m < 0)
    throw CatError("squares category: no commuting square (" + base->morphism_name(top_bm) + "|" +
                   base->morphism_name(bot_bm) + "): " + base->morphism_name(src_bm) + " -> " +
                   base->morphism_name(tgt_bm));
  return m;
}

ArrowCat arrow_category(CatPtr base) {
  const FinCategory& b = *base;
  if (b.morphism_count() >= 0xFFFF)
    throw GuardError("squares category: base exceeds 65534 morphisms");

  struct Sq {
    int src, tgt, top, bot;
  };
  std::vector<Sq> squares;
  for (int x = 0; x < b.morphism_count(); ++x) {
    for (int y = 0; y < b.morphism_count(); ++y) {
      for (int top : b.hom(b.dom(x), b.dom(y))) {
        int ty = b.compose(y, top);
        for (int bot : b.hom(b.cod(x), b.cod(y))) {
          if (b.compose(bot, x) == ty) squares.push_back({x, y, top, bot});
        }
      }
    }
  }
  if (squares.size() >= 0xFFFF)
    throw GuardError("squares category: result exceeds 65534 morphisms");

  std::unordered_map<std::uint64_t, int> position;
  position.reserve(squares.size() * 2);
  for (std::size_t i = 0; i < squares.size(); ++i) {
    const Sq& s = squares[i];
    position[square_key(s.src, s.tgt, s.top, s.bot)] = static_cast<int>(i);
  }

  CategoryData data;
  data.objects = b.morphisms();
  std::vector<std::string> names(squares.size());
  for (std::size_t i = 0; i < squares.size(); ++i) {
    const Sq& s = squares[i];
    names[i] = square_name(b, s.src, s.tgt, s.top, s.bot);
    data.morphisms.push_back({names[i], b.morphism_name(s.src), b.morphism_name(s.tgt)});
  }
  for (int x = 0; x < b.morphism_count(); ++x) {
    int idm = position.at(square_key(x, x, b.identity(b.dom(x)), b.identity(b.cod(x))));
    data.identities.push_back({b.morphism_name(x), names[idm]});
  }
  for (std::size_t gi = 0; gi < squares.size(); ++gi) {
    const Sq& g = squares[gi];
    bool g_identity = g.src == g.tgt && b.is_identity(g.top) && b.is_identity(g.bot);
    if (g_identity) continue;
    for (std::size_t fi = 0; fi < squares.size(); ++fi) {
      const Sq& f = squares[fi];
      if (f.tgt != g.src) continue;
      if (f.src == f.tgt && b.is_identity(f.top) && b.is_identity(f.bot)) continue;
      int ct = b.compose(g.top, f.top);
      int cb = b.compose(g.bot, f.bot);
      int ci = position.at(square_key(f.src, g.tgt, ct, cb));
      data.composition.push_back({names[gi], names[fi], names[ci]});
    }
  }

  ArrowCat a;
  a.base = base;
  a.cat = make_category(data);

  a.object_of.resize(a.cat->object_count());
  a.object_index.assign(b.morphism_count(), -1);
  for (int o = 0; o < a.cat->object_count(); ++o) {
    int bm = b.morphism_index(a.cat->object_name(o));
    a.object_of[o] = bm;
    a.object_index[bm] = o;
  }
  a.legs.resize(a.cat->morphism_count());
  a.diag.resize(a.cat->morphism_count());
  a.lookup.reserve(squares.size() * 2);
  for (std::size_t i = 0; i < squares.size(); ++i) {
    const Sq& s = squares[i];
    int m = a.cat->morphism_index(names[i]);
    a.legs[m] = {s.top, s.bot};
    a.diag[m] = b.compose(s.bot, s.src);
    a.lookup[square_key(s.src, s.tgt, s.top, s.bot)] = m;
  }
  return a;
}

Functor arrow_unit(const ArrowCat& a) {
  const FinCategory& b = *a.base;
  Functor u;
  u.source = a.base;
  u.target = a.cat;
  u.on_objects.resize(b.object_count());
  u.on_morphisms.resize(b.morphism_count());
  for (int o = 0; o < b.object_count(); ++o) u.on_objects[o] = a.object_index[b.identity(o)];
  for (int f = 0; f < b.morphism_count(); ++f)
    u.on_morphisms[f] = a.square_or_throw(b.identity(b.dom(f)), b.identity(b.cod(f)), f, f);
  return u;
}

Functor arrow_mult(const ArrowCat& a, const ArrowCat& aa) {
  if (!same_category(aa.base, a.cat)) throw CatError("arrow_mult: aa must be squares over a.cat");
  Functor mu;
  mu.source = aa.cat;
  mu.target = a.cat;
  mu.on_objects.resize(aa.cat->object_count());
  mu.on_morphisms.resize(aa.cat->morphism_count());
  for (int o = 0; o < aa.cat->object_count(); ++o)
    mu.on_objects[o] = a.object_index[a.diag[aa.object_of[o]]];
  for (int m = 0; m < aa.cat->morphism_count(); ++m) {
    int d0 = a.diag[aa.object_of[aa.cat->dom(m)]];
    int d1 = a.diag[aa.object_of[aa.cat->cod(m)]];
    mu.on_morphisms[m] = a.square_or_throw(d0, d1, a.top(aa.top(m)), a.bottom(aa.bottom(m)));
  }
  return mu;
}

Functor arrow_map(const ArrowCat& ac, const ArrowCat& ad, const Functor& f) {
  if (!same_category(f.source, ac.base) || !same_category(f.target, ad.base))
    throw CatError("arrow_map: functor endpoints do not match the squares categories");
  Functor r;
  r.source = ac.cat;
  r.target = ad.cat;
  r.on_objects.resize(ac.cat->object_count());
  r.on_morphisms.resize(ac.cat->morphism_count());
  for (int o = 0; o < ac.cat->object_count(); ++o)
    r.on_objects[o] = ad.object_index[f.mor(ac.object_of[o])];
  for (int m = 0; m < ac.cat->morphism_count(); ++m) {
    int src = f.mor(ac.object_of[ac.cat->dom(m)]);
    int tgt = f.mor(ac.object_of[ac.cat->cod(m)]);
    r.on_morphisms[m] = ad.square_or_throw(src, tgt, f.mor(ac.top(m)), f.mor(ac.bottom(m)));
  }
  return r;
}

StrictFactorParts strict_factor(const ArrowCat& a, int m) {
  const FinCategory& b = *a.base;
  int x = a.object_of[a.cat->dom(m)];
  int y = a.object_of[a.cat->cod(m)];
  int d = a.diag[m];
  StrictFactorParts parts;
  parts.middle = a.object_index[d];
  parts.left = a.square_or_throw(x, d, b.identity(b.dom(x)), a.bottom(m));
  parts.right = a.square_or_throw(d, y, a.top(m), b.identity(b.cod(y)));
  return parts;
}

MorphismClassPair canonical_fs(const ArrowCat& a) {
  const FinCategory& b = *a.base;
  MorphismClassPair pair;
  pair.left.resize(a.cat->morphism_count());
  pair.right.resize(a.cat->morphism_count());
  std::vector<char> iso(b.morphism_count());
  for (int f = 0; f < b.morphism_count(); ++f) iso[f] = is_iso(b, f) ? 1 : 0;
  for (int m = 0; m < a.cat->morphism_count(); ++m) {
    pair.left[m] = iso[a.top(m)];
    pair.right[m] = iso[a.bottom(m)];
  }
  return pair;
}

MorphismClassPair canonical_strict_fs(const ArrowCat& a) {
  const FinCategory& b = *a.base;
  MorphismClassPair pair;
  pair.left.resize(a.cat->morphism_count());
  pair.right.resize(a.cat->morphism_count());
  for (int m = 0; m < a.cat->morphism_count(); ++m) {
    pair.left[m] = b.is_identity(a.top(m)) ? 1 : 0;
    pair.right[m] = b.is_identity(a.bottom(m)) ? 1 : 0;
  }
  return pair;
}

FacePair faces(const ArrowCat& a) {
  const FinCategory& b = *a.base;
  FacePair pair;
  pair.lower.source = a.cat;
  pair.lower.target = a.base;
  pair.upper.source = a.cat;
  pair.upper.target = a.base;
  pair.lower.on_objects.resize(a.cat->object_count());
  pair.upper.on_objects.resize(a.cat->object_count());
  for (int o = 0; o < a.cat->object_count(); ++o) {
    pair.lower.on_objects[o] = b.dom(a.object_of[o]);
    pair.upper.on_objects[o] = b.cod(a.object_of[o]);
  }
  pair.lower.on_morphisms.resize(a.cat->morphism_count());
  pair.upper.on_morphisms.resize(a.cat->morphism_count());
  for (int m = 0; m < a.cat->morphism_count(); ++m) {
    pair.lower.on_morphisms[m] = a.top(m);
    pair.upper.on_morphisms[m] = a.bottom(m);
  }
  return pair;
}

ConnectionPair connections(const ArrowCat& a, const ArrowCat& aa) {
  if (!same_category(aa.base, a.cat)) throw CatError("connections: aa must be squares over a.cat");
  const FinCategory& b = *a.base;
  Functor unit_a = arrow_unit(a);

  ConnectionPair pair;
  pair.lower.source = a.cat;
  pair.lower.target = aa.cat;
  pair.upper.source = a.cat;
  pair.upper.target = aa.cat;
  pair.lower.on_objects.resize(a.cat->object_count());
  pair.upper.on_objects.resize(a.cat->object_count());
  for (int o = 0; o < a.cat->object_count(); ++o) {
    int x = a.object_of[o];
    int id_dom = b.identity(b.dom(x));
    int id_cod = b.identity(b.cod(x));
    pair.lower.on_objects[o] = aa.object_index[a.square_or_throw(x, id_cod, x, id_cod)];
    pair.upper.on_objects[o] = aa.object_index[a.square_or_throw(id_dom, x, id_dom, x)];
  }
  pair.lower.on_morphisms.resize(a.cat->morphism_count());
  pair.upper.on_morphisms.resize(a.cat->morphism_count());
  for (int m = 0; m < a.cat->morphism_count(); ++m) {
    int lower_src = aa.object_of[pair.lower.on_objects[a.cat->dom(m)]];
    int lower_tgt = aa.object_of[pair.lower.on_objects[a.cat->cod(m)]];
    pair.lower.on_morphisms[m] =
        aa.square_or_throw(lower_src, lower_tgt, m, unit_a.mor(a.bottom(m)));
    int upper_src = aa.object_of[pair.upper.on_objects[a.cat->dom(m)]];
    int upper_tgt = aa.object_of[pair.upper.on_objects[a.cat->cod(m)]];
    pair.upper.on_morphisms[m] =
        aa.square_or_throw(upper_src, upper_tgt, unit_a.mor(a.top(m)), m);
  }
  return pair;
}

namespace {

// A third-iterate morphism kept structural: endpoints and legs are morphisms
// of the second iterate.
struct CubeValue {
  int src = -1, tgt = -1, top = -1, bot = -1;
  bool operator==(const CubeValue&) const = default;
};

std::string name_of(const FinCategory& c, int m) { return "'" + c.morphism_name(m) + "'"; }

}  // namespace

CheckReport check_cubical_equations(CatPtr base, const SizeGuard& guard) {
  require_tower_guard(MonadKind::P, *base, guard, "cubical");

  CheckReport report;
  ArrowCat a = arrow_category(base);
  ArrowCat aa = arrow_category(a.cat);
  const FinCategory& pc = *a.cat;
  Functor eta = arrow_unit(a);
  Functor eta_p = arrow_unit(aa);     // unit at the squares category
  Functor mu = arrow_mult(a, aa);
  FacePair face = faces(a);
  FacePair face_p = faces(aa);        // faces at the squares category
  ConnectionPair conn = connections(a, aa);
  Functor p_eta = arrow_map(a, aa, eta);
  Functor p_face_lower = arrow_map(aa, a, face.lower);
  Functor p_face_upper = arrow_map(aa, a, face.upper);
  Functor ident_p = identity_functor(a.cat);

  auto compare = [&](const char* law, const char* anchor, const Functor& lhs, const Functor& rhs) {
    LawCheck check(law, anchor);
    if (!functors_equal(lhs, rhs)) {
      const FinCategory& s = *lhs.source;
      for (int o = 0; o < s.object_count(); ++o)
        if (lhs.on_objects[o] != rhs.on_objects[o]) {
          check.violate("at object '" + s.object_name(o) + "'");
          break;
        }
      for (int m = 0; m < s.morphism_count(); ++m)
        if (lhs.on_morphisms[m] != rhs.on_morphisms[m]) {
          check.violate("at morphism " + name_of(s, m));
          break;
        }
    }
    check.flush(report);
  };

  // degeneracy: faces retract the unit
  compare("lower face retracts unit", "§5 faces", compose_functors(face.lower, eta),
          identity_functor(base));
  compare("upper face retracts unit", "§5 faces", compose_functors(face.upper, eta),
          identity_functor(base));

  // counit laws for connections
  compare("lower face of lower connection", "§5 cubical comonad",
          compose_functors(face_p.lower, conn.lower), ident_p);
  compare("inner lower face of lower connection", "§5 cubical comonad",
          compose_functors(p_face_lower, conn.lower), ident_p);
  compare("upper face of upper connection", "§5 cubical comonad",
          compose_functors(face_p.upper, conn.upper), ident_p);
  compare("inner upper face of upper connection", "§5 cubical comonad",
          compose_functors(p_face_upper, conn.upper), ident_p);

  // co-absorbancy: the other face degenerates
  compare("upper face absorbs lower connection", "§5 cubical comonad",
          compose_functors(face_p.upper, conn.lower), compose_functors(eta, face.upper));
  compare("inner upper face absorbs lower connection", "§5 cubical comonad",
          compose_functors(p_face_upper, conn.lower), compose_functors(eta, face.upper));
  compare("lower face absorbs upper connection", "§5 cubical comonad",
          compose_functors(face_p.lower, conn.upper), compose_functors(eta, face.lower));
  compare("inner lower face absorbs upper connection", "§5 cubical comonad",
          compose_functors(p_face_lower, conn.upper), compose_functors(eta, face.lower));

  // degenerate connections: both connections collapse on unit squares
  compare("lower connection degenerates on unit", "§5 cubical comonad",
          compose_functors(conn.lower, eta), compose_functors(eta_p, eta));
  compare("upper connection degenerates on unit", "§5 cubical comonad",
          compose_functors(conn.upper, eta), compose_functors(eta_p, eta));
  compare("inner degeneracy matches outer", "§5 cubical comonad", compose_functors(p_eta, eta),
          compose_functors(eta_p, eta));

  // linking equations: faces after multiplication
  compare("lower face of multiplication", "§5 (2)", compose_functors(face.lower, mu),
          compose_functors(face.lower, p_face_lower));
  compare("lower face of multiplication (outer)", "§5 (2)", compose_functors(face.lower, mu),
          compose_functors(face.lower, face_p.lower));
  compare("upper face of multiplication", "§5 (2)", compose_functors(face.upper, mu),
          compose_functors(face.upper, p_face_upper));
  compare("upper face of multiplication (outer)", "§5 (2)", compose_functors(face.upper, mu),
          compose_functors(face.upper, face_p.upper));

  // mu g = 1
  compare("multiplication retracts lower connection", "§5 (2) μgε = 1",
          compose_functors(mu, conn.lower), ident_p);
  compare("multiplication retracts upper connection", "§5 (2) μgε = 1",
          compose_functors(mu, conn.upper), ident_p);

  // third-iterate values, kept structural
  auto conn_obj = [&](bool lower, int o) { return lower ? conn.lower.on_objects[o] : conn.upper.on_objects[o]; };
  auto conn_mor = [&](bool lower, int m) { return lower ? conn.lower.on_morphisms[m] : conn.upper.on_morphisms[m]; };

  // connection at the squares level, applied to an aa-object (giving an
  // aa-morphism) or an aa-morphism (giving a cube)
  auto conn_p_obj = [&](bool lower, int aao) -> int {
    int xi = aa.object_of[aao];
    int id_dom = pc.identity(pc.dom(xi));
    int id_cod = pc.identity(pc.cod(xi));
    return lower ? aa.square_or_throw(xi, id_cod, xi, id_cod)
                 : aa.square_or_throw(id_dom, xi, id_dom, xi);
  };
  auto conn_p_mor = [&](bool lower, int aam) -> CubeValue {
    CubeValue cube;
    cube.src = conn_p_obj(lower, aa.cat->dom(aam));
    cube.tgt = conn_p_obj(lower, aa.cat->cod(aam));
    if (lower) {
      cube.top = aam;
      cube.bot = eta_p.mor(aa.bottom(aam));
    } else {
      cube.top = eta_p.mor(aa.top(aam));
      cube.bot = aam;
    }
    return cube;
  };
  // squares construction applied to a connection
  auto p_conn_obj = [&](bool lower, int aao) -> int { return conn_mor(lower, aa.object_of[aao]); };
  auto p_conn_mor = [&](bool lower, int aam) -> CubeValue {
    CubeValue cube;
    cube.src = p_conn_obj(lower, aa.cat->dom(aam));
    cube.tgt = p_conn_obj(lower, aa.cat->cod(aam));
    cube.top = conn_mor(lower, aa.top(aam));
    cube.bot = conn_mor(lower, aa.bottom(aam));
    return cube;
  };
  // squares construction applied to the multiplication
  auto p_mu_obj = [&](int aam) -> int { return aa.object_index[mu.on_morphisms[aam]]; };
  auto p_mu_mor = [&](const CubeValue& cube) -> int {
    return aa.square_or_throw(mu.mor(cube.src), mu.mor(cube.tgt), mu.mor(cube.top),
                              mu.mor(cube.bot));
  };

  for (bool first_lower : {true, false}) {
    const bool second_lower = !first_lower;
    // P mu . g^e P . g^e' = unit at the squares level  (mixed connections)
    LawCheck mixed("mixed connections collapse to the degenerate square", "§5 (2)");
    for (int o = 0; o < pc.object_count(); ++o) {
      int inner = conn_obj(second_lower, o);
      int value = p_mu_obj(conn_p_obj(first_lower, inner));
      if (value != eta_p.on_objects[o]) mixed.violate("at object '" + pc.object_name(o) + "'");
    }
    for (int m = 0; m < pc.morphism_count(); ++m) {
      int inner = conn_mor(second_lower, m);
      int value = p_mu_mor(conn_p_mor(first_lower, inner));
      if (value != eta_p.on_morphisms[m]) mixed.violate("at morphism " + name_of(pc, m));
    }
    mixed.flush(report);
  }

  for (bool lower : {true, false}) {
    LawCheck repeated("repeated connection is absorbed", "§5 (2)");
    LawCheck inner_outer("connection co-associativity", "§5 cubical comonad");
    for (int o = 0; o < pc.object_count(); ++o) {
      int g = conn_obj(lower, o);
      int via_level = p_mu_obj(conn_p_obj(lower, g));
      int via_map = p_mu_obj(p_conn_obj(lower, g));
      if (via_level != g) repeated.violate("at object '" + pc.object_name(o) + "' (level route)");
      if (via_map != g) repeated.violate("at object '" + pc.object_name(o) + "' (mapped route)");
      if (conn_p_obj(lower, g) != p_conn_obj(lower, g))
        inner_outer.violate("at object '" + pc.object_name(o) + "'");
    }
    for (int m = 0; m < pc.morphism_count(); ++m) {
      int g = conn_mor(lower, m);
      int via_level = p_mu_mor(conn_p_mor(lower, g));
      int via_map = p_mu_mor(p_conn_mor(lower, g));
      if (via_level != g) repeated.violate("at morphism " + name_of(pc, m) + " (level route)");
      if (via_map != g) repeated.violate("at morphism " + name_of(pc, m) + " (mapped route)");
      if (!(conn_p_mor(lower, g) == p_conn_mor(lower, g)))
        inner_outer.violate("at morphism " + name_of(pc, m));
    }
    repeated.flush(report);
    inner_outer.flush(report);
  }

  return report;
}

}  // namespace factoriad
