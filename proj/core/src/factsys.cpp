#include "factoriad/factsys.hpp"

#include <algorithm>

namespace factoriad {

std::vector<std::string> fs_member_names(const FinCategory& c, const std::vector<char>& mask) {
  std::vector<std::string> out;
  for (int m = 0; m < c.morphism_count(); ++m)
    if (mask[m]) out.push_back(c.morphism_name(m));
  return out;
}

FactorisationSystem make_fs(CatPtr base, const std::vector<char>& e, const std::vector<char>& m) {
  if (static_cast<int>(e.size()) != base->morphism_count() ||
      static_cast<int>(m.size()) != base->morphism_count())
    throw CatError("make_fs: mask sizes do not match the category");
  return {base, e, m};
}

namespace {

std::vector<char> mask_from_names(CatPtr base, const std::vector<std::string>& names,
                                  const char* which) {
  std::vector<char> mask(base->morphism_count(), 0);
  for (const auto& n : names) {
    int i = base->morphism_index(n);
    if (i < 0) throw LoadError(std::string(which) + ": unknown morphism '" + n + "'");
    mask[i] = 1;
  }
  return mask;
}

}  // namespace

FactorisationSystem fs_from_names(CatPtr base, const std::vector<std::string>& e,
                                  const std::vector<std::string>& m) {
  return {base, mask_from_names(base, e, "E"), mask_from_names(base, m, "M")};
}

StrictFactorisationSystem strict_fs_from_names(CatPtr base, const std::vector<std::string>& e0,
                                               const std::vector<std::string>& m0) {
  return {base, mask_from_names(base, e0, "E0"), mask_from_names(base, m0, "M0")};
}

FactorisationSystem fs_from_class_pair(CatPtr base, const MorphismClassPair& pair) {
  return make_fs(base, pair.left, pair.right);
}

StrictFactorisationSystem strict_fs_from_class_pair(CatPtr base, const MorphismClassPair& pair) {
  if (static_cast<int>(pair.left.size()) != base->morphism_count())
    throw CatError("strict fs: mask sizes do not match the category");
  return {base, pair.left, pair.right};
}

CheckReport check_factorisation_system(const FactorisationSystem& fs) {
  CheckReport report;
  const FinCategory& c = *fs.base;
  const int m = c.morphism_count();

  LawCheck isos("classes contain all isomorphisms", "standard (FK): fs axioms");
  for (int f = 0; f < m; ++f) {
    if (!is_iso(c, f)) continue;
    if (!fs.in_e[f]) isos.violate("iso '" + c.morphism_name(f) + "' missing from E");
    if (!fs.in_m[f]) isos.violate("iso '" + c.morphism_name(f) + "' missing from M");
  }
  isos.flush(report);

  LawCheck closure("classes closed under composition", "standard (FK): fs axioms");
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      if (!c.composable(g, f)) continue;
      int gf = c.compose(g, f);
      if (gf < 0) continue;
      if (fs.in_e[g] && fs.in_e[f] && !fs.in_e[gf])
        closure.violate("E not closed at ('" + c.morphism_name(g) + "', '" + c.morphism_name(f) + "')");
      if (fs.in_m[g] && fs.in_m[f] && !fs.in_m[gf])
        closure.violate("M not closed at ('" + c.morphism_name(g) + "', '" + c.morphism_name(f) + "')");
    }
  }
  closure.flush(report);

  LawCheck existence("every morphism factors as M after E", "standard (FK): fs axioms");
  for (int f = 0; f < m; ++f) {
    bool found = false;
    for (int e = 0; e < m && !found; ++e) {
      if (!fs.in_e[e] || c.dom(e) != c.dom(f)) continue;
      for (int mm : c.hom(c.cod(e), c.cod(f))) {
        if (fs.in_m[mm] && c.compose(mm, e) == f) {
          found = true;
          break;
        }
      }
    }
    if (!found) existence.violate("'" + c.morphism_name(f) + "' admits no factorisation");
  }
  existence.flush(report);

  LawCheck orth("E orthogonal to M", "§4 (B) orthogonality fill-in");
  for (int e = 0; e < m; ++e) {
    if (!fs.in_e[e]) continue;
    for (int mm = 0; mm < m; ++mm) {
      if (!fs.in_m[mm]) continue;
      if (!orthogonal(c, e, mm))
        orth.violate("('" + c.morphism_name(e) + "', '" + c.morphism_name(mm) + "')");
    }
  }
  orth.flush(report);
  return report;
}

bool is_fs(const FactorisationSystem& fs) { return check_factorisation_system(fs).ok(); }

namespace {

bool subcategory_with_identities(const FinCategory& c, const std::vector<char>& mask,
                                 std::string* why) {
  for (int o = 0; o < c.object_count(); ++o) {
    if (!mask[c.identity(o)]) {
      if (why) *why = "missing identity of '" + c.object_name(o) + "'";
      return false;
    }
  }
  for (int g = 0; g < c.morphism_count(); ++g) {
    if (!mask[g]) continue;
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (!mask[f] || !c.composable(g, f)) continue;
      int gf = c.compose(g, f);
      if (gf >= 0 && !mask[gf]) {
        if (why)
          *why = "not closed at ('" + c.morphism_name(g) + "', '" + c.morphism_name(f) + "')";
        return false;
      }
    }
  }
  return true;
}

// Number of (e, m) factorisations of u, optionally stopping past one.
int strict_factor_count(const FinCategory& c, const std::vector<char>& e0,
                        const std::vector<char>& m0, int u, bool exact = false) {
  int count = 0;
  for (int e = 0; e < c.morphism_count(); ++e) {
    if (!e0[e] || c.dom(e) != c.dom(u)) continue;
    for (int mm : c.hom(c.cod(e), c.cod(u))) {
      if (m0[mm] && c.compose(mm, e) == u && ++count > 1 && !exact) return count;
    }
  }
  return count;
}

}  // namespace

CheckReport check_strict_factorisation_system(const StrictFactorisationSystem& fs) {
  CheckReport report;
  const FinCategory& c = *fs.base;

  LawCheck subcats("classes are subcategories containing all identities",
                   "§1 strictly unique factorisation");
  std::string why;
  if (!subcategory_with_identities(c, fs.in_e0, &why)) subcats.violate("E0: " + why);
  if (!subcategory_with_identities(c, fs.in_m0, &why)) subcats.violate("M0: " + why);
  subcats.flush(report);

  LawCheck unique("strictly unique factorisation", "§1 strictly unique factorisation");
  for (int u = 0; u < c.morphism_count(); ++u) {
    int n = strict_factor_count(c, fs.in_e0, fs.in_m0, u, /*exact=*/true);
    if (n != 1)
      unique.violate("'" + c.morphism_name(u) + "' has " + std::to_string(n) +
                     " factorisations");
  }
  unique.flush(report);
  return report;
}

bool is_strict_fs(const StrictFactorisationSystem& fs) {
  return check_strict_factorisation_system(fs).ok();
}

FactorisationSystem span_strict(const StrictFactorisationSystem& fs) {
  if (!is_strict_fs(fs)) throw CatError("span: input is not a strict factorisation system");
  const FinCategory& c = *fs.base;
  std::vector<char> in_e(c.morphism_count(), 0), in_m(c.morphism_count(), 0);
  for (int u = 0; u < c.morphism_count(); ++u) {
    for (int e = 0; e < c.morphism_count(); ++e) {
      if (!fs.in_e0[e] || c.dom(e) != c.dom(u)) continue;
      bool done = false;
      for (int mm : c.hom(c.cod(e), c.cod(u))) {
        if (fs.in_m0[mm] && c.compose(mm, e) == u) {
          in_e[u] = is_iso(c, mm) ? 1 : 0;
          in_m[u] = is_iso(c, e) ? 1 : 0;
          done = true;
          break;
        }
      }
      if (done) break;
    }
  }
  return {fs.base, in_e, in_m};
}

bool equivalent_strict(const StrictFactorisationSystem& a, const StrictFactorisationSystem& b) {
  return span_strict(a) == span_strict(b);
}

bool is_proper(const FactorisationSystem& fs) {
  const FinCategory& c = *fs.base;
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (fs.in_e[f] && !is_epi(c, f)) return false;
    if (fs.in_m[f] && !is_mono(c, f)) return false;
  }
  return true;
}

bool is_proper_strict(const StrictFactorisationSystem& fs) {
  const FinCategory& c = *fs.base;
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (fs.in_e0[f] && !is_epi(c, f)) return false;
    if (fs.in_m0[f] && !is_mono(c, f)) return false;
  }
  return true;
}

std::vector<FactorisationSystem> enumerate_fs(CatPtr base, const SizeGuard& guard) {
  const FinCategory& c = *base;
  const int m = c.morphism_count();
  if (m > guard.enumerate_fs)
    throw GuardError("fs-enumerate: " + std::to_string(m) + " morphisms, over the guard of " +
                     std::to_string(guard.enumerate_fs));

  std::vector<int> non_iso;
  std::vector<char> iso(m, 0);
  for (int f = 0; f < m; ++f) {
    iso[f] = is_iso(c, f) ? 1 : 0;
    if (!iso[f]) non_iso.push_back(f);
  }
  std::vector<std::vector<char>> orth(m, std::vector<char>(m, 0));
  for (int e = 0; e < m; ++e)
    for (int mm = 0; mm < m; ++mm) orth[e][mm] = orthogonal(c, e, mm) ? 1 : 0;

  std::vector<FactorisationSystem> out;
  const std::uint64_t total = 1ull << non_iso.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<char> in_e(iso.begin(), iso.end());
    for (std::size_t i = 0; i < non_iso.size(); ++i)
      if (bits & (1ull << i)) in_e[non_iso[i]] = 1;

    // prune: E must be closed under composition
    bool closed = true;
    for (int g = 0; g < m && closed; ++g) {
      if (!in_e[g]) continue;
      for (int f = 0; f < m; ++f) {
        if (!in_e[f] || !c.composable(g, f)) continue;
        int gf = c.compose(g, f);
        if (gf >= 0 && !in_e[gf]) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;

    // M is forced to be the orthogonal complement of E
    std::vector<char> in_m(m, 1);
    for (int mm = 0; mm < m; ++mm) {
      for (int e = 0; e < m; ++e) {
        if (in_e[e] && !orth[e][mm]) {
          in_m[mm] = 0;
          break;
        }
      }
    }

    FactorisationSystem fs{base, in_e, in_m};
    if (is_fs(fs)) out.push_back(std::move(fs));
  }
  return out;
}

std::vector<StrictFactorisationSystem> enumerate_strict_fs(CatPtr base, const SizeGuard& guard) {
  const FinCategory& c = *base;
  const int m = c.morphism_count();
  if (m > guard.enumerate_strict_fs)
    throw GuardError("fs-enumerate --strict: " + std::to_string(m) +
                     " morphisms, over the guard of " + std::to_string(guard.enumerate_strict_fs));

  std::vector<int> free;  // non-identity morphisms
  std::vector<char> ids(m, 0);
  for (int f = 0; f < m; ++f) {
    ids[f] = c.is_identity(f) ? 1 : 0;
    if (!ids[f]) free.push_back(f);
  }

  std::vector<std::vector<char>> subcats;
  const std::uint64_t total = 1ull << free.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<char> mask(ids.begin(), ids.end());
    for (std::size_t i = 0; i < free.size(); ++i)
      if (bits & (1ull << i)) mask[free[i]] = 1;
    if (subcategory_with_identities(c, mask, nullptr)) subcats.push_back(std::move(mask));
  }

  std::vector<StrictFactorisationSystem> out;
  for (const auto& e0 : subcats) {
    for (const auto& m0 : subcats) {
      bool strict = true;
      for (int u = 0; u < m && strict; ++u)
        strict = strict_factor_count(c, e0, m0, u) == 1;
      if (strict) out.push_back({base, e0, m0});
    }
  }
  return out;
}

namespace {

FactorisationChoice build_choice(const FactorisationSystem& fs, bool reverse) {
  const FinCategory& c = *fs.base;
  FactorisationChoice choice;
  choice.base = fs.base;
  choice.triples.resize(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) {
      choice.triples[f] = {f, c.dom(f), f};
      continue;
    }
    FactorTriple found;
    bool have = false;
    for (int mid = 0; mid < c.object_count() && !(have && !reverse); ++mid) {
      for (int e : c.hom(c.dom(f), mid)) {
        if (!fs.in_e[e]) continue;
        for (int mm : c.hom(mid, c.cod(f))) {
          if (!fs.in_m[mm] || c.compose(mm, e) != f) continue;
          found = {e, mid, mm};
          have = true;
          if (!reverse) break;
        }
        if (have && !reverse) break;
      }
    }
    if (!have)
      throw CatError("choice: '" + c.morphism_name(f) + "' admits no structural factorisation");
    choice.triples[f] = found;
  }
  return choice;
}

}  // namespace

FactorisationChoice default_choice(const FactorisationSystem& fs) { return build_choice(fs, false); }
FactorisationChoice reverse_choice(const FactorisationSystem& fs) { return build_choice(fs, true); }

std::vector<std::string> choice_violations(const FactorisationSystem& fs,
                                           const FactorisationChoice& choice) {
  std::vector<std::string> out;
  const FinCategory& c = *fs.base;
  if (static_cast<int>(choice.triples.size()) != c.morphism_count()) {
    out.push_back("choice is not total");
    return out;
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    const FactorTriple& t = choice.triples[f];
    if (t.e < 0 || t.m < 0 || t.mid < 0) {
      out.push_back("missing triple for '" + c.morphism_name(f) + "'");
      continue;
    }
    if (c.is_identity(f) && (t.e != f || t.m != f))
      out.push_back("identity '" + c.morphism_name(f) + "' not assigned (id, obj, id)");
    if (c.dom(t.e) != c.dom(f) || c.cod(t.e) != t.mid || c.dom(t.m) != t.mid ||
        c.cod(t.m) != c.cod(f))
      out.push_back("triple endpoints broken for '" + c.morphism_name(f) + "'");
    else if (c.compose(t.m, t.e) != f)
      out.push_back("triple does not compose to '" + c.morphism_name(f) + "'");
    if (!fs.in_e[t.e])
      out.push_back("e-part of '" + c.morphism_name(f) + "' not in E");
    if (!fs.in_m[t.m])
      out.push_back("m-part of '" + c.morphism_name(f) + "' not in M");
  }
  return out;
}

FactorTriple factor(const FactorisationChoice& choice, int morphism) {
  return choice.triples.at(morphism);
}

int comparison_iso(const FinCategory& c, const FactorTriple& a, const FactorTriple& b) {
  if (c.compose(a.m, a.e) != c.compose(b.m, b.e))
    throw CatError("comparison: the triples factor different morphisms");
  int found = -1;
  for (int w : c.hom(a.mid, b.mid)) {
    if (c.compose(w, a.e) == b.e && c.compose(b.m, w) == a.m) {
      if (found >= 0) throw CatError("comparison: fill-in is not unique");
      found = w;
    }
  }
  if (found < 0) throw CatError("comparison: no fill-in links the factorisations");
  if (!is_iso(c, found))
    throw CatError("comparison: fill-in '" + c.morphism_name(found) + "' is not invertible");
  return found;
}

Functor extend_functor(const ArrowCat& ax, const Functor& f, const FactorisationSystem& fs_a,
                       const FactorisationChoice& choice) {
  if (!same_category(f.source, ax.base))
    throw CatError("extend_functor: functor source must be the squares base");
  if (!same_category(f.target, fs_a.base) || !same_category(choice.base, fs_a.base))
    throw CatError("extend_functor: fs and choice must live on the functor target");
  const FinCategory& a = *fs_a.base;

  Functor g;
  g.source = ax.cat;
  g.target = fs_a.base;
  g.on_objects.resize(ax.cat->object_count());
  g.on_morphisms.assign(ax.cat->morphism_count(), -1);
  for (int o = 0; o < ax.cat->object_count(); ++o)
    g.on_objects[o] = choice.triples[f.mor(ax.object_of[o])].mid;
  for (int m = 0; m < ax.cat->morphism_count(); ++m) {
    const FactorTriple& tx = choice.triples[f.mor(ax.object_of[ax.cat->dom(m)])];
    const FactorTriple& ty = choice.triples[f.mor(ax.object_of[ax.cat->cod(m)])];
    int u = a.compose(ty.e, f.mor(ax.top(m)));
    int v = a.compose(f.mor(ax.bottom(m)), tx.m);
    int found = -1;
    for (int w : a.hom(tx.mid, ty.mid)) {
      if (a.compose(w, tx.e) == u && a.compose(ty.m, w) == v) {
        if (found >= 0) throw CatError("extend_functor: fill-in not unique (fs violation)");
        found = w;
      }
    }
    if (found < 0)
      throw CatError("extend_functor: no fill-in at square '" + ax.cat->morphism_name(m) + "'");
    g.on_morphisms[m] = found;
  }
  return g;
}

Functor extend_functor_proper(const FreydCat& fx, const Functor& f,
                              const FactorisationSystem& fs_a,
                              const FactorisationChoice& choice) {
  if (!is_proper(fs_a)) throw CatError("extend_functor_proper: fs is not proper");
  Functor g = extend_functor(fx.arrows, f, fs_a, choice);

  Functor out;
  out.source = fx.cat;
  out.target = fs_a.base;
  out.on_objects.resize(fx.cat->object_count());
  out.on_morphisms.assign(fx.cat->morphism_count(), -1);
  for (int o = 0; o < fx.cat->object_count(); ++o)
    out.on_objects[o] = g.on_objects[fx.arrows.object_index[fx.object_of[o]]];
  for (int m = 0; m < fx.cat->morphism_count(); ++m) {
    int value = -1;
    for (int r : fx.reps[m]) {
      if (value < 0) value = g.on_morphisms[r];
      if (g.on_morphisms[r] != value)
        throw CatError("extend_functor_proper: extension not constant on the class '" +
                       fx.cat->morphism_name(m) + "' (properness violation)");
    }
    out.on_morphisms[m] = value;
  }
  return out;
}

}  // namespace factoriad
