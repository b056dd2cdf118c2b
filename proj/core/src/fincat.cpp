#include "factoriad/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace factoriad {

namespace {

int find_sorted(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return -1;
  return static_cast<int>(it - names.begin());
}

struct NameTables {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<int> dom, cod, identity;
};

// Shared structural checks: unique names, known dom/cod, one identity per
// object with matching endpoints. Throws LoadError with the offending name.
NameTables build_names(const std::vector<std::string>& objects,
                       const std::vector<MorphismDecl>& morphisms,
                       const std::vector<std::pair<std::string, std::string>>& identities) {
  NameTables t;
  t.objects = objects;
  std::sort(t.objects.begin(), t.objects.end());
  for (std::size_t i = 0; i + 1 < t.objects.size(); ++i)
    if (t.objects[i] == t.objects[i + 1])
      throw LoadError("objects: duplicate name '" + t.objects[i] + "'");
  for (const auto& o : t.objects)
    if (o.empty()) throw LoadError("objects: empty name");

  t.morphisms.reserve(morphisms.size());
  for (const auto& m : morphisms) t.morphisms.push_back(m.name);
  std::sort(t.morphisms.begin(), t.morphisms.end());
  for (std::size_t i = 0; i + 1 < t.morphisms.size(); ++i)
    if (t.morphisms[i] == t.morphisms[i + 1])
      throw LoadError("morphisms: duplicate name '" + t.morphisms[i] + "'");
  for (const auto& m : t.morphisms)
    if (m.empty()) throw LoadError("morphisms: empty name");

  t.dom.assign(t.morphisms.size(), -1);
  t.cod.assign(t.morphisms.size(), -1);
  for (const auto& m : morphisms) {
    int idx = find_sorted(t.morphisms, m.name);
    int d = find_sorted(t.objects, m.dom);
    int c = find_sorted(t.objects, m.cod);
    if (d < 0) throw LoadError("morphism '" + m.name + "': unknown dom '" + m.dom + "'");
    if (c < 0) throw LoadError("morphism '" + m.name + "': unknown cod '" + m.cod + "'");
    t.dom[idx] = d;
    t.cod[idx] = c;
  }

  t.identity.assign(t.objects.size(), -1);
  for (const auto& [obj, mor] : identities) {
    int o = find_sorted(t.objects, obj);
    if (o < 0) throw LoadError("identities: unknown object '" + obj + "'");
    int m = find_sorted(t.morphisms, mor);
    if (m < 0) throw LoadError("identities: unknown morphism '" + mor + "' for object '" + obj + "'");
    if (t.identity[o] >= 0) throw LoadError("identities: object '" + obj + "' listed twice");
    if (t.dom[m] != o || t.cod[m] != o)
      throw LoadError("identities: morphism '" + mor + "' is not an endomorphism of '" + obj + "'");
    t.identity[o] = m;
  }
  for (std::size_t o = 0; o < t.objects.size(); ++o)
    if (t.identity[o] < 0)
      throw LoadError("identities: missing identity for object '" + t.objects[o] + "'");

  return t;
}

}  // namespace

void FinCategory::build_indexes() {
  const int n = object_count();
  const int m = morphism_count();
  hom_offsets_.assign(static_cast<std::size_t>(n) * n + 1, 0);
  for (int f = 0; f < m; ++f) hom_offsets_[static_cast<std::size_t>(dom_[f]) * n + cod_[f] + 1]++;
  for (std::size_t i = 1; i < hom_offsets_.size(); ++i) hom_offsets_[i] += hom_offsets_[i - 1];
  hom_items_.assign(static_cast<std::size_t>(m), 0);
  std::vector<int32_t> cursor(hom_offsets_.begin(), hom_offsets_.end() - 1);
  for (int f = 0; f < m; ++f)  // index order keeps each cell sorted
    hom_items_[cursor[static_cast<std::size_t>(dom_[f]) * n + cod_[f]]++] = f;

  // composition rows sized by the arrows into each domain
  std::vector<int32_t> incoming(n, 0);
  rank_in_.assign(m, 0);
  for (int f = 0; f < m; ++f) rank_in_[f] = incoming[cod_[f]]++;
  row_offset_.assign(m, 0);
  std::size_t total = 0;
  for (int g = 0; g < m; ++g) {
    row_offset_[g] = total;
    total += incoming[dom_[g]];
  }
  comp_rows_.assign(total, -1);
}

void FinCategory::set_compose(int g, int f, int gf) {
  comp_rows_[row_offset_[g] + rank_in_[f]] = gf;
}

std::span<const int> FinCategory::hom(int x, int y) const {
  const std::size_t cell = static_cast<std::size_t>(x) * object_count() + y;
  return {hom_items_.data() + hom_offsets_[cell],
          static_cast<std::size_t>(hom_offsets_[cell + 1] - hom_offsets_[cell])};
}

int FinCategory::object_index(std::string_view name) const { return find_sorted(objects_, name); }
int FinCategory::morphism_index(std::string_view name) const { return find_sorted(morphisms_, name); }

bool FinCategory::operator==(const FinCategory& other) const {
  if (objects_ != other.objects_ || morphisms_ != other.morphisms_) return false;
  if (dom_ != other.dom_ || cod_ != other.cod_ || identity_ != other.identity_) return false;
  const int m = morphism_count();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (composable(g, f) && compose(g, f) != other.compose(g, f)) return false;
  return true;
}

CatPtr make_category(const CategoryData& data) {
  NameTables t = build_names(data.objects, data.morphisms, data.identities);
  auto cat = std::shared_ptr<FinCategory>(new FinCategory());
  cat->objects_ = std::move(t.objects);
  cat->morphisms_ = std::move(t.morphisms);
  cat->dom_ = std::move(t.dom);
  cat->cod_ = std::move(t.cod);
  cat->identity_ = std::move(t.identity);
  cat->build_indexes();

  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < data.composition.size(); ++i) {
    const auto& entry = data.composition[i];
    const std::string pos = "composition[" + std::to_string(i) + "]";
    int g = cat->morphism_index(entry[0]);
    int f = cat->morphism_index(entry[1]);
    int gf = cat->morphism_index(entry[2]);
    if (g < 0) throw LoadError(pos + ": unknown morphism '" + entry[0] + "'");
    if (f < 0) throw LoadError(pos + ": unknown morphism '" + entry[1] + "'");
    if (gf < 0) throw LoadError(pos + ": unknown morphism '" + entry[2] + "'");
    if (!cat->composable(g, f))
      throw LoadError(pos + ": pair ('" + entry[0] + "', '" + entry[1] + "') is not composable");
    if (cat->is_identity(g) || cat->is_identity(f))
      throw LoadError(pos + ": identity composite ('" + entry[0] + "', '" + entry[1] +
                      "') is implied and must be omitted");
    if (!seen.insert({g, f}).second)
      throw LoadError(pos + ": duplicate entry for ('" + entry[0] + "', '" + entry[1] + "')");
    cat->set_compose(g, f, gf);
  }

  // identity composites are forced
  for (int f = 0; f < cat->morphism_count(); ++f) {
    cat->set_compose(f, cat->identity_[cat->dom_[f]], f);
    cat->set_compose(cat->identity_[cat->cod_[f]], f, f);
  }
  return cat;
}

CatPtr make_category_raw(const RawCategoryData& data) {
  NameTables t = build_names(data.objects, data.morphisms, data.identities);
  auto cat = std::shared_ptr<FinCategory>(new FinCategory());
  cat->objects_ = std::move(t.objects);
  cat->morphisms_ = std::move(t.morphisms);
  cat->dom_ = std::move(t.dom);
  cat->cod_ = std::move(t.cod);
  cat->identity_ = std::move(t.identity);
  cat->build_indexes();

  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < data.composition.size(); ++i) {
    const auto& entry = data.composition[i];
    const std::string pos = "composition[" + std::to_string(i) + "]";
    int g = cat->morphism_index(entry[0]);
    int f = cat->morphism_index(entry[1]);
    int gf = cat->morphism_index(entry[2]);
    if (g < 0 || f < 0 || gf < 0) throw LoadError(pos + ": unknown morphism");
    if (!cat->composable(g, f)) throw LoadError(pos + ": pair is not composable");
    if (!seen.insert({g, f}).second) throw LoadError(pos + ": duplicate entry");
    cat->set_compose(g, f, gf);
  }
  return cat;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

CheckReport validate_category(const FinCategory& c) {
  CheckReport report;
  LawCheck completeness("composition table completeness", "standard: category axioms");
  LawCheck coherence("dom/cod coherence", "standard: category axioms");
  LawCheck identity_law("identity law", "standard: category axioms");
  LawCheck associativity("associativity", "standard: category axioms");

  const int m = c.morphism_count();
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      if (!c.composable(g, f)) continue;
      int gf = c.compose(g, f);
      if (gf < 0) {
        completeness.violate("incomplete table: missing composite for ('" + c.morphism_name(g) +
                             "', '" + c.morphism_name(f) + "')");
        continue;
      }
      if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
        coherence.violate("dom/cod of '" + c.morphism_name(g) + "'.'" + c.morphism_name(f) +
                          "' = '" + c.morphism_name(gf) + "' do not match the pair");
    }
  }

  for (int f = 0; f < m; ++f) {
    int right = c.compose(f, c.identity(c.dom(f)));
    int left = c.compose(c.identity(c.cod(f)), f);
    if (right != f)
      identity_law.violate("'" + c.morphism_name(f) + "'.id != '" + c.morphism_name(f) + "'" +
                           (right >= 0 ? " (got '" + c.morphism_name(right) + "')" : " (missing)"));
    if (left != f)
      identity_law.violate("id.'" + c.morphism_name(f) + "' != '" + c.morphism_name(f) + "'" +
                           (left >= 0 ? " (got '" + c.morphism_name(left) + "')" : " (missing)"));
  }

  std::vector<std::vector<int>> incoming(c.object_count()), outgoing(c.object_count());
  for (int f = 0; f < m; ++f) {
    incoming[c.cod(f)].push_back(f);
    outgoing[c.dom(f)].push_back(f);
  }
  for (int g = 0; g < m; ++g) {
    for (int f : incoming[c.dom(g)]) {
      int gf = c.compose(g, f);
      if (gf < 0) continue;
      for (int h : outgoing[c.cod(g)]) {
        int hg = c.compose(h, g);
        if (hg < 0) continue;
        if (c.compose(h, gf) != c.compose(hg, f))
          associativity.violate("('" + c.morphism_name(h) + "'.'" + c.morphism_name(g) + "').'" +
                                c.morphism_name(f) + "' != '" + c.morphism_name(h) + "'.('" +
                                c.morphism_name(g) + "'.'" + c.morphism_name(f) + "')");
      }
    }
  }

  completeness.flush(report);
  coherence.flush(report);
  identity_law.flush(report);
  associativity.flush(report);
  return report;
}

bool is_epi(const FinCategory& c, int f) {
  const int m = c.morphism_count();
  for (int g = 0; g < m; ++g) {
    if (!c.composable(g, f)) continue;
    for (int h = g + 1; h < m; ++h) {
      if (c.dom(h) != c.dom(g) || c.cod(h) != c.cod(g)) continue;
      if (c.compose(g, f) == c.compose(h, f)) return false;
    }
  }
  return true;
}

bool is_mono(const FinCategory& c, int f) {
  const int m = c.morphism_count();
  for (int g = 0; g < m; ++g) {
    if (!c.composable(f, g)) continue;
    for (int h = g + 1; h < m; ++h) {
      if (c.dom(h) != c.dom(g) || c.cod(h) != c.cod(g)) continue;
      if (c.compose(f, g) == c.compose(f, h)) return false;
    }
  }
  return true;
}

int inverse_of(const FinCategory& c, int f) {
  for (int g : c.hom(c.cod(f), c.dom(f))) {
    if (c.compose(g, f) == c.identity(c.dom(f)) && c.compose(f, g) == c.identity(c.cod(f)))
      return g;
  }
  return -1;
}

bool is_iso(const FinCategory& c, int f) { return inverse_of(c, f) >= 0; }

bool orthogonal(const FinCategory& c, int e, int m) {
  for (int u : c.hom(c.dom(e), c.dom(m))) {
    for (int v : c.hom(c.cod(e), c.cod(m))) {
      if (c.compose(m, u) != c.compose(v, e)) continue;
      int fills = 0;
      for (int w : c.hom(c.cod(e), c.dom(m))) {
        if (c.compose(w, e) == u && c.compose(m, w) == v) ++fills;
      }
      if (fills != 1) return false;
    }
  }
  return true;
}

Functor identity_functor(CatPtr c) {
  Functor f;
  f.source = c;
  f.target = c;
  f.on_objects.resize(c->object_count());
  f.on_morphisms.resize(c->morphism_count());
  for (int o = 0; o < c->object_count(); ++o) f.on_objects[o] = o;
  for (int m = 0; m < c->morphism_count(); ++m) f.on_morphisms[m] = m;
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!same_category(f.target, g.source)) throw CatError("compose_functors: middle category mismatch");
  Functor r;
  r.source = f.source;
  r.target = g.target;
  r.on_objects.resize(f.on_objects.size());
  r.on_morphisms.resize(f.on_morphisms.size());
  for (std::size_t o = 0; o < f.on_objects.size(); ++o) r.on_objects[o] = g.on_objects[f.on_objects[o]];
  for (std::size_t m = 0; m < f.on_morphisms.size(); ++m)
    r.on_morphisms[m] = g.on_morphisms[f.on_morphisms[m]];
  return r;
}

bool functors_equal(const Functor& a, const Functor& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) &&
         a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
}

std::vector<std::string> functor_violations(const Functor& f) {
  std::vector<std::string> out;
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  if (static_cast<int>(f.on_objects.size()) != s.object_count() ||
      static_cast<int>(f.on_morphisms.size()) != s.morphism_count()) {
    out.push_back("mapping is not total");
    return out;
  }
  for (int m = 0; m < s.morphism_count(); ++m) {
    int fm = f.on_morphisms[m];
    if (fm < 0 || fm >= t.morphism_count()) {
      out.push_back("morphism '" + s.morphism_name(m) + "' maps outside the target");
      return out;
    }
    if (t.dom(fm) != f.on_objects[s.dom(m)] || t.cod(fm) != f.on_objects[s.cod(m)])
      out.push_back("dom/cod not preserved at '" + s.morphism_name(m) + "'");
  }
  for (int o = 0; o < s.object_count(); ++o) {
    if (f.on_morphisms[s.identity(o)] != t.identity(f.on_objects[o]))
      out.push_back("identity not preserved at object '" + s.object_name(o) + "'");
  }
  for (int g = 0; g < s.morphism_count(); ++g) {
    for (int m = 0; m < s.morphism_count(); ++m) {
      if (!s.composable(g, m)) continue;
      int gm = s.compose(g, m);
      if (gm < 0) continue;
      if (t.compose(f.on_morphisms[g], f.on_morphisms[m]) != f.on_morphisms[gm])
        out.push_back("composition not preserved at ('" + s.morphism_name(g) + "', '" +
                      s.morphism_name(m) + "')");
    }
  }
  return out;
}

bool check_functor(const Functor& f) { return functor_violations(f).empty(); }

std::vector<std::string> natural_violations(const NatTransformation& n) {
  std::vector<std::string> out;
  const Functor& f = n.source;
  const Functor& g = n.target;
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target)) {
    out.push_back("functors are not parallel");
    return out;
  }
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  if (static_cast<int>(n.components.size()) != s.object_count()) {
    out.push_back("component table is not total");
    return out;
  }
  for (int o = 0; o < s.object_count(); ++o) {
    int c = n.components[o];
    if (c < 0 || c >= t.morphism_count() || t.dom(c) != f.on_objects[o] ||
        t.cod(c) != g.on_objects[o]) {
      out.push_back("component at '" + s.object_name(o) + "' has wrong endpoints");
      return out;
    }
  }
  for (int m = 0; m < s.morphism_count(); ++m) {
    int lhs = t.compose(n.components[s.cod(m)], f.on_morphisms[m]);
    int rhs = t.compose(g.on_morphisms[m], n.components[s.dom(m)]);
    if (lhs != rhs)
      out.push_back("naturality square fails at '" + s.morphism_name(m) + "'");
  }
  return out;
}

bool check_natural(const NatTransformation& n) { return natural_violations(n).empty(); }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep least index as root
    parent[b] = a;
    return true;
  }
};

Congruence partition_from_uf(CatPtr base, UnionFind& uf) {
  const int m = base->morphism_count();
  Congruence cong;
  cong.base = base;
  cong.class_of.assign(m, -1);
  std::vector<int> root_class(m, -1);
  for (int f = 0; f < m; ++f) {
    int r = uf.find(f);
    if (root_class[r] < 0) {
      root_class[r] = static_cast<int>(cong.classes.size());
      cong.classes.emplace_back();
    }
    cong.class_of[f] = root_class[r];
    cong.classes[root_class[r]].push_back(f);
  }
  return cong;
}

}  // namespace

Congruence make_congruence(CatPtr base, const std::vector<std::pair<int, int>>& related) {
  const int m = base->morphism_count();
  UnionFind uf(m);
  for (auto [a, b] : related) uf.unite(a, b);

  const FinCategory& c = *base;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> members(m);
    for (int f = 0; f < m; ++f) members[uf.find(f)].push_back(f);
    for (int g = 0; g < m; ++g) {
      for (int f = 0; f < m; ++f) {
        if (!c.composable(g, f)) continue;
        int gf = c.compose(g, f);
        if (gf < 0) continue;
        for (int g2 : members[uf.find(g)]) {
          for (int f2 : members[uf.find(f)]) {
            if (!c.composable(g2, f2)) continue;
            int g2f2 = c.compose(g2, f2);
            if (g2f2 >= 0 && uf.unite(gf, g2f2)) changed = true;
          }
        }
      }
    }
  }
  return partition_from_uf(base, uf);
}

Congruence congruence_from_classes(CatPtr base, std::vector<std::vector<int>> classes) {
  const int m = base->morphism_count();
  Congruence cong;
  cong.base = base;
  cong.class_of.assign(m, -1);
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) throw LoadError("congruence: empty class");
    for (int f : classes[i]) {
      if (f < 0 || f >= m) throw LoadError("congruence: morphism index out of range");
      if (cong.class_of[f] >= 0) throw LoadError("congruence: morphism in two classes");
      cong.class_of[f] = static_cast<int>(i);
    }
  }
  for (int f = 0; f < m; ++f)
    if (cong.class_of[f] < 0)
      throw LoadError("congruence: morphism '" + base->morphism_name(f) + "' not covered");
  cong.classes = std::move(classes);
  return cong;
}

std::vector<std::string> congruence_violations(const Congruence& cong) {
  std::vector<std::string> out;
  const FinCategory& c = *cong.base;
  for (const auto& cls : cong.classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      if (c.dom(cls[i]) != c.dom(cls[0]) || c.cod(cls[i]) != c.cod(cls[0]))
        out.push_back("class of '" + c.morphism_name(cls[0]) + "' relates non-parallel '" +
                      c.morphism_name(cls[i]) + "'");
    }
  }
  const int m = c.morphism_count();
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      if (!c.composable(g, f)) continue;
      int gf = c.compose(g, f);
      if (gf < 0) continue;
      for (int g2 : cong.classes[cong.class_of[g]]) {
        for (int f2 : cong.classes[cong.class_of[f]]) {
          if (!c.composable(g2, f2)) continue;
          int g2f2 = c.compose(g2, f2);
          if (g2f2 >= 0 && cong.class_of[g2f2] != cong.class_of[gf])
            out.push_back("compatibility fails: ('" + c.morphism_name(g) + "', '" +
                          c.morphism_name(f) + "') vs ('" + c.morphism_name(g2) + "', '" +
                          c.morphism_name(f2) + "')");
        }
      }
    }
  }
  return out;
}

bool validate_congruence(const Congruence& cong) { return congruence_violations(cong).empty(); }

QuotientResult quotient(CatPtr base, const Congruence& cong) {
  const FinCategory& c = *base;
  const int nclasses = static_cast<int>(cong.classes.size());

  std::vector<std::string> class_names(nclasses);
  for (int k = 0; k < nclasses; ++k) class_names[k] = c.morphism_name(cong.classes[k][0]);

  CategoryData data;
  data.objects = c.objects();
  for (int k = 0; k < nclasses; ++k) {
    int rep = cong.classes[k][0];
    data.morphisms.push_back({class_names[k], c.object_name(c.dom(rep)), c.object_name(c.cod(rep))});
  }
  for (int o = 0; o < c.object_count(); ++o)
    data.identities.push_back({c.object_name(o), class_names[cong.class_of[c.identity(o)]]});

  // classes that become identities in the quotient; their composites are implied
  std::vector<char> identity_class(nclasses, 0);
  for (int o = 0; o < c.object_count(); ++o) identity_class[cong.class_of[c.identity(o)]] = 1;

  // induced composition: all representative pairs must agree
  for (int kg = 0; kg < nclasses; ++kg) {
    for (int kf = 0; kf < nclasses; ++kf) {
      int g0 = cong.classes[kg][0];
      int f0 = cong.classes[kf][0];
      if (!c.composable(g0, f0)) continue;
      int expected = -1;
      for (int g : cong.classes[kg]) {
        for (int f : cong.classes[kf]) {
          if (!c.composable(g, f)) continue;
          int gf = c.compose(g, f);
          if (gf < 0)
            throw CatError("quotient: incomplete base table at ('" + c.morphism_name(g) + "', '" +
                           c.morphism_name(f) + "')");
          if (expected < 0) expected = cong.class_of[gf];
          if (cong.class_of[gf] != expected)
            throw CatError("quotient: congruence violation, induced composite of ('" +
                           class_names[kg] + "', '" + class_names[kf] + "') is ill-defined");
        }
      }
      if (identity_class[kg] || identity_class[kf]) continue;
      data.composition.push_back({class_names[kg], class_names[kf], class_names[expected]});
    }
  }

  QuotientResult result;
  result.cat = make_category(data);

  Functor proj;
  proj.source = base;
  proj.target = result.cat;
  proj.on_objects.resize(c.object_count());
  proj.on_morphisms.resize(c.morphism_count());
  for (int o = 0; o < c.object_count(); ++o)
    proj.on_objects[o] = result.cat->object_index(c.object_name(o));
  for (int f = 0; f < c.morphism_count(); ++f)
    proj.on_morphisms[f] = result.cat->morphism_index(class_names[cong.class_of[f]]);
  result.projection = std::move(proj);
  return result;
}

std::vector<std::string> hom_set(const FinCategory& c, std::string_view x, std::string_view y) {
  int xi = c.object_index(x);
  int yi = c.object_index(y);
  if (xi < 0 || yi < 0) throw CatError("hom_set: unknown object");
  std::vector<std::string> out;
  for (int f : c.hom(xi, yi)) out.push_back(c.morphism_name(f));
  return out;
}

namespace {

void enumerate_morphism_maps(CatPtr cp, CatPtr dp, const std::vector<int>& obj_map,
                             std::vector<int>& mor_map, int next, std::vector<Functor>& out) {
  const FinCategory& c = *cp;
  const FinCategory& d = *dp;
  if (next == c.morphism_count()) {
    Functor f{cp, dp, obj_map, mor_map};
    if (check_functor(f)) out.push_back(std::move(f));
    return;
  }
  if (c.is_identity(next)) {
    mor_map[next] = d.identity(obj_map[c.dom(next)]);
    enumerate_morphism_maps(cp, dp, obj_map, mor_map, next + 1, out);
    return;
  }
  for (int cand : d.hom(obj_map[c.dom(next)], obj_map[c.cod(next)])) {
    mor_map[next] = cand;
    bool viable = true;
    // prune with composites already determined
    for (int other = 0; other <= next && viable; ++other) {
      int gf = c.composable(next, other) ? c.compose(next, other) : -1;
      if (gf >= 0 && gf <= next) {
        int target = d.compose(mor_map[next], mor_map[other]);
        if (target != mor_map[gf]) viable = false;
      }
      int fg = c.composable(other, next) ? c.compose(other, next) : -1;
      if (viable && fg >= 0 && fg <= next) {
        int target = d.compose(mor_map[other], mor_map[next]);
        if (target != mor_map[fg]) viable = false;
      }
    }
    if (viable) enumerate_morphism_maps(cp, dp, obj_map, mor_map, next + 1, out);
  }
  mor_map[next] = -1;
}

void enumerate_object_maps(CatPtr cp, CatPtr dp, std::vector<int>& obj_map, int next,
                           std::vector<Functor>& out) {
  const FinCategory& c = *cp;
  const FinCategory& d = *dp;
  if (next == c.object_count()) {
    std::vector<int> mor_map(c.morphism_count(), -1);
    enumerate_morphism_maps(cp, dp, obj_map, mor_map, 0, out);
    return;
  }
  for (int cand = 0; cand < d.object_count(); ++cand) {
    obj_map[next] = cand;
    enumerate_object_maps(cp, dp, obj_map, next + 1, out);
  }
  obj_map[next] = -1;
}

}  // namespace

std::vector<Functor> enumerate_functors(CatPtr c, CatPtr d) {
  std::vector<Functor> out;
  std::vector<int> obj_map(c->object_count(), -1);
  enumerate_object_maps(c, d, obj_map, 0, out);
  return out;
}

std::vector<NatTransformation> enumerate_natural(const Functor& f, const Functor& g) {
  std::vector<NatTransformation> out;
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target)) return out;
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  std::vector<int> comp(s.object_count(), -1);
  // lexicographic product over hom(F o, G o)
  auto rec = [&](auto&& self, int o) -> void {
    if (o == s.object_count()) {
      NatTransformation n{f, g, comp};
      if (check_natural(n)) out.push_back(std::move(n));
      return;
    }
    for (int cand : t.hom(f.on_objects[o], g.on_objects[o])) {
      comp[o] = cand;
      self(self, o + 1);
    }
    comp[o] = -1;
  };
  rec(rec, 0);
  return out;
}

}  // namespace factoriad
