#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "factoriad/report.hpp"

namespace factoriad {

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

struct CatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Malformed input data (files or construction tables). CLI exit code 2.
struct LoadError : CatError {
  using CatError::CatError;
};
/// A size guard refused the operation. CLI exit code 3.
struct GuardError : CatError {
  using CatError::CatError;
};

struct MorphismDecl {
  std::string name;
  std::string dom;
  std::string cod;
};

/// Construction data in loader form: the composition list covers exactly the
/// composable pairs not forced by the identity laws.
struct CategoryData {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object -> morphism
  std::vector<std::array<std::string, 3>> composition;          // {g, f, g.f}
};

/// Raw form: the table is taken verbatim, including identity composites and
/// holes, so law violations stay representable for validate_category.
struct RawCategoryData {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<std::array<std::string, 3>> composition;  // every pair it defines
};

/// A finite category as explicit tables. Objects and morphisms are sorted
/// lexicographically by name, so an index doubles as a deterministic rank and
/// equal data always yields identical layouts.
class FinCategory {
 public:
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& morphisms() const { return morphisms_; }
  const std::string& object_name(int o) const { return objects_[o]; }
  const std::string& morphism_name(int m) const { return morphisms_[m]; }

  int dom(int m) const { return dom_[m]; }
  int cod(int m) const { return cod_[m]; }
  int identity(int o) const { return identity_[o]; }
  bool is_identity(int m) const { return identity_[dom_[m]] == m && dom_[m] == cod_[m]; }

  bool composable(int g, int f) const { return dom_[g] == cod_[f]; }

  /// Composite g.f, or -1 when the pair is not composable or the table has a
  /// hole (only raw-constructed categories can have holes).
  int compose(int g, int f) const {
    if (dom_[g] != cod_[f]) return -1;
    return comp_rows_[row_offset_[g] + rank_in_[f]];
  }

  /// Morphisms x -> y in index (= name) order.
  std::span<const int> hom(int x, int y) const;

  int object_index(std::string_view name) const;    // -1 if absent
  int morphism_index(std::string_view name) const;  // -1 if absent

  bool operator==(const FinCategory& other) const;

  friend CatPtr make_category(const CategoryData& data);
  friend CatPtr make_category_raw(const RawCategoryData& data);

 private:
  FinCategory() = default;
  void build_indexes();
  void set_compose(int g, int f, int gf);

  std::vector<std::string> objects_;
  std::vector<std::string> morphisms_;
  std::vector<int> dom_, cod_;
  std::vector<int> identity_;

  // composition rows in CSR layout: row g holds the composites g.f for the
  // morphisms f into dom(g), addressed by f's rank among arrows into cod(f)
  std::vector<int32_t> comp_rows_;
  std::vector<std::size_t> row_offset_;  // per morphism
  std::vector<int32_t> rank_in_;         // per morphism, rank within incoming(cod)

  // hom sets in CSR layout over (dom, cod) cells
  std::vector<int32_t> hom_offsets_;  // object_count^2 + 1
  std::vector<int> hom_items_;        // morphism ids grouped by cell
};

CatPtr make_category(const CategoryData& data);
CatPtr make_category_raw(const RawCategoryData& data);

bool same_category(const CatPtr& a, const CatPtr& b);

/// Every violated identity/associativity/coherence instance, plus missing
/// composites ("incomplete table"). Empty report iff C is a category.
CheckReport validate_category(const FinCategory& c);

bool is_epi(const FinCategory& c, int f);
bool is_mono(const FinCategory& c, int f);
bool is_iso(const FinCategory& c, int f);
/// Index of the two-sided inverse, or -1.
int inverse_of(const FinCategory& c, int f);

/// Unique fill-in property of e against m: every commuting square (u, v) with
/// v.e = m.u admits exactly one w with w.e = u and m.w = v.
bool orthogonal(const FinCategory& c, int e, int m);

struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;

  int obj(int o) const { return on_objects[o]; }
  int mor(int m) const { return on_morphisms[m]; }
};

Functor identity_functor(CatPtr c);
Functor compose_functors(const Functor& g, const Functor& f);
bool functors_equal(const Functor& a, const Functor& b);

std::vector<std::string> functor_violations(const Functor& f);
bool check_functor(const Functor& f);

struct NatTransformation {
  Functor source;
  Functor target;
  std::vector<int> components;  // per source-category object, a target-category morphism
};

std::vector<std::string> natural_violations(const NatTransformation& n);
bool check_natural(const NatTransformation& n);

/// Morphism partition with fused class/index views. Class ids are ordered by
/// least member, so they are deterministic.
struct Congruence {
  CatPtr base;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;
};

/// Union-find over the seed pairs, then composition closure iterated to a
/// fixed point.
Congruence make_congruence(CatPtr base, const std::vector<std::pair<int, int>>& related);

/// Throws LoadError unless classes form a partition of the morphism set.
Congruence congruence_from_classes(CatPtr base, std::vector<std::vector<int>> classes);

std::vector<std::string> congruence_violations(const Congruence& cong);
bool validate_congruence(const Congruence& cong);

struct QuotientResult {
  CatPtr cat;
  Functor projection;  // base -> cat
};

/// Objects unchanged, morphisms become classes named by their least
/// representative. Throws CatError if the induced composition is ill-defined.
QuotientResult quotient(CatPtr base, const Congruence& cong);

std::vector<std::string> hom_set(const FinCategory& c, std::string_view x, std::string_view y);

/// Exactly all functors c -> d, in lexicographic assignment order.
std::vector<Functor> enumerate_functors(CatPtr c, CatPtr d);

/// Exactly all natural transformations f -> g between parallel functors.
std::vector<NatTransformation> enumerate_natural(const Functor& f, const Functor& g);

}  // namespace factoriad
