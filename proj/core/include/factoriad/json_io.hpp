#pragma once

#include <map>
#include <string>
#include <vector>

#include "factoriad/fincat.hpp"

namespace factoriad {

struct ArrowCat;
struct FreydCat;

/// Parses the category file format. `origin` names the input in diagnostics.
/// Accepts the plain format and the provenance-extended emissions.
CatPtr load_category_json(const std::string& text, const std::string& origin);
CatPtr load_category_file(const std::string& path);

/// Deterministic emission: two-space indent, keys in schema order, morphisms
/// and objects in their lexicographic storage order, trailing newline.
std::string emit_category(const FinCategory& c);
std::string emit_arrow(const ArrowCat& a);
std::string emit_freyd(const FreydCat& f);

struct FsData {
  bool strict = false;
  std::vector<std::string> left;   // E or E0
  std::vector<std::string> right;  // M or M0
};

FsData load_fs_json(const std::string& text, const std::string& origin);
FsData load_fs_file(const std::string& path);
std::string emit_fs(const FsData& fs);

struct ChoiceEntry {
  std::string e, mid, m;
};
using ChoiceData = std::map<std::string, ChoiceEntry>;

ChoiceData load_choice_json(const std::string& text, const std::string& origin);
ChoiceData load_choice_file(const std::string& path);

struct AlgebraData {
  std::string monad;  // "P" or "Fr"
  std::map<std::string, std::string> on_objects;
  std::map<std::string, std::string> on_morphisms;
  std::map<std::string, std::string> theta;  // empty => strict
  bool has_theta = false;
};

AlgebraData load_algebra_json(const std::string& text, const std::string& origin);
AlgebraData load_algebra_file(const std::string& path);
std::string emit_algebra(const AlgebraData& a);

std::string read_file(const std::string& path);

/// FNV-1a 64-bit digest used to fingerprint inputs in reports.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace factoriad
