#pragma once

#include <string>
#include <utility>
#include <vector>

namespace factoriad {

/// One verified law: name, anchor into the underlying theory, outcome and,
/// when it failed, a counterexample naming concrete objects/morphisms.
struct CheckRecord {
  std::string law;
  std::string anchor;
  bool pass = true;
  std::string counterexample;
};

struct CheckReport {
  std::vector<CheckRecord> records;

  bool ok() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  void add_pass(std::string law, std::string anchor) {
    records.push_back({std::move(law), std::move(anchor), true, {}});
  }

  void add_fail(std::string law, std::string anchor, std::string counterexample) {
    records.push_back({std::move(law), std::move(anchor), false, std::move(counterexample)});
  }

  void merge(CheckReport other) {
    for (auto& r : other.records) records.push_back(std::move(r));
  }
};

/// Collects violations for a single law and flushes either one passing
/// record or one record per violation, keeping report order deterministic.
class LawCheck {
 public:
  LawCheck(std::string law, std::string anchor)
      : law_(std::move(law)), anchor_(std::move(anchor)) {}

  void violate(std::string counterexample) {
    violations_.push_back(std::move(counterexample));
  }

  bool clean() const { return violations_.empty(); }

  void flush(CheckReport& report) {
    if (violations_.empty()) {
      report.add_pass(law_, anchor_);
    } else {
      for (auto& v : violations_) report.add_fail(law_, anchor_, std::move(v));
    }
    violations_.clear();
  }

 private:
  std::string law_;
  std::string anchor_;
  std::vector<std::string> violations_;
};

}  // namespace factoriad
