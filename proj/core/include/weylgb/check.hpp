#pragma once

#include <string>
#include <vector>

namespace weylgb {

/// Outcome of one named verification.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of checks produced by a suite.
struct CheckList {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const CheckList& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool all_passed() const {
    for (const Check& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

}  // namespace weylgb
