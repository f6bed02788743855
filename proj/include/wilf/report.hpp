#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wilf {

/// Outcome of an exhaustive identity or congruence check.
struct CheckReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }

  void fail(std::string what) { violations.push_back(std::move(what)); }
  void merge(const CheckReport& other) {
    cases += other.cases;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace wilf
