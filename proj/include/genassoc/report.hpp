#pragma once

#include <string>
#include <utility>
#include <vector>

namespace genassoc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named check results; failures carry their witnesses, never silent.
struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::string summary() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.passed ? "PASS  " : "FAIL  ";
      out += c.name;
      if (!c.detail.empty()) {
        out += ": ";
        out += c.detail;
      }
      out += "\n";
    }
    return out;
  }
};

}  // namespace genassoc
