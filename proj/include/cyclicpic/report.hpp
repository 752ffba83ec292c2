#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclicpic {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string header;
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// One `[PASS]`/`[FAIL]` line per check under the header; no summary line.
void print_checks(std::ostream& out, const Report& report);

}  // namespace cyclicpic
