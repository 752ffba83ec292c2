#include "cyclicpic/report.hpp"

namespace cyclicpic {

void print_checks(std::ostream& out, const Report& report) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
}

}  // namespace cyclicpic
