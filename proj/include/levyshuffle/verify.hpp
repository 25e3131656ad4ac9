#pragma once

#include <string>
#include <vector>

namespace levyshuffle {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  int m_max = 0;
  std::vector<VerifyCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Cross-route identity suites: "shuffle", "matchings", "numbers" or "all".
/// m_max sets the enumeration scale (even words up to length 4*m_max,
/// sequence identities up to r = 2*m_max). Throws std::invalid_argument for
/// unknown suites or m_max < 1.
VerifyReport run_verify_suite(const std::string& suite, int m_max);

}  // namespace levyshuffle
