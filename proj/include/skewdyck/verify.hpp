// Cross-checks every closed form against the automaton DP oracle.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewdyck {

struct VerifyOptions {
  int order = 32;            // absolute z-precision for series comparisons
  std::vector<int> t_values{2};
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // findings that are not failures
  std::string adjudication;        // empty when t = 2 was not requested

  bool passed() const;
  void print(std::ostream& out) const;
};

VerificationReport run_verification(const VerifyOptions& options);

/// Cell-by-cell comparison of the DP table with exhaustive enumeration of
/// all valid words up to length n_max. Empty string on success, otherwise
/// the first mismatching cell.
std::string oracle_mismatch(int t, int n_max);

}  // namespace skewdyck
