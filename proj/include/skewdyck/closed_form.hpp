// R(z) = 1/(6z) + 1/3 - sqrt(1 - 8z + 4z^2)/(6z), its Narayana-weighted
// coefficient formula, and the table that sets R beside the path counts.
#pragma once

#include "skewdyck/series.hpp"

#include <string>
#include <vector>

namespace skewdyck {

BigInt binomial(long n, long k);

/// Power series R(z) known modulo z^precision.
Series r_series(int precision);

/// (1/n) sum_{i=0}^{n-1} 3^i C(n,i) C(n,i+1). Throws std::invalid_argument
/// for n <= 0; throws std::logic_error if n does not divide the sum.
BigInt narayana_sum(long n);

/// The unnormalized sum sum_{i=0}^{n-1} 3^i C(n,i) C(n,i+1).
BigInt narayana_weighted_sum(long n);

/// Checks, exactly, both that
///   sum 3^i C(n-1,i) C(n+1,i+1) - sum 3^i C(n,i) C(n,i+1) = narayana_sum(n)
/// and that the same difference equals
///   [t^n](1+t)^{n+1}(1+3t)^{n-1} - [t^{n-1}](1+t)^n(1+3t)^n
/// computed by polynomial multiplication.
bool lagrange_identity_check(long n);

struct CoeffReport {
  int n = 0;              // index into R; paths have length 3n
  BigInt r_coeff;
  BigInt narayana_value;
  BigInt kernel_total;    // [z^{3n}] (1 + g0 + h0)
  BigInt dp_total;        // closed paths of length 3n

  bool narayana_matches_r() const { return narayana_value == r_coeff; }
  bool kernel_matches_dp() const { return kernel_total == dp_total; }
  bool r_matches_dp() const { return r_coeff == dp_total; }
  bool all_agree() const { return narayana_matches_r() && kernel_matches_dp() && r_matches_dp(); }
};

/// Rows n = 1..n_max (n = 0 included as the empty path).
std::vector<CoeffReport> discrepancy_report(int n_max);

/// First n whose R coefficient differs from the DP count, or -1.
int first_divergence(const std::vector<CoeffReport>& rows);

/// One line stating the DP count at the first divergence and which side it
/// matches, built from the rows.
std::string adjudication_line(const std::vector<CoeffReport>& rows);

std::string report_markdown(const std::vector<CoeffReport>& rows);
nlohmann::json report_json(const std::vector<CoeffReport>& rows);

}  // namespace skewdyck
