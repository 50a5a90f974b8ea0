#include "skewdyck/closed_form.hpp"

#include "skewdyck/automaton.hpp"
#include "skewdyck/kernel.hpp"

#include <sstream>
#include <stdexcept>

namespace skewdyck {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is C(n, i+1) after this step
  }
  return r;
}

Series r_series(int precision) {
  if (precision < 1) throw std::invalid_argument("r_series: precision must be positive");
  const Series disc = Series::polynomial({1, -8, 4}, precision + 1);
  const Series numerator = Series::polynomial({1, 2}, precision + 1) - disc.sqrt();
  if (numerator.valuation() < 1)
    throw SeriesError("r_series: 1/z terms failed to cancel");
  return (numerator.shifted(-1) * Rational(1, 6)).truncated(precision);
}

namespace {

BigInt pow3(long i) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(i));
  return r;
}

// sum_{i=0}^{n} 3^i C(n-1,i) C(n+1,i+1)
BigInt first_sum(long n) {
  BigInt s = 0;
  for (long i = 0; i <= n; ++i) s += pow3(i) * binomial(n - 1, i) * binomial(n + 1, i + 1);
  return s;
}

using Poly = std::vector<BigInt>;

Poly times_linear(const Poly& p, long c) {  // p * (1 + c t)
  Poly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + 1] += p[i] * c;
  }
  return out;
}

Poly product_power(long a, long b) {  // (1+t)^a (1+3t)^b
  Poly p{1};
  for (long i = 0; i < a; ++i) p = times_linear(p, 1);
  for (long i = 0; i < b; ++i) p = times_linear(p, 3);
  return p;
}

BigInt coeff_at(const Poly& p, long i) {
  return i >= 0 && static_cast<std::size_t>(i) < p.size() ? p[static_cast<std::size_t>(i)] : BigInt(0);
}

}  // namespace

BigInt narayana_weighted_sum(long n) {
  if (n <= 0) throw std::invalid_argument("narayana_sum: n must be >= 1");
  BigInt s = 0;
  for (long i = 0; i < n; ++i) s += pow3(i) * binomial(n, i) * binomial(n, i + 1);
  return s;
}

BigInt narayana_sum(long n) {
  const BigInt s = narayana_weighted_sum(n);
  if (s % n != 0) throw std::logic_error("narayana_sum: n does not divide the weighted sum");
  return s / n;
}

bool lagrange_identity_check(long n) {
  if (n <= 0) throw std::invalid_argument("lagrange_identity_check: n must be >= 1");
  const BigInt weighted = narayana_weighted_sum(n);
  if (weighted % n != 0) return false;
  const BigInt target = weighted / n;
  const BigInt binomial_route = first_sum(n) - weighted;
  const BigInt poly_route = coeff_at(product_power(n + 1, n - 1), n) -
                            coeff_at(product_power(n, n), n - 1);
  return binomial_route == target && poly_route == target;
}

std::vector<CoeffReport> discrepancy_report(int n_max) {
  if (n_max < 1) throw std::invalid_argument("discrepancy_report: n_max must be >= 1");
  const Series r = r_series(n_max + 1);
  const KernelSolution kernel = solve_t2(3 * n_max + 1);
  const auto dp = totals(2, 3 * n_max);
  std::vector<CoeffReport> rows;
  for (int n = 1; n <= n_max; ++n) {
    CoeffReport row;
    row.n = n;
    const Rational rc = r.coeff(n);
    const Rational kc = kernel.total.coeff(3 * n);
    if (rc.get_den() != 1 || kc.get_den() != 1)
      throw std::logic_error("discrepancy_report: non-integral coefficient");
    row.r_coeff = rc.get_num();
    row.narayana_value = narayana_sum(n);
    row.kernel_total = kc.get_num();
    row.dp_total = dp[static_cast<std::size_t>(3 * n)];
    rows.push_back(std::move(row));
  }
  return rows;
}

int first_divergence(const std::vector<CoeffReport>& rows) {
  for (const auto& row : rows)
    if (!row.r_matches_dp()) return row.n;
  return -1;
}

std::string adjudication_line(const std::vector<CoeffReport>& rows) {
  const int n = first_divergence(rows);
  std::ostringstream out;
  if (n < 0) {
    out << "adjudication: R(z) and the DP counts agree for every n <= "
        << (rows.empty() ? 0 : rows.back().n);
    return out.str();
  }
  const auto& row = rows[static_cast<std::size_t>(n - rows.front().n)];
  out << "adjudication n=" << n << " (length " << 3 * n << "): DP count = " << row.dp_total.get_str()
      << "; matches " << (row.kernel_matches_dp() ? "kernel total " : "neither kernel total ")
      << row.kernel_total.get_str() << "; differs from R/Narayana " << row.r_coeff.get_str();
  return out.str();
}

std::string report_markdown(const std::vector<CoeffReport>& rows) {
  std::ostringstream out;
  out << "| n | length | [z^n]R | Narayana sum | kernel total | DP total | agree |\n"
      << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << r.n << " | " << 3 * r.n << " | " << r.r_coeff.get_str() << " | "
        << r.narayana_value.get_str() << " | " << r.kernel_total.get_str() << " | "
        << r.dp_total.get_str() << " | " << (r.all_agree() ? "yes" : "**no**") << " |\n";
  }
  out << "\n" << adjudication_line(rows) << "\n";
  return out.str();
}

nlohmann::json report_json(const std::vector<CoeffReport>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"length", 3 * r.n},
                   {"r_coeff", r.r_coeff.get_str()},
                   {"narayana", r.narayana_value.get_str()},
                   {"kernel_total", r.kernel_total.get_str()},
                   {"dp_total", r.dp_total.get_str()},
                   {"narayana_matches_r", r.narayana_matches_r()},
                   {"kernel_matches_dp", r.kernel_matches_dp()},
                   {"r_matches_dp", r.r_matches_dp()}});
  }
  return {{"rows", arr},
          {"first_divergence", first_divergence(rows)},
          {"adjudication", adjudication_line(rows)}};
}

}  // namespace skewdyck
