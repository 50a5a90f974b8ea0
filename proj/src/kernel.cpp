#include "skewdyck/kernel.hpp"

#include <stdexcept>

namespace skewdyck {

KernelSpec kernel_poly(int t) {
  if (t < 2) throw std::invalid_argument("kernel_poly: t must be >= 2");
  KernelSpec spec;
  spec.t = t;
  spec.poly.add_term(2 * t, 1, 1)
      .add_term(2 * t - 1, 0, -1)
      .add_term(t, 2, -1)
      .add_term(t - 1, 1, 2)
      .add_term(0, 3, -1);
  return spec;
}

AlgebraicEq good_root_equation(int t) { return kernel_poly(t).poly.rescaled(-1); }

Series good_root(int t, int precision) {
  // s = v / z with v(0) = 1.
  const Series v = newton_root(good_root_equation(t), 1, precision + 1);
  return v.shifted(-1);
}

nlohmann::json KernelSolution::to_json() const {
  return {{"t", t},
          {"s", s.to_json()},
          {"g0", g0.to_json()},
          {"h0", h0.to_json()},
          {"total", total.to_json()},
          {"f1", f1.to_json()},
          {"g1_plus_h1", g1_plus_h1.to_json()},
          {"c_f", c_f.to_json()},
          {"c_g", c_g.to_json()}};
}

KernelSolution solve_t2(int precision) {
  if (precision < 1) throw std::invalid_argument("solve_t2: precision must be positive");
  const int work = precision + 2;
  const Series v = newton_root(good_root_equation(2), 1, work);  // v = z s_4
  const Series s = v.shifted(-1);
  const Series inv_v = v.reciprocal();                           // 1/(z s_4) = 1 + g0

  KernelSolution sol;
  sol.t = 2;
  sol.s = s.truncated(precision);
  const Series g0 = inv_v - Rational(1);
  // z/s^2 = z^3/v^2
  const Series h0 = inv_v - (inv_v * inv_v).shifted(3) - Rational(1);
  sol.g0 = g0.truncated(precision);
  sol.h0 = h0.truncated(precision);
  sol.total = (g0 + h0 + Rational(1)).truncated(precision);
  sol.f1 = (g0 + Rational(1)).shifted(1).truncated(precision);
  sol.g1_plus_h1 = (h0 * v).shifted(-2).truncated(precision);
  // z h0 s = h0 v
  sol.c_f = (Rational(1) - inv_v.shifted(3) - h0 * v).truncated(precision);
  sol.c_g = (inv_v.shifted(2) + (h0 * v).shifted(-1)).truncated(precision);
  return sol;
}

Series prefix_series_t2(const KernelSolution& sol, Layer layer, int k) {
  if (k < 0) throw std::invalid_argument("prefix_series_t2: k must be >= 0");
  const int precision = sol.total.precision();
  // s^{-m} = z^m / v^m with v = z s known one term further.
  const Series v = sol.s.shifted(1);
  auto s_pow_neg = [&](int m) { return v.pow(-m).shifted(m); };
  Series out;
  switch (layer) {
    case Layer::F: out = (sol.c_f * s_pow_neg(k + 1)).shifted(-1); break;
    case Layer::G: out = sol.c_g * s_pow_neg(k + 1); break;
    case Layer::H: out = sol.h0 * s_pow_neg(k); break;
  }
  return out.truncated(precision);
}

Series prefix_series_t2(Layer layer, int k, int precision) {
  return prefix_series_t2(solve_t2(precision + 1), layer, k).truncated(precision);
}

bool RecurrenceReport::all_zero() const {
  for (const auto& e : entries)
    if (!e.zero()) return false;
  return true;
}

RecurrenceReport recurrence_check(Layer layer, int k_lo, int k_hi, int precision) {
  const auto sol = solve_t2(precision + 1);
  std::vector<Series> a;
  for (int k = k_lo; k <= k_hi + 4; ++k) a.push_back(prefix_series_t2(sol, layer, k));
  RecurrenceReport report;
  for (int k = k_lo; k <= k_hi; ++k) {
    const auto i = static_cast<std::size_t>(k - k_lo);
    report.entries.push_back(
        {layer, k, order4_recurrence_residual(a[i], a[i + 1], a[i + 2], a[i + 3], a[i + 4])
                       .truncated(precision)});
  }
  return report;
}

RecurrenceReport dp_recurrence_check(Layer layer, int k_lo, int k_hi, int precision) {
  const auto table = dp_counts(2, precision - 1, k_hi + 4);
  RecurrenceReport report;
  for (int k = k_lo; k <= k_hi; ++k) {
    report.entries.push_back(
        {layer, k,
         order4_recurrence_residual(table.column(layer, k), table.column(layer, k + 1),
                                    table.column(layer, k + 2), table.column(layer, k + 3),
                                    table.column(layer, k + 4))
             .truncated(precision)});
  }
  return report;
}

bool RatioReport::all_hold() const {
  for (const auto& e : entries)
    if (!e.holds) return false;
  return true;
}

RatioReport ratio_property(int t, int k_max, int precision) {
  const Series s = good_root(t, precision);
  const auto table = dp_counts(t, precision, k_max + 1);
  RatioReport report;
  report.t = t;
  report.precision = precision;
  for (Layer layer : kLayers) {
    for (int k = 0; k <= k_max; ++k) {
      const Series lhs = table.column(layer, k).truncated(precision);
      const Series rhs = (table.column(layer, k + 1) * s).truncated(precision);
      RatioEntry e{layer, k, lhs.agrees_with(rhs), {}};
      if (!e.holds) {
        const Series diff = lhs - rhs;
        e.detail = "first difference at z^" + std::to_string(diff.valuation());
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

const std::map<int, long long>& printed_s6_coefficients() {
  static const std::map<int, long long> values{
      {-1, 1},     {3, -1},      {7, -1},        {11, -16},     {15, -104},
      {19, -749},  {23, -5748},  {27, -46069},   {31, -38109},
  };
  return values;
}

std::vector<RootComparison> compare_with_printed(const Series& root,
                                                 const std::map<int, long long>& printed) {
  std::vector<RootComparison> out;
  for (const auto& [exponent, value] : printed) {
    out.push_back({exponent, BigInt(static_cast<long>(value)), root.coeff(exponent)});
  }
  return out;
}

}  // namespace skewdyck
