#include "skewdyck/kernel_rl.hpp"

#include "skewdyck/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewdyck {

AlgebraicEq s1_equation() { return kernel_poly(2).poly.rescaled(2); }

AlgebraicEq reciprocal_kernel() {
  AlgebraicEq eq;
  eq.add_term(4, 3, 1).add_term(3, 1, -2).add_term(2, 2, 1).add_term(1, 0, 1).add_term(0, 1, -1);
  return eq;
}

Series rl_root_s1(int precision) {
  if (precision < 3) throw std::invalid_argument("rl_root_s1: precision must be >= 3");
  const Series w = newton_root(s1_equation(), Rational(1, 2), precision - 2);
  return w.shifted(2);
}

Series rl_t1(int precision) {
  // s4 = 1/z + ..., so 1/s4 gains two orders of absolute precision.
  return good_root(2, std::max(precision - 1, 1)).reciprocal().truncated(precision);
}

Series rl_g0(int precision) {
  const Series t1 = rl_t1(precision + 2);
  const Series sum = Series::constant(-1, precision + 1) - (t1 * t1).shifted(1) +
                     (t1 * Rational(2)).shifted(-1);
  if (sum.valuation() < 0)
    throw SeriesError("rl_g0: negative powers did not cancel (leading z^" +
                      std::to_string(sum.valuation()) + ")");
  return sum.truncated(precision);
}

Series rl_g0_rational_form(int precision) {
  const Series zt2 = (rl_t1(precision + 2).pow(2)).shifted(1);
  const Series num = Rational(1) - zt2;
  const Series den = Rational(1) - zt2 * Rational(2);
  return (num / den).truncated(precision);
}

nlohmann::json RlSolution::to_json() const {
  return {{"s1", s1.to_json()}, {"t1", t1.to_json()}, {"g0_rl", g0_rl.to_json()}};
}

RlSolution solve_rl(int precision) {
  RlSolution sol;
  sol.s1 = rl_root_s1(precision);
  sol.t1 = rl_t1(precision);
  sol.g0_rl = rl_g0(precision);
  return sol;
}

const std::map<int, Rational>& printed_s1_coefficients() {
  static const std::map<int, Rational> coeffs{
      {2, Rational(1, 2)},        {5, Rational(3, 16)},        {8, Rational(17, 128)},
      {11, Rational(29, 256)},    {14, Rational(861, 8192)},   {17, Rational(6675, 65536)},
      {20, Rational(13231, 131072)}, {23, Rational(52939, 524288)}};
  return coeffs;
}

BigInt rl_prefix_counts(Layer layer, int k, int n) {
  if (n < 0 || k < 0) {
    throw std::out_of_range("rl_prefix_counts: n and k must be >= 0 (got k=" +
                            std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  const auto table = dp_counts(2, n, -1, Direction::RightToLeft);
  if (k > table.k_max()) return 0;
  return table.at(n, k, layer);
}

BigInt rl_prefix_counts(int k, int n) { return rl_prefix_counts(Layer::G, k, n); }

}  // namespace skewdyck
