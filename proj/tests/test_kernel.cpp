#include "skewdyck/automaton.hpp"
#include "skewdyck/kernel.hpp"

#include <doctest.h>

using namespace skewdyck;

TEST_CASE("kernel polynomials") {
  CHECK(kernel_poly(2).to_string() == "z*u^4 - u^3 - z^2*u^2 + 2*z*u - z^3");
  CHECK(kernel_poly(3).to_string() == "z*u^6 - u^5 - z^2*u^3 + 2*z*u^2 - z^3");
  CHECK(kernel_poly(4).to_string() == "z*u^8 - u^7 - z^2*u^4 + 2*z*u^3 - z^3");
  CHECK_THROWS_AS(kernel_poly(1), std::invalid_argument);
  CHECK(good_root_equation(2).to_string() == "v^4 - v^3 - z^3*v^2 + 2*z^3*v - z^6");
}

TEST_CASE("good root s4") {
  const auto s4 = good_root(2, 27);
  CHECK(s4.to_string() ==
        "z^-1 - z^2 - 2*z^5 - 8*z^8 - 39*z^11 - 210*z^14 - 1203*z^17 - 7192*z^20 - 44362*z^23 "
        "- 280250*z^26 + O(z^27)");
  CHECK(kernel_poly(2).poly.evaluate(s4).truncated(20).is_zero());
}

TEST_CASE("good root s6 and comparison with the quoted expansion") {
  const auto s6 = good_root(3, 32);
  CHECK(s6.valuation() == -1);
  CHECK(s6.coeff(3) == -1);
  CHECK(s6.coeff(7) == -3);
  CHECK(s6.coeff(11) == -16);
  CHECK(s6.coeff(31) == -381093);
  std::vector<int> flagged;
  for (const auto& c : compare_with_printed(s6, printed_s6_coefficients()))
    if (!c.matches()) flagged.push_back(c.exponent);
  CHECK(flagged == std::vector<int>{7, 31});
}

TEST_CASE("good roots for larger t satisfy the kernel to order 40") {
  for (int t = 2; t <= 6; ++t) {
    const auto s = good_root(t, 40);
    CHECK(s.valuation() == -1);
    CHECK(kernel_poly(t).poly.evaluate(s).truncated(40 - 2 * t).is_zero());
  }
}

TEST_CASE("t = 2 closed forms") {
  const auto sol = solve_t2(22);
  CHECK(sol.g0.to_string() ==
        "z^3 + 3*z^6 + 13*z^9 + 66*z^12 + 365*z^15 + 2131*z^18 + 12921*z^21 + O(z^22)");
  CHECK(sol.h0.to_string() ==
        "z^6 + 6*z^9 + 34*z^12 + 198*z^15 + 1191*z^18 + 7364*z^21 + O(z^22)");
  CHECK(sol.total.to_string() ==
        "1 + z^3 + 4*z^6 + 19*z^9 + 100*z^12 + 563*z^15 + 3322*z^18 + 20285*z^21 + O(z^22)");
  CHECK(sol.g0.coeff(9) == 13);
  CHECK(sol.total.coeff(15) == 563);
  CHECK(sol.f1.agrees_with(Series::monomial(1, 1, 22) + sol.g0.shifted(1)));
  const auto j = sol.to_json();
  CHECK(j["g0"]["coeffs"][0] == "1/1");
}

TEST_CASE("kernel total equals DP totals through length 60") {
  const auto sol = solve_t2(64);
  const auto dp = totals(2, 63);
  for (int n = 0; n < 64; ++n) CHECK(sol.total.coeff(n) == Rational(dp[static_cast<std::size_t>(n)]));
}

TEST_CASE("prefix series") {
  const auto sol = solve_t2(30);
  CHECK(prefix_series_t2(sol, Layer::F, 0).agrees_with(Series::constant(1, 30)));
  CHECK(prefix_series_t2(sol, Layer::H, 0).agrees_with(sol.h0));
  CHECK(prefix_series_t2(sol, Layer::G, 0).agrees_with(sol.g0));
  CHECK(prefix_series_t2(Layer::F, 1, 8).to_string() == "z + z^4 + 3*z^7 + O(z^8)");
  const auto table = dp_counts(2, 24, 8);
  for (Layer l : kLayers)
    for (int k = 0; k <= 8; ++k) {
      const auto s = prefix_series_t2(sol, l, k);
      for (int n = 0; n <= 24; ++n) CHECK(s.coeff(n) == Rational(table.at(n, k, l)));
    }
}

TEST_CASE("order-4 recurrence") {
  for (Layer l : kLayers) {
    CHECK(recurrence_check(l, 0, 6, 30).all_zero());
    CHECK(dp_recurrence_check(l, 0, 6, 30).all_zero());
  }
}

TEST_CASE("geometric-ratio property") {
  CHECK(ratio_property(2, 6, 24).all_hold());
  CHECK(ratio_property(3, 6, 24).all_hold());
  CHECK(ratio_property(4, 4, 20).all_hold());
}
