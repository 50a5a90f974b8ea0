#include "skewdyck/automaton.hpp"
#include "skewdyck/kernel.hpp"
#include "skewdyck/kernel_rl.hpp"

#include <doctest.h>

using namespace skewdyck;

TEST_CASE("s1") {
  const auto s1 = rl_root_s1(24);
  CHECK(s1.valuation() == 2);
  CHECK(s1.leading() == Rational(1, 2));
  for (const auto& [e, c] : printed_s1_coefficients()) CHECK(s1.coeff(e) == c);
  CHECK(kernel_poly(2).poly.evaluate(s1).is_zero());
  CHECK(s1_equation().at_zero(Rational(1, 2)) == 0);
}

TEST_CASE("t1 is 1/s4 and a root of the reciprocal kernel") {
  const auto t1 = rl_t1(30);
  CHECK(t1.to_string().rfind("z + z^4 + 3*z^7 + 13*z^10", 0) == 0);
  CHECK(reciprocal_kernel().evaluate(t1).is_zero());
  CHECK((t1 * good_root(2, 30)).truncated(29).agrees_with(Series::constant(1, 29)));
}

TEST_CASE("g0 from the right-to-left reading") {
  const auto g0 = rl_g0(22);
  CHECK(g0.to_string() ==
        "1 + z^3 + 4*z^6 + 19*z^9 + 100*z^12 + 563*z^15 + 3322*z^18 + 20285*z^21 + O(z^22)");
  CHECK(g0.agrees_with(solve_t2(22).total));
  CHECK(g0.agrees_with(rl_g0_rational_form(22)));
  const auto dp = totals(2, 40, Direction::RightToLeft);
  const auto long_g0 = rl_g0(41);
  for (int n = 0; n <= 40; ++n) CHECK(long_g0.coeff(n) == Rational(dp[static_cast<std::size_t>(n)]));
}

TEST_CASE("RL prefix counts") {
  CHECK(rl_prefix_counts(0, 3) == 1);
  CHECK(rl_prefix_counts(0, 0) == 1);
  CHECK(rl_prefix_counts(1, 1) == 0);
  for (int n = 0; n <= 30; ++n) CHECK(rl_prefix_counts(0, n) == total(2, n));
  CHECK(rl_prefix_counts(50, 3) == 0);
  CHECK_THROWS_AS(rl_prefix_counts(-1, 3), std::out_of_range);
}

TEST_CASE("solution json") {
  const auto j = solve_rl(12).to_json();
  CHECK(j.contains("s1"));
  CHECK(j["g0_rl"]["coeffs"][0] == "1/1");
}
