// Right-to-left reading of skew 2-Dyck paths. The reversed automaton's
// kernel is the reciprocal polynomial z^3 u^4 - 2 z u^3 + z^2 u^2 + u - z
// with roots 1/s1, ..., 1/s4. Only 1/s4 = z + z^4 + ... is a power series
// vanishing at 0, so the factor cancelled is (u - t1) with t1 = 1/s4.
// (1/s1 = 2/z^2 - ... is a Laurent series; using it gives 1/2 - z^3/16 - ...)
#pragma once

#include "skewdyck/automaton.hpp"
#include "skewdyck/series.hpp"

#include <map>

namespace skewdyck {

/// z^6 w^4 - z^3 w^3 - z^3 w^2 + 2w - 1, the quartic kernel after u = z^2 w.
AlgebraicEq s1_equation();

/// -2 u^3 z + z^2 u^2 + z^3 u^4 + u - z.
AlgebraicEq reciprocal_kernel();

/// s1 = z^2 w(z), w(0) = 1/2, known modulo z^precision.
Series rl_root_s1(int precision);

/// t1 = 1/s4 = z + z^4 + ..., known modulo z^precision.
Series rl_t1(int precision);

/// g0 = -1 - z t1^2 + 2 t1 / z. Throws SeriesError if the z^-3..z^-1 terms
/// fail to cancel.
Series rl_g0(int precision);

/// g0 = (1 - z t1^2) / (1 - 2 z t1^2), evaluated independently.
Series rl_g0_rational_form(int precision);

struct RlSolution {
  Series s1;
  Series t1;  // 1/s4
  Series g0_rl;

  nlohmann::json to_json() const;
};

RlSolution solve_rl(int precision);

/// Quoted s1 coefficients through z^23 (exponent -> value).
const std::map<int, Rational>& printed_s1_coefficients();

/// [z^n][u^k] G(u) for the reversed automaton (partial paths read from the
/// right, ending on level k in the second layer).
BigInt rl_prefix_counts(int k, int n);
BigInt rl_prefix_counts(Layer layer, int k, int n);

}  // namespace skewdyck
