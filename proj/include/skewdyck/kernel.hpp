// Kernel-method solution for left-to-right skew t-Dyck paths.
//
// The kernel K_t(u, z) = z u^{2t} - u^{2t-1} - z^2 u^t + 2 z u^{t-1} - z^3 has
// exactly one root with a 1/z leading term (the "good" root s_{2t}); every
// generating function of the left-to-right automaton is driven by it.
#pragma once

#include "skewdyck/automaton.hpp"
#include "skewdyck/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace skewdyck {

inline constexpr int kDefaultOrder = 64;

struct KernelSpec {
  int t = 2;
  AlgebraicEq poly;  // unknown u, coefficients polynomial in z

  std::string to_string() const { return poly.to_string("u", "z"); }
};

/// Throws std::invalid_argument for t < 2.
KernelSpec kernel_poly(int t);

/// K_t after u = v/z, cleared of powers of z:
/// v^{2t} - v^{2t-1} - z^{t+1} v^t + 2 z^{t+1} v^{t-1} - z^{2t+2}.
AlgebraicEq good_root_equation(int t);

/// The good root s_{2t} = 1/z - ..., known modulo z^precision.
Series good_root(int t, int precision = kDefaultOrder);

/// Closed forms for t = 2, all known modulo z^precision.
struct KernelSolution {
  int t = 2;
  Series s;            // s_4
  Series g0;           // 1/(z s) - 1
  Series h0;           // 1/(z s) - z/s^2 - 1
  Series total;        // 1 + g0 + h0
  Series f1;           // z + z g0
  Series g1_plus_h1;   // h0 s / z
  Series c_f;          // 1 - z^3 (1 + g0) - z h0 s
  Series c_g;          // z^2 (1 + g0) + h0 s

  nlohmann::json to_json() const;
};

KernelSolution solve_t2(int precision = kDefaultOrder);

/// f_k = C_f s^{-k-1} / z, g_k = C_g s^{-k-1}, h_k = h0 s^{-k}.
Series prefix_series_t2(const KernelSolution& solution, Layer layer, int k);
Series prefix_series_t2(Layer layer, int k, int precision = kDefaultOrder);

struct ResidualEntry {
  Layer layer = Layer::F;
  int k = 0;
  Series residual;
  bool zero() const { return residual.is_zero(); }
};

struct RecurrenceReport {
  std::vector<ResidualEntry> entries;
  bool all_zero() const;
};

/// Order-4 recurrence on the closed-form prefix series, k in [k_lo, k_hi].
RecurrenceReport recurrence_check(Layer layer, int k_lo, int k_hi, int precision);

/// Same recurrence on DP columns (t = 2).
RecurrenceReport dp_recurrence_check(Layer layer, int k_lo, int k_hi, int precision);

struct RatioEntry {
  Layer layer = Layer::F;
  int k = 0;
  bool holds = false;
  std::string detail;
};

struct RatioReport {
  int t = 2;
  int precision = 0;
  std::vector<RatioEntry> entries;
  bool all_hold() const;
};

/// Checks DP column k == DP column k+1 times s_{2t}, modulo z^precision,
/// for every layer and k = 0..k_max.
RatioReport ratio_property(int t, int k_max, int precision);

/// Externally quoted s_6 coefficients (exponent -> value). They are not
/// trusted: compare_with_printed() flags every entry the computed root
/// disagrees with.
const std::map<int, long long>& printed_s6_coefficients();

struct RootComparison {
  int exponent = 0;
  BigInt printed;
  Rational computed;
  bool matches() const { return computed == Rational(printed); }
};

/// Compares a computed root against printed integer coefficients.
std::vector<RootComparison> compare_with_printed(const Series& root,
                                                 const std::map<int, long long>& printed);

}  // namespace skewdyck
