// Exact counts over the three-layer recognizer automaton, read left-to-right
// or with all arrows reversed (right-to-left).
//
// Layers record the last step: F (U, or the empty path), G (D), H (L).
// Left-to-right transitions at level k:
//   U: F_k, G_k -> F_{k+1}
//   D: F_{k+t}, G_{k+t}, H_{k+t} -> G_k
//   L: G_{k+t}, H_{k+t} -> H_k
// Right-to-left runs start in G_0 and H_0 (the empty path is counted once,
// in G_0), and arrivals on level 0 land in G_0 (f_0 = 0).
#pragma once

#include "skewdyck/series.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace skewdyck {

enum class Layer { F = 0, G = 1, H = 2 };
inline constexpr std::array<Layer, 3> kLayers{Layer::F, Layer::G, Layer::H};

char layer_char(Layer layer);
Layer parse_layer(std::string_view text);  // "F"/"f", "G"/"g", "H"/"h"

enum class Direction { LeftToRight, RightToLeft };
std::string_view direction_name(Direction d);

class CountTable {
 public:
  CountTable(int t, int n_max, int k_max, Direction direction);

  int t() const { return t_; }
  int n_max() const { return n_max_; }
  int k_max() const { return k_max_; }
  Direction direction() const { return direction_; }

  /// Throws std::out_of_range outside 0..n_max, 0..k_max.
  const BigInt& at(int n, int k, Layer layer) const;
  BigInt level_sum(int n, int k) const;

  /// Column for (layer, level k) as a power series in z known modulo
  /// z^(n_max + 1).
  Series column(Layer layer, int k) const;

  /// Rows "n,k,layer,count" with a header line; zero cells are skipped.
  std::string to_csv() const;
  nlohmann::json to_json() const;

 private:
  friend CountTable dp_counts(int, int, int, Direction);
  BigInt& cell(int n, int k, Layer layer);
  std::size_t index(int n, int k, Layer layer) const;

  int t_;
  int n_max_;
  int k_max_;
  Direction direction_;
  std::vector<BigInt> counts_;
};

/// k_max < 0 selects the full reachable range (n_max LR, t*n_max RL).
CountTable dp_counts(int t, int n_max, int k_max = -1, Direction direction = Direction::LeftToRight);

/// Number of closed skew t-Dyck paths of length n.
BigInt total(int t, int n);

/// Closed-path counts for lengths 0..n_max.
std::vector<BigInt> totals(int t, int n_max, Direction direction = Direction::LeftToRight);

/// Single cell of a freshly built left-to-right table.
BigInt prefix_count(int t, Layer layer, int k, int n);

struct EquationCheck {
  std::string name;
  bool holds = true;
  std::string first_violation;  // "u^j z^n: lhs=.. rhs=.." when !holds
};

struct FunctionalEquationReport {
  int t = 2;
  Direction direction = Direction::LeftToRight;
  int u_degree = 0;
  int z_order = 0;
  std::vector<EquationCheck> equations;

  bool all_hold() const;
};

/// Builds F, G, H as polynomials in u (degree <= u_degree) with series
/// coefficients from DP columns and checks the three summed functional
/// equations coefficientwise to z^z_order.
FunctionalEquationReport verify_functional_equations(int t, int u_degree, int z_order,
                                                     Direction direction = Direction::LeftToRight);

/// z a_k - a_{k+1} - z^2 a_{k+2} + 2 z a_{k+3} - z^3 a_{k+4}, the order-4
/// column recurrence of the t = 2 kernel.
Series order4_recurrence_residual(const Series& a0, const Series& a1, const Series& a2,
                                  const Series& a3, const Series& a4);

}  // namespace skewdyck
