#include "skewdyck/automaton.hpp"

#include <sstream>
#include <stdexcept>

namespace skewdyck {

char layer_char(Layer layer) {
  switch (layer) {
    case Layer::F: return 'F';
    case Layer::G: return 'G';
    case Layer::H: return 'H';
  }
  return '?';
}

Layer parse_layer(std::string_view text) {
  if (text == "F" || text == "f") return Layer::F;
  if (text == "G" || text == "g") return Layer::G;
  if (text == "H" || text == "h") return Layer::H;
  throw std::invalid_argument("unknown layer '" + std::string(text) + "' (expected F, G or H)");
}

std::string_view direction_name(Direction d) {
  return d == Direction::LeftToRight ? "LR" : "RL";
}

CountTable::CountTable(int t, int n_max, int k_max, Direction direction)
    : t_(t), n_max_(n_max), k_max_(k_max), direction_(direction) {
  if (t < 2) throw std::invalid_argument("CountTable: t must be >= 2");
  if (n_max < 0 || k_max < 0) throw std::invalid_argument("CountTable: bounds must be >= 0");
  counts_.resize(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(k_max + 1) * 3);
}

std::size_t CountTable::index(int n, int k, Layer layer) const {
  return (static_cast<std::size_t>(n) * static_cast<std::size_t>(k_max_ + 1) +
          static_cast<std::size_t>(k)) * 3 + static_cast<std::size_t>(layer);
}

const BigInt& CountTable::at(int n, int k, Layer layer) const {
  if (n < 0 || n > n_max_ || k < 0 || k > k_max_) {
    throw std::out_of_range("CountTable: cell (n=" + std::to_string(n) + ", k=" +
                            std::to_string(k) + ") outside 0..." + std::to_string(n_max_) +
                            " x 0..." + std::to_string(k_max_));
  }
  return counts_[index(n, k, layer)];
}

BigInt& CountTable::cell(int n, int k, Layer layer) { return counts_[index(n, k, layer)]; }

BigInt CountTable::level_sum(int n, int k) const {
  return at(n, k, Layer::F) + at(n, k, Layer::G) + at(n, k, Layer::H);
}

Series CountTable::column(Layer layer, int k) const {
  std::vector<Rational> c(static_cast<std::size_t>(n_max_ + 1));
  for (int n = 0; n <= n_max_; ++n) c[static_cast<std::size_t>(n)] = Rational(at(n, k, layer));
  return Series::from_coeffs(0, std::move(c));
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "n,k,layer,count\n";
  for (int n = 0; n <= n_max_; ++n)
    for (int k = 0; k <= k_max_; ++k)
      for (Layer l : kLayers) {
        const auto& c = at(n, k, l);
        if (c != 0) out << n << "," << k << "," << layer_char(l) << "," << c.get_str() << "\n";
      }
  return out.str();
}

nlohmann::json CountTable::to_json() const {
  nlohmann::json layers = nlohmann::json::object();
  for (Layer l : kLayers) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= n_max_; ++n) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k <= k_max_; ++k) row.push_back(at(n, k, l).get_str());
      rows.push_back(std::move(row));
    }
    layers[std::string(1, layer_char(l))] = std::move(rows);
  }
  return {{"t", t_},
          {"direction", std::string(direction_name(direction_))},
          {"n_max", n_max_},
          {"k_max", k_max_},
          {"counts", std::move(layers)}};
}

namespace {

struct Row {
  std::vector<BigInt> f, g, h;
  explicit Row(int levels) : f(levels), g(levels), h(levels) {}
};

// One step of the left-to-right automaton.
void step_lr(const Row& prev, Row& next, int t, int levels) {
  for (int k = 0; k < levels; ++k) {
    next.f[k] = k >= 1 ? BigInt(prev.f[k - 1] + prev.g[k - 1]) : BigInt(0);
    if (k + t < levels) {
      next.g[k] = prev.f[k + t] + prev.g[k + t] + prev.h[k + t];
      next.h[k] = prev.g[k + t] + prev.h[k + t];
    } else {
      next.g[k] = 0;
      next.h[k] = 0;
    }
  }
}

// One step with every arrow reversed; level-0 arrivals are kept in G only.
void step_rl(const Row& prev, Row& next, int t, int levels) {
  for (int k = 0; k < levels; ++k) {
    const BigInt from_up = k + 1 < levels ? prev.f[k + 1] : BigInt(0);
    BigInt from_down = 0;
    BigInt from_left = 0;
    if (k >= t) {
      from_down = prev.g[k - t];
      from_left = prev.h[k - t];
    }
    next.f[k] = k >= 1 ? BigInt(from_up + from_down) : BigInt(0);
    next.g[k] = from_up + from_down + from_left;
    next.h[k] = from_down + from_left;
  }
}

}  // namespace

CountTable dp_counts(int t, int n_max, int k_max, Direction direction) {
  if (t < 2) throw std::invalid_argument("dp_counts: t must be >= 2");
  if (n_max < 0) throw std::invalid_argument("dp_counts: n_max must be >= 0");
  const int reach = direction == Direction::LeftToRight ? n_max : t * n_max;
  if (k_max < 0) k_max = reach;
  CountTable table(t, n_max, k_max, direction);

  // Work over every reachable level so cropping to k_max loses nothing.
  const int levels = std::max(reach, k_max) + 1;
  Row cur(levels);
  Row nxt(levels);
  if (direction == Direction::LeftToRight) {
    cur.f[0] = 1;
  } else {
    cur.g[0] = 1;
    cur.h[0] = 1;
  }
  auto store = [&](int n, const Row& row) {
    for (int k = 0; k <= k_max && k < levels; ++k) {
      table.cell(n, k, Layer::F) = row.f[k];
      table.cell(n, k, Layer::G) = row.g[k];
      table.cell(n, k, Layer::H) = row.h[k];
    }
  };
  store(0, cur);
  for (int n = 1; n <= n_max; ++n) {
    if (direction == Direction::LeftToRight) step_lr(cur, nxt, t, levels);
    else step_rl(cur, nxt, t, levels);
    std::swap(cur, nxt);
    store(n, cur);
  }
  return table;
}

std::vector<BigInt> totals(int t, int n_max, Direction direction) {
  const auto table = dp_counts(t, n_max, 0, direction);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(direction == Direction::LeftToRight ? table.level_sum(n, 0)
                                                      : table.at(n, 0, Layer::G));
  }
  return out;
}

BigInt total(int t, int n) {
  if (n < 0) throw std::invalid_argument("total: n must be >= 0");
  if (n % (t + 1) != 0) return 0;  // #U = t * #down
  return totals(t, n).back();
}

BigInt prefix_count(int t, Layer layer, int k, int n) {
  if (n < 0 || k < 0) {
    throw std::out_of_range("prefix_count: n and k must be >= 0 (got n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  }
  if (k > n) return 0;
  return dp_counts(t, n, k).at(n, k, layer);
}

// --- functional equations ---------------------------------------------------

bool FunctionalEquationReport::all_hold() const {
  for (const auto& e : equations)
    if (!e.holds) return false;
  return true;
}

namespace {

// Polynomial in u with series coefficients, truncated at a fixed u-degree.
class UPoly {
 public:
  UPoly(int degree, int precision) : c_(static_cast<std::size_t>(degree + 1), Series(precision)) {}

  static UPoly from_table(const CountTable& table, Layer layer, int degree) {
    UPoly p(degree, table.n_max() + 1);
    for (int j = 0; j <= degree; ++j) p.c_[j] = table.column(layer, j);
    return p;
  }
  static UPoly one(int degree, int precision) {
    UPoly p(degree, precision);
    p.c_[0] = Series::constant(1, precision);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Series& operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }

  UPoly times_u(int k) const {
    UPoly out(degree(), c_[0].precision());
    for (int j = degree(); j >= k; --j) out.c_[j] = c_[j - k];
    return out;
  }
  UPoly times_z(int k) const {
    UPoly out = *this;
    for (auto& s : out.c_) s = s.shifted(k);
    return out;
  }
  /// Drops u^0 .. u^(m-1).
  UPoly without_low(int m) const {
    UPoly out = *this;
    for (int j = 0; j < m && j <= degree(); ++j) out.c_[j] = Series(c_[j].precision());
    return out;
  }
  UPoly operator+(const UPoly& o) const {
    UPoly out = *this;
    for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] += o.c_[j];
    return out;
  }
  UPoly operator-(const UPoly& o) const {
    UPoly out = *this;
    for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] -= o.c_[j];
    return out;
  }

 private:
  std::vector<Series> c_;
};

EquationCheck compare(std::string name, const UPoly& lhs, const UPoly& rhs, int z_order) {
  EquationCheck check{std::move(name), true, {}};
  for (int j = 0; j <= lhs.degree(); ++j) {
    const Series l = lhs[j].truncated(z_order);
    const Series r = rhs[j].truncated(z_order);
    const Series diff = (l - r).truncated(z_order);
    if (diff.is_zero()) continue;
    const int n = diff.valuation();
    std::ostringstream msg;
    msg << "u^" << j << " z^" << n << ": lhs=" << l.coeff(n).get_str()
        << " rhs=" << r.coeff(n).get_str();
    check.holds = false;
    check.first_violation = msg.str();
    return check;
  }
  return check;
}

}  // namespace

FunctionalEquationReport verify_functional_equations(int t, int u_degree, int z_order,
                                                     Direction direction) {
  if (u_degree < 0 || z_order < 1)
    throw std::invalid_argument("verify_functional_equations: need u_degree >= 0, z_order >= 1");
  const auto table = dp_counts(t, z_order - 1, u_degree, direction);
  const UPoly F = UPoly::from_table(table, Layer::F, u_degree);
  const UPoly G = UPoly::from_table(table, Layer::G, u_degree);
  const UPoly H = UPoly::from_table(table, Layer::H, u_degree);
  const UPoly one = UPoly::one(u_degree, z_order);

  FunctionalEquationReport report;
  report.t = t;
  report.direction = direction;
  report.u_degree = u_degree;
  report.z_order = z_order;
  const std::string ts = std::to_string(t);

  if (direction == Direction::LeftToRight) {
    report.equations.push_back(
        compare("F - 1 = uz(F + G)", F - one, (F + G).times_u(1).times_z(1), z_order));
    const UPoly tails = F.without_low(t) + G.without_low(t) + H.without_low(t);
    report.equations.push_back(compare("u^" + ts + " G = z(F - ...) + z(G - ...) + z(H - ...)",
                                       G.times_u(t), tails.times_z(1), z_order));
    const UPoly gh_tails = G.without_low(t) + H.without_low(t);
    report.equations.push_back(compare("u^" + ts + " H = z(G - ...) + z(H - ...)", H.times_u(t),
                                       gh_tails.times_z(1), z_order));
  } else {
    report.equations.push_back(
        compare("u(F - ...) = u^" + std::to_string(t + 1) + " zG + z(F - ...)",
                F.without_low(t).times_u(1),
                G.times_u(t + 1).times_z(1) + F.without_low(t + 1).times_z(1), z_order));
    report.equations.push_back(compare(
        "u(G - ...) = z(F - ...) + u^" + std::to_string(t + 1) + " zG + u^" +
            std::to_string(t + 1) + " zH",
        G.without_low(t).times_u(1),
        F.without_low(t + 1).times_z(1) + (G + H).times_u(t + 1).times_z(1), z_order));
    report.equations.push_back(compare("H - 1 = u^" + ts + " zG + u^" + ts + " zH", H - one,
                                       (G + H).times_u(t).times_z(1), z_order));
  }
  return report;
}

Series order4_recurrence_residual(const Series& a0, const Series& a1, const Series& a2,
                                  const Series& a3, const Series& a4) {
  return a0.shifted(1) - a1 - a2.shifted(2) + a3.shifted(1) * Rational(2) - a4.shifted(3);
}

}  // namespace skewdyck
