#include "skewdyck/series.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace skewdyck {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s, 10));
    BigInt num(s.substr(0, slash), 10);
    BigInt den(s.substr(slash + 1), 10);
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------

Series::Series(int precision) : valuation_(precision), precision_(precision) {}

Series Series::constant(const Rational& c, int precision) {
  return monomial(c, 0, precision);
}

Series Series::monomial(const Rational& c, int exponent, int precision) {
  if (exponent >= precision || c == 0) return Series(precision);
  std::vector<Rational> coeffs(static_cast<std::size_t>(precision - exponent));
  coeffs[0] = c;
  return from_coeffs(exponent, std::move(coeffs));
}

Series Series::from_coeffs(int valuation, std::vector<Rational> coeffs) {
  Series s;
  s.valuation_ = valuation;
  s.precision_ = valuation + static_cast<int>(coeffs.size());
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

Series Series::polynomial(const std::vector<Rational>& coeffs, int precision) {
  if (precision <= 0) return Series(precision);
  std::vector<Rational> c(static_cast<std::size_t>(precision));
  const auto n = std::min(c.size(), coeffs.size());
  std::copy_n(coeffs.begin(), n, c.begin());
  return from_coeffs(0, std::move(c));
}

void Series::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Rational& q) { return q != 0; });
  const auto skip = static_cast<int>(first - coeffs_.begin());
  if (skip == 0) return;
  coeffs_.erase(coeffs_.begin(), first);
  valuation_ += skip;
}

Rational Series::coeff(int n) const {
  if (n >= precision_) {
    std::ostringstream msg;
    msg << "coefficient z^" << n << " is unknown; series is known for exponents < "
        << precision_;
    if (!coeffs_.empty()) msg << " (nonzero terms start at z^" << valuation_ << ")";
    throw SeriesError(msg.str());
  }
  if (n < valuation_) return 0;
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

const Rational& Series::leading() const {
  if (coeffs_.empty()) throw SeriesError("zero series has no leading coefficient");
  return coeffs_.front();
}

Series Series::truncated(int precision) const {
  if (precision >= precision_) return *this;
  if (precision <= valuation_) return Series(precision);
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + (precision - valuation_));
  return from_coeffs(valuation_, std::move(c));
}

Series Series::extended(int precision) const {
  if (precision <= precision_) return truncated(precision);
  if (coeffs_.empty()) return Series(precision);
  std::vector<Rational> c = coeffs_;
  c.resize(static_cast<std::size_t>(precision - valuation_));
  return from_coeffs(valuation_, std::move(c));
}

Series Series::shifted(int k) const {
  Series s = *this;
  s.valuation_ += k;
  s.precision_ += k;
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

Series& Series::operator+=(const Series& other) {
  const int prec = std::min(precision_, other.precision_);
  const int val = std::min({valuation_, other.valuation_, prec});
  std::vector<Rational> c(static_cast<std::size_t>(prec - val));
  for (int e = val; e < prec; ++e) {
    auto& slot = c[static_cast<std::size_t>(e - val)];
    if (e >= valuation_ && e < precision_) slot += coeffs_[static_cast<std::size_t>(e - valuation_)];
    if (e >= other.valuation_ && e < other.precision_)
      slot += other.coeffs_[static_cast<std::size_t>(e - other.valuation_)];
  }
  *this = from_coeffs(val, std::move(c));
  return *this;
}

Series& Series::operator-=(const Series& other) { return *this += -other; }

Series operator*(const Series& a, const Series& b) {
  const int val = a.valuation_ + b.valuation_;
  const int prec = std::min(a.valuation_ + b.precision_, b.valuation_ + a.precision_);
  if (a.is_zero() || b.is_zero() || prec <= val) return Series(prec);
  const auto n = static_cast<std::size_t>(prec - val);
  std::vector<Rational> c(n);
  const auto na = std::min(n, a.coeffs_.size());
  const auto nb = std::min(n, b.coeffs_.size());
  for (std::size_t i = 0; i < na; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < nb && i + j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Series::from_coeffs(val, std::move(c));
}

Series& Series::operator*=(const Series& other) { return *this = *this * other; }

Series& Series::operator*=(const Rational& scalar) {
  if (scalar == 0) return *this = Series(precision_);
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series operator+(const Series& a, const Rational& c) {
  if (a.precision() <= 0) return a;
  return a + Series::constant(c, a.precision());
}

bool operator==(const Series& a, const Series& b) {
  return a.valuation_ == b.valuation_ && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
}

bool Series::agrees_with(const Series& other) const {
  return (*this - other).is_zero();
}

Series Series::reciprocal() const {
  if (coeffs_.empty()) throw SeriesError("no reciprocal: series is zero to its precision");
  const auto n = coeffs_.size();
  std::vector<Rational> r(n);
  const Rational inv_lead = 1 / coeffs_[0];
  r[0] = inv_lead;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (coeffs_[i] != 0) acc += coeffs_[i] * r[k - i];
    }
    r[k] = -acc * inv_lead;
  }
  return from_coeffs(-valuation_, std::move(r));
}

namespace {

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return false;
  root = make_rational(BigInt(sqrt(num)), BigInt(sqrt(den)));
  return true;
}

}  // namespace

Series Series::sqrt() const {
  if (coeffs_.empty()) return Series(precision_ / 2);
  if (valuation_ % 2 != 0)
    throw SeriesError("sqrt: odd valuation " + std::to_string(valuation_) +
                      " (ramified; Puiseux series are not supported)");
  Rational s0;
  if (!rational_sqrt(coeffs_[0], s0))
    throw SeriesError("sqrt: leading coefficient " + coeffs_[0].get_str() +
                      " is not the square of a rational");
  const auto n = coeffs_.size();
  std::vector<Rational> s(n);
  s[0] = s0;
  const Rational inv_two_s0 = 1 / (2 * s0);
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = coeffs_[k];
    for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc * inv_two_s0;
  }
  return from_coeffs(valuation_ / 2, std::move(s));
}

Series Series::pow(int exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  Series result = Series::constant(1, order());
  Series base = *this;
  bool first = true;
  while (exponent > 0) {
    if (exponent & 1) {
      result = first ? base : result * base;
      first = false;
    }
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Series operator/(const Series& a, const Series& b) { return a * b.reciprocal(); }

namespace {

std::string monomial_text(const Rational& c, int e, std::string_view var, bool first) {
  std::string out;
  Rational mag = c;
  if (c < 0) {
    out += first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out += " + ";
  }
  const bool unit = mag == 1;
  if (e == 0) return out + mag.get_str();
  if (!unit) out += mag.get_str() + "*";
  out += std::string(var);
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

std::string Series::to_string(std::string_view var) const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    out += monomial_text(coeffs_[i], valuation_ + static_cast<int>(i), var, first);
    first = false;
  }
  out += first ? "O(" : " + O(";
  out += std::string(var) + "^" + std::to_string(precision_) + ")";
  return out;
}

nlohmann::json Series::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(rational_to_string(c));
  return {{"valuation", valuation_}, {"order", order()}, {"coeffs", coeffs}};
}

Series Series::from_json(const nlohmann::json& j) {
  const int val = j.at("valuation").get<int>();
  const int ord = j.at("order").get<int>();
  const auto& arr = j.at("coeffs");
  if (static_cast<int>(arr.size()) != ord)
    throw SeriesError("series json: coeffs length " + std::to_string(arr.size()) +
                      " does not match order " + std::to_string(ord));
  std::vector<Rational> c;
  c.reserve(arr.size());
  for (const auto& item : arr) c.push_back(parse_rational(item.get<std::string>()));
  if (!c.empty() && c.front() == 0)
    throw SeriesError("series json: leading coefficient must be nonzero");
  return from_coeffs(val, std::move(c));
}

// ---------------------------------------------------------------------------

bool ZPolynomial::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; });
}

void ZPolynomial::add_term(int exponent, const Rational& c) {
  if (exponent < 0) throw std::invalid_argument("negative z exponent in polynomial coefficient");
  if (coeffs.size() <= static_cast<std::size_t>(exponent)) coeffs.resize(exponent + 1);
  coeffs[static_cast<std::size_t>(exponent)] += c;
}

AlgebraicEq& AlgebraicEq::add_term(int v_power, int z_exponent, const Rational& c) {
  if (v_power < 0) throw std::invalid_argument("negative power of the unknown");
  if (by_power_.size() <= static_cast<std::size_t>(v_power)) by_power_.resize(v_power + 1);
  by_power_[static_cast<std::size_t>(v_power)].add_term(z_exponent, c);
  return *this;
}

bool AlgebraicEq::is_zero() const {
  return std::all_of(by_power_.begin(), by_power_.end(),
                     [](const ZPolynomial& p) { return p.is_zero(); });
}

AlgebraicEq AlgebraicEq::derivative() const {
  AlgebraicEq d;
  for (std::size_t p = 1; p < by_power_.size(); ++p) {
    const auto& poly = by_power_[p];
    for (std::size_t e = 0; e < poly.coeffs.size(); ++e) {
      if (poly.coeffs[e] != 0)
        d.add_term(static_cast<int>(p - 1), static_cast<int>(e), poly.coeffs[e] * static_cast<long>(p));
    }
  }
  return d;
}

AlgebraicEq AlgebraicEq::rescaled(int shift) const {
  // c z^e v^p  ->  c z^(e + shift p) w^p
  int min_exp = 0;
  bool any = false;
  for (std::size_t p = 0; p < by_power_.size(); ++p) {
    const auto& poly = by_power_[p];
    for (std::size_t e = 0; e < poly.coeffs.size(); ++e) {
      if (poly.coeffs[e] == 0) continue;
      const int ne = static_cast<int>(e) + shift * static_cast<int>(p);
      min_exp = any ? std::min(min_exp, ne) : ne;
      any = true;
    }
  }
  AlgebraicEq out;
  if (!any) return out;
  for (std::size_t p = 0; p < by_power_.size(); ++p) {
    const auto& poly = by_power_[p];
    for (std::size_t e = 0; e < poly.coeffs.size(); ++e) {
      if (poly.coeffs[e] == 0) continue;
      const int ne = static_cast<int>(e) + shift * static_cast<int>(p) - min_exp;
      out.add_term(static_cast<int>(p), ne, poly.coeffs[e]);
    }
  }
  return out;
}

Rational AlgebraicEq::at_zero(const Rational& v0) const {
  Rational acc = 0;
  for (auto it = by_power_.rbegin(); it != by_power_.rend(); ++it) acc = acc * v0 + it->at_zero();
  return acc;
}

Series AlgebraicEq::evaluate(const Series& v, int precision) const {
  return evaluate(v).truncated(precision);
}

Series AlgebraicEq::evaluate(const Series& v) const {
  if (by_power_.empty()) return Series(v.precision());
  // Generous precision for the exact coefficient polynomials; Horner's
  // precision tracking settles the true precision of the result.
  const int deg = degree();
  int max_z = 0;
  for (const auto& poly : by_power_) max_z = std::max(max_z, static_cast<int>(poly.coeffs.size()));
  const int cap = v.precision() + std::max(0, -v.valuation()) * deg + max_z + 1;
  Series acc = by_power_.back().as_series(cap);
  for (int p = deg - 1; p >= 0; --p) {
    acc = acc * v + by_power_[static_cast<std::size_t>(p)].as_series(cap);
  }
  return acc;
}

std::string AlgebraicEq::to_string(std::string_view unknown, std::string_view var) const {
  // Highest power of the unknown first; within a power, ascending z.
  std::string out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const auto& poly = by_power_[static_cast<std::size_t>(p)];
    for (std::size_t e = 0; e < poly.coeffs.size(); ++e) {
      const Rational& c = poly.coeffs[e];
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (c < 0) out += first ? "-" : " - ";
      else if (!first) out += " + ";
      first = false;
      std::string factors;
      auto append = [&](std::string_view sym, long k) {
        if (k == 0) return;
        if (!factors.empty()) factors += "*";
        factors += std::string(sym);
        if (k != 1) factors += "^" + std::to_string(k);
      };
      append(var, static_cast<long>(e));
      append(unknown, p);
      if (factors.empty()) out += mag.get_str();
      else if (mag == 1) out += factors;
      else out += mag.get_str() + "*" + factors;
    }
  }
  return first ? "0" : out;
}

Series newton_root(const AlgebraicEq& eq, const Rational& seed, int precision) {
  if (precision < 1) throw SeriesError("newton_root: precision must be positive");
  if (eq.is_zero()) throw SeriesError("newton_root: zero equation");
  if (eq.at_zero(seed) != 0)
    throw SeriesError("newton_root: seed " + seed.get_str() + " is not a root at z = 0");
  const AlgebraicEq deq = eq.derivative();
  if (deq.at_zero(seed) == 0)
    throw SeriesError("newton_root: derivative vanishes at the seed (ramified root); "
                      "use a substitution; Puiseux out of scope");

  const int iterations = static_cast<int>(std::bit_width(static_cast<unsigned>(precision - 1))) + 1;
  Series v = Series::constant(seed, 1);
  int prec = 1;
  for (int i = 0; i < iterations; ++i) {
    prec = std::min(2 * prec, precision);
    const Series vp = v.extended(prec);
    const Series residual = eq.evaluate(vp, prec);
    const Series slope = deq.evaluate(vp, prec);
    v = (vp - residual / slope).truncated(prec);
  }
  v = v.extended(precision);
  if (!eq.evaluate(v, precision).is_zero())
    throw SeriesError("newton_root: nonzero residual after iteration");
  return v;
}

}  // namespace skewdyck
