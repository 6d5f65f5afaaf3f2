#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "param_poly.hpp"
#include "rational.hpp"

namespace ybe {

/// Sentinel order for series known to be polynomials (nothing truncated).
inline constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;
inline constexpr int kDefaultOrder = 16;

/// Truncated Laurent series in the deformation variable t with ParamPoly
/// coefficients.
///
/// Coefficients of degree >= order() are unknown. An exact series (order() ==
/// kExactOrder) is a Laurent polynomial: every omitted coefficient is zero, so
/// equality and zero tests on it are exact statements. Stored coefficients are
/// trimmed: the first and last are nonzero.
class ScalarSeries {
 public:
  ScalarSeries() = default;
  ScalarSeries(const ParamPoly& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  ScalarSeries(const Rational& c) : ScalarSeries(ParamPoly(c)) {}  // NOLINT(google-explicit-constructor)
  ScalarSeries(int c) : ScalarSeries(ParamPoly(c)) {}              // NOLINT(google-explicit-constructor)

  /// c * t^degree.
  static ScalarSeries monomial(const ParamPoly& c, int degree, int order = kExactOrder) {
    return from_coefficients(degree, {c}, order);
  }

  static ScalarSeries t() { return monomial(ParamPoly(1), 1); }

  /// Zero known only below `order`.
  static ScalarSeries zero(int order) {
    ScalarSeries s;
    s.order_ = order;
    return s;
  }

  static ScalarSeries from_coefficients(int lowest, std::vector<ParamPoly> coeffs, int order = kExactOrder) {
    ScalarSeries s;
    s.low_ = lowest;
    s.coeffs_ = std::move(coeffs);
    s.order_ = order;
    s.normalize();
    return s;
  }

  int order() const { return order_; }
  bool exact() const { return order_ == kExactOrder; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Lowest degree with a nonzero coefficient; order() when the series is zero.
  int valuation() const { return coeffs_.empty() ? order_ : low_; }
  int lowest_degree() const { return valuation(); }
  /// Highest stored degree; only meaningful when !is_zero().
  int highest_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  const ParamPoly& coeff(int degree) const {
    static const ParamPoly kZero;
    if (coeffs_.empty() || degree < low_ || degree > highest_degree()) return kZero;
    return coeffs_[static_cast<std::size_t>(degree - low_)];
  }

  /// (degree, coefficient) pairs of the nonzero coefficients, ascending.
  std::vector<std::pair<int, ParamPoly>> nonzero_terms() const {
    std::vector<std::pair<int, ParamPoly>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!coeffs_[k].is_zero()) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
    return out;
  }

  bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0); }
  bool has_parameters() const {
    for (const auto& c : coeffs_)
      if (!c.is_constant()) return true;
    return false;
  }

  /// Drops everything at degree >= order and marks the series inexact there.
  ScalarSeries truncated(int order) const {
    if (order >= order_) return *this;
    ScalarSeries s = *this;
    s.order_ = order;
    s.normalize();
    return s;
  }

  /// Forgets truncation: used where the caller has proved the omitted
  /// coefficients vanish (e.g. a t-free limit).
  ScalarSeries as_exact() const {
    ScalarSeries s = *this;
    s.order_ = kExactOrder;
    return s;
  }

  ScalarSeries operator-() const {
    ScalarSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  friend ScalarSeries operator+(const ScalarSeries& x, const ScalarSeries& y) {
    int order = std::min(x.order_, y.order_);
    if (y.coeffs_.empty()) return x.truncated(order);
    if (x.coeffs_.empty()) return y.truncated(order);
    int lo = std::min(x.low_, y.low_);
    int hi = std::max(x.highest_degree(), y.highest_degree());
    hi = std::min(hi, order - 1);
    if (hi < lo) return zero(order);
    std::vector<ParamPoly> out(static_cast<std::size_t>(hi - lo + 1));
    for (int d = lo; d <= hi; ++d) out[static_cast<std::size_t>(d - lo)] = x.coeff(d) + y.coeff(d);
    return from_coefficients(lo, std::move(out), order);
  }

  friend ScalarSeries operator-(const ScalarSeries& x, const ScalarSeries& y) { return x + (-y); }

  friend ScalarSeries operator*(const ScalarSeries& x, const ScalarSeries& y) {
    return multiply(x, y, kExactOrder);
  }

  /// Product keeping only degrees below `limit` (in addition to the
  /// operands' own reliable range).
  static ScalarSeries multiply(const ScalarSeries& x, const ScalarSeries& y, int limit) {
    if ((x.coeffs_.empty() && x.exact()) || (y.coeffs_.empty() && y.exact())) return zero(limit);
    int order = std::min({product_order(x, y), limit});
    if (x.coeffs_.empty() || y.coeffs_.empty()) return zero(order);
    int lo = x.low_ + y.low_;
    int hi = std::min(x.highest_degree() + y.highest_degree(), order - 1);
    if (hi < lo) return zero(order);
    std::vector<ParamPoly> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i].is_zero()) continue;
      int di = x.low_ + static_cast<int>(i);
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
        int d = di + y.low_ + static_cast<int>(j);
        if (d > hi) break;
        if (y.coeffs_[j].is_zero()) continue;
        out[static_cast<std::size_t>(d - lo)] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return from_coefficients(lo, std::move(out), order);
  }

  /// Reliable range of a product: x known below ox, y below oy, so the
  /// product is known below min(ox + val(y), oy + val(x)).
  static int product_order(const ScalarSeries& x, const ScalarSeries& y) {
    auto sat = [](long v) { return static_cast<int>(std::min<long>(v, kExactOrder)); };
    long ox = x.order_, oy = y.order_;
    long vx = x.exact() && x.coeffs_.empty() ? kExactOrder : x.valuation();
    long vy = y.exact() && y.coeffs_.empty() ? kExactOrder : y.valuation();
    long a = x.exact() ? kExactOrder : ox + vy;
    long b = y.exact() ? kExactOrder : oy + vx;
    return sat(std::min(a, b));
  }

  ScalarSeries& operator+=(const ScalarSeries& y) { return *this = *this + y; }
  ScalarSeries& operator-=(const ScalarSeries& y) { return *this = *this - y; }
  ScalarSeries& operator*=(const ScalarSeries& y) { return *this = *this * y; }

  friend ScalarSeries operator*(const ScalarSeries& x, const ParamPoly& c) {
    if (c.is_zero()) return x.exact() ? ScalarSeries{} : zero(x.order_);
    ScalarSeries s = x;
    for (auto& k : s.coeffs_) k = k * c;
    s.normalize();
    return s;
  }
  friend ScalarSeries operator*(const ParamPoly& c, const ScalarSeries& x) { return x * c; }

  /// Structural equality: same order and same coefficients. Use
  /// `(x - y).is_zero()` to compare up to the common reliable order.
  friend bool operator==(const ScalarSeries& x, const ScalarSeries& y) {
    return x.order_ == y.order_ && x.coeffs_ == y.coeffs_ && (x.coeffs_.empty() || x.low_ == y.low_);
  }

  /// Substitutes t -> c*t.
  ScalarSeries rescaled(const Rational& c) const {
    ScalarSeries s = *this;
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
      int d = low_ + static_cast<int>(k);
      Rational f = 1;
      for (int i = 0; i < std::abs(d); ++i) f *= c;
      if (d < 0) f = Rational(1) / f;
      s.coeffs_[k] *= f;
    }
    s.normalize();
    return s;
  }

  ScalarSeries substitute(const std::map<std::string, ParamPoly>& values) const {
    ScalarSeries s = *this;
    for (auto& c : s.coeffs_) c = c.substitute(values);
    s.normalize();
    return s;
  }

  ScalarSeries specialize(const std::map<std::string, Rational>& values) const {
    ScalarSeries s = *this;
    for (auto& c : s.coeffs_) c = c.specialize(values);
    s.normalize();
    return s;
  }

  /// Human-readable form, e.g. "a*t - c*t^2 + O(t^16)".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      int d = low_ + static_cast<int>(k);
      for (const auto& [m, c] : coeffs_[k].terms()) {
        Rational mag = abs(c);
        std::string piece;
        std::string mono = m.to_string();
        std::string tpow = d == 0 ? "" : d == 1 ? "t" : "t^" + std::to_string(d);
        std::string body = mono.empty() ? tpow : tpow.empty() ? mono : mono + "*" + tpow;
        if (body.empty()) {
          piece = ybe::to_string(mag);
        } else if (mag == 1) {
          piece = body;
        } else {
          piece = ybe::to_string(mag) + "*" + body;
        }
        if (out.empty()) {
          out = (c < 0 ? "-" : "") + piece;
        } else {
          out += (c < 0 ? " - " : " + ") + piece;
        }
      }
    }
    if (!exact()) {
      std::string big_o = "O(t^" + std::to_string(order_) + ")";
      out = out.empty() ? big_o : out + " + " + big_o;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void normalize() {
    if (order_ != kExactOrder && !coeffs_.empty()) {
      int keep = order_ - low_;
      if (keep <= 0) {
        coeffs_.clear();
      } else if (static_cast<std::size_t>(keep) < coeffs_.size()) {
        coeffs_.resize(static_cast<std::size_t>(keep));
      }
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  int low_ = 0;
  std::vector<ParamPoly> coeffs_;
  int order_ = kExactOrder;
};

namespace detail {

inline int working_order(const ScalarSeries& s, int order) { return std::min(s.order(), order); }

inline void require_no_laurent_part(const ScalarSeries& s, ErrorCode code, const char* what) {
  if (!s.is_zero() && s.valuation() < 0)
    throw Error(code, std::string(what) + ": nonzero coefficient at degree " + std::to_string(s.valuation()));
}

inline void require_unit_constant(const ScalarSeries& s, const char* what) {
  require_no_laurent_part(s, ErrorCode::ConstantTermNotOne, what);
  const ParamPoly& c0 = s.coeff(0);
  if (!(c0.is_constant() && c0.constant_value() == 1))
    throw Error(ErrorCode::ConstantTermNotOne, std::string(what) + ": constant term is " + c0.to_string());
}

}  // namespace detail

/// exp(s) for s with zero constant term. The result is known below
/// min(s.order(), order); it is exact only when s is exactly zero.
inline ScalarSeries series_exp(const ScalarSeries& s, int order = kDefaultOrder) {
  detail::require_no_laurent_part(s, ErrorCode::LaurentInput, "series_exp");
  if (!s.coeff(0).is_zero())
    throw Error(ErrorCode::NonzeroConstantTerm, "series_exp: constant term is " + s.coeff(0).to_string());
  if (s.is_zero() && s.exact()) return ScalarSeries(1);
  int n_max = detail::working_order(s, order);
  // f' = s' f  =>  n f_n = sum_{k=1..n} k s_k f_{n-k}
  std::vector<ParamPoly> f(static_cast<std::size_t>(std::max(n_max, 0)));
  if (n_max > 0) f[0] = ParamPoly(1);
  for (int n = 1; n < n_max; ++n) {
    ParamPoly acc;
    for (int k = 1; k <= n; ++k) {
      const ParamPoly& sk = s.coeff(k);
      if (sk.is_zero()) continue;
      acc += sk * f[static_cast<std::size_t>(n - k)] * Rational(k);
    }
    f[static_cast<std::size_t>(n)] = acc * Rational(1, n);
  }
  return ScalarSeries::from_coefficients(0, std::move(f), n_max);
}

/// log(s) for s with constant term exactly 1.
inline ScalarSeries series_log(const ScalarSeries& s, int order = kDefaultOrder) {
  detail::require_unit_constant(s, "series_log");
  if (s.exact() && s.is_constant()) return ScalarSeries{};
  int n_max = detail::working_order(s, order);
  // s g' = s'  =>  n g_n = n s_n - sum_{k=1..n-1} k g_k s_{n-k}
  std::vector<ParamPoly> g(static_cast<std::size_t>(std::max(n_max, 0)));
  for (int n = 1; n < n_max; ++n) {
    ParamPoly acc = s.coeff(n) * Rational(n);
    for (int k = 1; k < n; ++k) {
      const ParamPoly& snk = s.coeff(n - k);
      if (snk.is_zero() || g[static_cast<std::size_t>(k)].is_zero()) continue;
      acc -= g[static_cast<std::size_t>(k)] * snk * Rational(k);
    }
    g[static_cast<std::size_t>(n)] = acc * Rational(1, n);
  }
  return ScalarSeries::from_coefficients(0, std::move(g), n_max);
}

/// s^p for s with constant term exactly 1. Exact non-negative integer powers
/// of exact series stay exact.
inline ScalarSeries series_pow(const ScalarSeries& s, const Rational& p, int order = kDefaultOrder) {
  detail::require_unit_constant(s, "series_pow");
  if (p == 0) return ScalarSeries(1);
  if (s.exact() && p.get_den() == 1 && p > 0) {
    ScalarSeries out(1);
    unsigned long e = p.get_num().get_ui();
    for (unsigned long k = 0; k < e; ++k) out = out * s;
    return out;
  }
  if (s.exact() && s.is_constant()) return ScalarSeries(1);
  int n_max = detail::working_order(s, order);
  // Miller recurrence: n f_n = sum_{k=1..n} ((p+1)k - n) s_k f_{n-k}
  std::vector<ParamPoly> f(static_cast<std::size_t>(std::max(n_max, 0)));
  if (n_max > 0) f[0] = ParamPoly(1);
  for (int n = 1; n < n_max; ++n) {
    ParamPoly acc;
    for (int k = 1; k <= n; ++k) {
      const ParamPoly& sk = s.coeff(k);
      if (sk.is_zero()) continue;
      Rational w = (p + 1) * k - n;
      if (w == 0) continue;
      acc += sk * f[static_cast<std::size_t>(n - k)] * w;
    }
    f[static_cast<std::size_t>(n)] = acc * Rational(1, n);
  }
  return ScalarSeries::from_coefficients(0, std::move(f), n_max);
}

/// 1/s. The coefficient at the lowest degree must be a nonzero rational.
/// For an exact monomial the result is exact; otherwise it is known below
/// min(order, s.order() - 2*val(s)) (Laurent inputs give Laurent outputs).
inline ScalarSeries series_inv(const ScalarSeries& s, int order = kDefaultOrder) {
  if (s.is_zero()) throw Error(ErrorCode::NonInvertibleLeadingCoefficient, "series_inv: zero series");
  int v = s.valuation();
  const ParamPoly& lead = s.coeff(v);
  if (!lead.is_constant())
    throw Error(ErrorCode::NonInvertibleLeadingCoefficient,
                "series_inv: leading coefficient " + lead.to_string() + " depends on parameters");
  Rational u0_inv = Rational(1) / lead.constant_value();
  if (s.exact() && s.highest_degree() == v) return ScalarSeries::monomial(ParamPoly(u0_inv), -v);
  int result_order = s.exact() ? order : std::min(order, s.order() - 2 * v);
  int count = result_order + v;  // degrees -v .. result_order-1
  std::vector<ParamPoly> w(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 0; n < count; ++n) {
    if (n == 0) {
      w[0] = ParamPoly(u0_inv);
      continue;
    }
    ParamPoly acc;
    for (int k = 1; k <= n; ++k) {
      const ParamPoly& uk = s.coeff(v + k);
      if (uk.is_zero()) continue;
      acc += uk * w[static_cast<std::size_t>(n - k)];
    }
    w[static_cast<std::size_t>(n)] = acc * (-u0_inv);
  }
  return ScalarSeries::from_coefficients(-v, std::move(w), result_order);
}

enum class TrigKind { Sin, Cos, Sec, Tan };

/// Maclaurin series of sin, cos, sec or tan in t, known below `order`.
inline ScalarSeries trig_series(TrigKind kind, int order) {
  if (order < 1) throw Error(ErrorCode::InsufficientOrder, "trig_series: order must be >= 1");
  auto sin_or_cos = [order](int parity) {
    std::vector<ParamPoly> c(static_cast<std::size_t>(order));
    for (int k = parity; k < order; k += 2) {
      Rational v = Rational(1) / factorial(static_cast<unsigned>(k));
      if (((k - parity) / 2) % 2 == 1) v = -v;
      c[static_cast<std::size_t>(k)] = ParamPoly(v);
    }
    return ScalarSeries::from_coefficients(0, std::move(c), order);
  };
  switch (kind) {
    case TrigKind::Sin: return sin_or_cos(1);
    case TrigKind::Cos: return sin_or_cos(0);
    case TrigKind::Sec: return series_inv(sin_or_cos(0), order);
    case TrigKind::Tan: return sin_or_cos(1) * series_inv(sin_or_cos(0), order);
  }
  return {};
}

/// The t -> 0 limit: the degree-0 coefficient, provided every negative
/// degree coefficient vanishes.
inline ParamPoly laurent_constant_term(const ScalarSeries& s) {
  if (!s.is_zero() && s.valuation() < 0)
    throw Error(ErrorCode::PoleAtZero, "pole of order " + std::to_string(-s.valuation()) + " with coefficient " +
                                           s.coeff(s.valuation()).to_string());
  if (s.order() <= 0)
    throw Error(ErrorCode::InsufficientOrder,
                "constant term unknown: series only known below degree " + std::to_string(s.order()));
  return s.coeff(0);
}

/// Reads a polynomial in the named variable as a series in t.
inline ScalarSeries series_in(const ParamPoly& p, const std::string& var, int order = kExactOrder) {
  ScalarSeries out = ScalarSeries::zero(order);
  for (unsigned k = 0; k <= p.degree_in(var); ++k) {
    ParamPoly c = p.coefficient_of(var, k);
    if (!c.is_zero()) out = out + ScalarSeries::monomial(c, static_cast<int>(k));
  }
  return out;
}

}  // namespace ybe
