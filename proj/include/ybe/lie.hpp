#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "operator_matrix.hpp"
#include "param_poly.hpp"
#include "rational.hpp"

namespace ybe {

/// An n x n matrix over ParamPoly, read as an element of gl(n).
class GlElement {
 public:
  GlElement() = default;
  explicit GlElement(std::size_t n) : n_(n), entries_(n * n) {}

  /// Matrix unit e_ij, 1-based.
  static GlElement unit(std::size_t n, std::size_t i, std::size_t j) {
    GlElement e(n);
    e.entries_[(i - 1) * n + (j - 1)] = ParamPoly(1);
    return e;
  }

  static GlElement identity(std::size_t n) {
    GlElement e(n);
    for (std::size_t i = 0; i < n; ++i) e.entries_[i * n + i] = ParamPoly(1);
    return e;
  }

  static GlElement diagonal(const std::vector<ParamPoly>& d) {
    GlElement e(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) e.entries_[i * d.size() + i] = d[i];
    return e;
  }

  std::size_t n() const { return n_; }
  const ParamPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  ParamPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  ParamPoly trace() const {
    ParamPoly t;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  bool has_parameters() const {
    for (const auto& e : entries_)
      if (!e.is_constant()) return true;
    return false;
  }

  GlElement substitute(const std::map<std::string, ParamPoly>& values) const {
    GlElement out = *this;
    for (auto& e : out.entries_) e = e.substitute(values);
    return out;
  }

  GlElement specialize(const std::map<std::string, Rational>& values) const {
    GlElement out = *this;
    for (auto& e : out.entries_) e = e.specialize(values);
    return out;
  }

  /// Coefficient of name^k entrywise.
  GlElement coefficient_of(const std::string& name, unsigned k) const {
    GlElement out = *this;
    for (auto& e : out.entries_) e = e.coefficient_of(name, k);
    return out;
  }

  unsigned degree_in(const std::string& name) const {
    unsigned d = 0;
    for (const auto& e : entries_) d = std::max(d, e.degree_in(name));
    return d;
  }

  OperatorMatrix to_matrix() const {
    OperatorMatrix m(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (!entries_[k].is_zero()) m.set(k / n_, k % n_, ScalarSeries(entries_[k]));
    std::set<std::string> vars;
    for (const auto& e : entries_)
      for (const auto& v : e.variables()) vars.insert(v);
    m.set_params({vars.begin(), vars.end()});
    return m;
  }

  GlElement operator-() const {
    GlElement out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
  }

  friend GlElement operator+(const GlElement& x, const GlElement& y) {
    check_same_n(x, y);
    GlElement out = x;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += y.entries_[k];
    return out;
  }
  friend GlElement operator-(const GlElement& x, const GlElement& y) { return x + (-y); }

  friend GlElement operator*(const ParamPoly& c, const GlElement& x) {
    GlElement out = x;
    for (auto& e : out.entries_) e = c * e;
    return out;
  }

  /// Matrix product.
  friend GlElement operator*(const GlElement& x, const GlElement& y) {
    check_same_n(x, y);
    const std::size_t n = x.n_;
    GlElement out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!y(k, j).is_zero()) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }

  friend bool operator==(const GlElement&, const GlElement&) = default;

  /// Linear combination of matrix units, e.g. "2*e11 - e22 - e33".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const ParamPoly& c = (*this)(i, j);
        if (c.is_zero()) continue;
        std::string unit = "e" + std::to_string(i + 1) + std::to_string(j + 1);
        bool negative = false;
        std::string piece;
        if (c.terms().size() == 1) {
          ParamPoly mag = c;
          if (c.terms()[0].second < 0) {
            negative = true;
            mag = -c;
          }
          piece = mag == ParamPoly(1) ? unit : mag.to_string() + "*" + unit;
        } else {
          piece = "(" + c.to_string() + ")*" + unit;
        }
        if (out.empty()) {
          out = (negative ? "-" : "") + piece;
        } else {
          out += (negative ? " - " : " + ") + piece;
        }
      }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_same_n(const GlElement& x, const GlElement& y) {
    if (x.n_ != y.n_)
      throw Error(ErrorCode::DimensionMismatch, "gl(" + std::to_string(x.n_) + ") vs gl(" + std::to_string(y.n_) + ")");
  }

  std::size_t n_ = 0;
  std::vector<ParamPoly> entries_;
};

/// Parses a combination of matrix units such as "3/2*a*e12 + 3/2*e13".
inline GlElement parse_gl(std::string_view text, std::size_t n) {
  ParamPoly p = parse_poly(text);
  GlElement g(n);
  for (const auto& [mono, c] : p.terms()) {
    std::optional<std::pair<std::size_t, std::size_t>> unit;
    Monomial rest;
    for (const auto& [name, e] : mono.factors()) {
      bool is_unit = name.size() == 3 && name[0] == 'e' && std::isdigit(static_cast<unsigned char>(name[1])) &&
                     std::isdigit(static_cast<unsigned char>(name[2]));
      if (!is_unit) {
        rest = rest * Monomial::variable(name, e);
        continue;
      }
      std::size_t i = static_cast<std::size_t>(name[1] - '0'), j = static_cast<std::size_t>(name[2] - '0');
      if (unit || e != 1 || i < 1 || j < 1 || i > n || j > n)
        throw Error(ErrorCode::ParseError, "each term needs exactly one matrix unit e_ij with 1 <= i,j <= " +
                                               std::to_string(n) + ": " + std::string(text));
      unit = std::make_pair(i - 1, j - 1);
    }
    if (!unit) throw Error(ErrorCode::ParseError, "term without a matrix unit in \"" + std::string(text) + "\"");
    g(unit->first, unit->second) += ParamPoly::from_terms({{rest, c}});
  }
  return g;
}

/// [x, y] = xy - yx.
inline GlElement bracket(const GlElement& x, const GlElement& y) { return x * y - y * x; }

/// Formal sum Σ c·(x∧y).
class WedgeElement {
 public:
  struct Term {
    GlElement x;
    GlElement y;
    ParamPoly c;
  };

  WedgeElement() = default;
  explicit WedgeElement(std::size_t n) : n_(n) {}
  WedgeElement(std::size_t n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.x.n() != n_ || t.y.n() != n_) throw Error(ErrorCode::DimensionMismatch, "wedge term size");
  }

  /// c·(x∧y) as a single-term element.
  static WedgeElement wedge(const GlElement& x, const GlElement& y, const ParamPoly& c = ParamPoly(1)) {
    return WedgeElement(x.n(), {Term{x, y, c}});
  }

  std::size_t n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  WedgeElement& operator+=(const WedgeElement& other) {
    if (n_ == 0) n_ = other.n_;
    if (other.n_ != 0 && other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "wedge sum");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
  }
  friend WedgeElement operator+(WedgeElement x, const WedgeElement& y) { return x += y; }

  friend WedgeElement operator*(const ParamPoly& c, WedgeElement w) {
    for (auto& t : w.terms_) t.c = c * t.c;
    return w;
  }

  WedgeElement substitute(const std::map<std::string, ParamPoly>& values) const {
    WedgeElement out = *this;
    for (auto& t : out.terms_) {
      t.x = t.x.substitute(values);
      t.y = t.y.substitute(values);
      t.c = t.c.substitute(values);
    }
    return out;
  }

  WedgeElement specialize(const std::map<std::string, Rational>& values) const {
    std::map<std::string, ParamPoly> polys;
    for (const auto& [k, v] : values) polys.emplace(k, ParamPoly(v));
    return substitute(polys);
  }

  std::string to_string() const {
    std::string out;
    auto wrap = [](const GlElement& g) {
      std::string s = g.to_string();
      bool compound = s.find(' ') != std::string::npos || s.find('*') != std::string::npos || s[0] == '-';
      return compound ? "(" + s + ")" : s;
    };
    for (const auto& t : terms_) {
      if (t.c.is_zero()) continue;
      ParamPoly mag = t.c;
      bool negative = t.c.terms().size() == 1 && t.c.terms()[0].second < 0;
      if (negative) mag = -t.c;
      std::string coef;
      if (mag != ParamPoly(1)) coef = mag.terms().size() == 1 ? mag.to_string() + "*" : "(" + mag.to_string() + ")*";
      std::string piece = coef + wrap(t.x) + "∧" + wrap(t.y);
      if (out.empty()) {
        out = (negative ? "-" : "") + piece;
      } else {
        out += (negative ? " - " : " + ") + piece;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

/// Realization of a wedge element as an operator on V⊗V under
/// x∧y ↦ ½(x⊗y − y⊗x). Skew under the flip by construction.
class TensorForm {
 public:
  TensorForm(OperatorMatrix matrix, std::size_t n) : matrix_(std::move(matrix)), n_(n) {}

  const OperatorMatrix& matrix() const { return matrix_; }
  std::size_t n() const { return n_; }
  bool is_zero() const { return matrix_.is_zero(); }

  /// 2·T, the full antisymmetrizer with integer-friendly entries.
  OperatorMatrix doubled() const { return Rational(2) * matrix_; }

  friend bool operator==(const TensorForm& x, const TensorForm& y) { return x.matrix_ == y.matrix_; }

 private:
  OperatorMatrix matrix_;
  std::size_t n_;
};

inline std::vector<std::string> parameter_list(const std::set<std::string>& vars) {
  return {vars.begin(), vars.end()};
}

inline TensorForm tensor_form(const WedgeElement& w) {
  const std::size_t n = w.n();
  OperatorMatrix acc(n * n);
  std::set<std::string> vars;
  for (const auto& t : w.terms()) {
    if (t.c.is_zero()) continue;
    OperatorMatrix x = t.x.to_matrix();
    OperatorMatrix y = t.y.to_matrix();
    ScalarSeries half(t.c * Rational(1, 2));
    acc = acc + half * (kron(x, y) - kron(y, x));
  }
  for (std::size_t i = 0; i < acc.dim(); ++i)
    for (std::size_t j = 0; j < acc.dim(); ++j)
      for (const auto& v : acc(i, j).coeff(0).variables()) vars.insert(v);
  acc.set_params(parameter_list(vars));
  return TensorForm(std::move(acc), n);
}

/// Normal form Σ c_pq e_p∧e_q over matrix-unit pairs p < q (row-major).
inline WedgeElement canonical(const WedgeElement& w) {
  const std::size_t n = w.n();
  std::map<std::pair<std::size_t, std::size_t>, ParamPoly> coef;
  for (const auto& t : w.terms()) {
    if (t.c.is_zero()) continue;
    for (std::size_t p = 0; p < n * n; ++p) {
      const ParamPoly& xp = t.x(p / n, p % n);
      if (xp.is_zero()) continue;
      for (std::size_t q = 0; q < n * n; ++q) {
        const ParamPoly& yq = t.y(q / n, q % n);
        if (yq.is_zero() || p == q) continue;
        ParamPoly v = t.c * xp * yq;
        if (p < q) {
          coef[{p, q}] += v;
        } else {
          coef[{q, p}] -= v;
        }
      }
    }
  }
  WedgeElement out(n);
  for (const auto& [pq, c] : coef) {
    if (c.is_zero()) continue;
    out += WedgeElement::wedge(GlElement::unit(n, pq.first / n + 1, pq.first % n + 1),
                               GlElement::unit(n, pq.second / n + 1, pq.second % n + 1), c);
  }
  return out;
}

inline bool is_zero(const WedgeElement& w) { return canonical(w).terms().empty(); }

/// ad(x) extended to 𝔤∧𝔤 as a derivation.
inline WedgeElement ad_wedge(const GlElement& x, const WedgeElement& w) {
  if (!w.terms().empty() && x.n() != w.n()) throw Error(ErrorCode::DimensionMismatch, "ad_wedge");
  WedgeElement out(x.n());
  for (const auto& t : w.terms()) {
    out += WedgeElement::wedge(bracket(x, t.x), t.y, t.c);
    out += WedgeElement::wedge(t.x, bracket(x, t.y), t.c);
  }
  return out;
}

/// [T̂12,T̂13] + [T̂12,T̂23] + [T̂13,T̂23] with T̂ = 2·T(w).
inline OperatorMatrix cybe_defect(const WedgeElement& w) {
  const std::size_t n = w.n();
  OperatorMatrix r = tensor_form(w).doubled();
  OperatorMatrix a = embed(r, FactorPair::P12, n);
  OperatorMatrix b = embed(r, FactorPair::P13, n);
  OperatorMatrix c = embed(r, FactorPair::P23, n);
  auto comm = [](const OperatorMatrix& x, const OperatorMatrix& y) { return x * y - y * x; };
  return comm(a, b) + comm(a, c) + comm(b, c);
}

/// Standard basis of sl(n): off-diagonal units, then e_ii − e_{i+1,i+1}.
inline std::vector<GlElement> sl_basis(std::size_t n) {
  std::vector<GlElement> basis;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) basis.push_back(GlElement::unit(n, i, j));
  for (std::size_t i = 1; i < n; ++i) basis.push_back(GlElement::unit(n, i, i) - GlElement::unit(n, i + 1, i + 1));
  return basis;
}

/// True iff D commutes with x⊗1⊗1 + 1⊗x⊗1 + 1⊗1⊗x for every x in sl(n).
inline bool is_sl_invariant(const OperatorMatrix& d) {
  std::size_t n = 1;
  while (n * n * n < d.dim()) ++n;
  if (n * n * n != d.dim()) throw Error(ErrorCode::DimensionMismatch, "is_sl_invariant: dim is not a cube");
  const OperatorMatrix id = OperatorMatrix::identity(n);
  for (const auto& x : sl_basis(n)) {
    OperatorMatrix xm = x.to_matrix();
    OperatorMatrix diag = kron(kron(xm, id), id) + kron(kron(id, xm), id) + kron(kron(id, id), xm);
    if (!(diag * d - d * diag).is_zero()) return false;
  }
  return true;
}

namespace detail {

using RatVec = std::vector<Rational>;

// Row-reduced echelon basis kept incrementally; reduce() returns the residue
// of a vector against it.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  RatVec reduce(RatVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < width_; ++k)
        if (rows_[r][k] != 0) v[k] -= f * rows_[r][k];
    }
    return v;
  }

  /// Adds v if independent; returns whether it was added.
  bool insert(const RatVec& v) {
    RatVec res = reduce(v);
    std::size_t p = 0;
    while (p < width_ && res[p] == 0) ++p;
    if (p == width_) return false;
    Rational inv = Rational(1) / res[p];
    for (auto& x : res) x *= inv;
    for (auto& row : rows_) {
      Rational f = row[p];
      if (f == 0) continue;
      for (std::size_t k = 0; k < width_; ++k) row[k] -= f * res[k];
    }
    rows_.push_back(std::move(res));
    pivots_.push_back(p);
    return true;
  }

  bool contains(const RatVec& v) const {
    RatVec res = reduce(v);
    for (const auto& x : res)
      if (x != 0) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t width_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
};

inline RatVec flatten(const GlElement& g) {
  RatVec v;
  v.reserve(g.n() * g.n());
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) v.push_back(g(i, j).constant_value());
  return v;
}

// Coordinates of v in the (independent) columns `basis`, or nullopt.
inline std::optional<RatVec> coordinates(const std::vector<RatVec>& basis, const RatVec& v) {
  const std::size_t k = basis.size(), width = v.size();
  // Augmented system: width equations, k unknowns.
  std::vector<RatVec> rows(width, RatVec(k + 1));
  for (std::size_t e = 0; e < width; ++e) {
    for (std::size_t b = 0; b < k; ++b) rows[e][b] = basis[b][e];
    rows[e][k] = v[e];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < k && r < width; ++c) {
    std::size_t p = r;
    while (p < width && rows[p][c] == 0) ++p;
    if (p == width) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t q = 0; q < width; ++q) {
      if (q == r || rows[q][c] == 0) continue;
      Rational f = rows[q][c];
      for (std::size_t j = 0; j <= k; ++j) rows[q][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < width; ++q)
    if (rows[q][k] != 0) return std::nullopt;
  RatVec out(k);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) out[pivot_cols[i]] = rows[i][k];
  return out;
}

inline std::size_t rank_of(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  EchelonBasis e(rows[0].size());
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace detail

struct CarrierInfo {
  std::vector<GlElement> basis;
  bool is_subalgebra = false;
  bool nondegenerate = false;

  std::size_t dimension() const { return basis.size(); }
};

/// Span of the wedge components, whether it closes under the bracket, and
/// whether w is a nondegenerate element of span∧span. Parameters must be
/// specialized first.
inline CarrierInfo carrier(const WedgeElement& w) {
  TensorForm tf = tensor_form(w);
  if (tf.matrix().has_parameters())
    throw Error(ErrorCode::UnspecializedParameters, "carrier: specialize parameters first");
  if (tf.is_zero()) throw Error(ErrorCode::ZeroInput, "carrier of the zero wedge");
  const std::size_t n = w.n();

  CarrierInfo info;
  detail::EchelonBasis span(n * n);
  std::vector<detail::RatVec> basis_vecs;
  for (const auto& t : w.terms()) {
    if (t.c.is_zero()) continue;
    for (const GlElement* g : {&t.x, &t.y}) {
      if (g->has_parameters()) throw Error(ErrorCode::UnspecializedParameters, "carrier: parametric component");
      auto v = detail::flatten(*g);
      if (span.insert(v)) {
        info.basis.push_back(*g);
        basis_vecs.push_back(std::move(v));
      }
    }
  }

  info.is_subalgebra = true;
  for (std::size_t i = 0; i < info.basis.size() && info.is_subalgebra; ++i)
    for (std::size_t j = i + 1; j < info.basis.size(); ++j)
      if (!span.contains(detail::flatten(bracket(info.basis[i], info.basis[j])))) {
        info.is_subalgebra = false;
        break;
      }

  const std::size_t k = info.basis.size();
  std::vector<detail::RatVec> omega(k, detail::RatVec(k));
  for (const auto& t : w.terms()) {
    if (t.c.is_zero()) continue;
    auto a = detail::coordinates(basis_vecs, detail::flatten(t.x));
    auto b = detail::coordinates(basis_vecs, detail::flatten(t.y));
    Rational c = t.c.constant_value();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) omega[i][j] += c * ((*a)[i] * (*b)[j] - (*a)[j] * (*b)[i]);
  }
  info.nondegenerate = detail::rank_of(omega) == k;
  return info;
}

}  // namespace ybe
