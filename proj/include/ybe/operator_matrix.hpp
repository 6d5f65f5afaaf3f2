#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "param_poly.hpp"
#include "series.hpp"

namespace ybe {

/// Location of a nonzero coefficient: 1-based matrix position and the
/// degree in t.
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  int degree = 0;
  ParamPoly value;

  std::string to_string() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ") t^" + std::to_string(degree) + ": " +
           value.to_string();
  }
};

namespace detail {

inline std::vector<std::string> merge_params(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  if (x == y || y.empty()) return x;
  if (x.empty()) return y;
  auto subset = [](const std::vector<std::string>& small, const std::vector<std::string>& big) {
    return std::all_of(small.begin(), small.end(),
                       [&](const std::string& p) { return std::find(big.begin(), big.end(), p) != big.end(); });
  };
  if (subset(x, y)) return y;
  if (subset(y, x)) return x;
  std::string detail;
  for (const auto& p : x) detail += p + " ";
  detail += "vs ";
  for (const auto& p : y) detail += p + " ";
  throw Error(ErrorCode::ParameterSetMismatch, detail);
}

inline int saturating_add(int x, int y) {
  long s = static_cast<long>(x) + y;
  return static_cast<int>(std::min<long>(s, kExactOrder));
}

}  // namespace detail

/// Square matrix over ScalarSeries with one shared truncation order.
///
/// Basis of V⊗V is e_i⊗e_j in lexicographic order (0-based index i*n + j);
/// V⊗V⊗V is analogous. Accessors are 0-based; serialized forms are 1-based.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(std::size_t dim, std::vector<std::string> params = {}, int order = kExactOrder)
      : dim_(dim), params_(std::move(params)), order_(order), entries_(dim * dim, ScalarSeries::zero(order)) {
    if (order == kExactOrder)
      for (auto& e : entries_) e = ScalarSeries{};
  }

  static OperatorMatrix identity(std::size_t dim, int order = kExactOrder) {
    OperatorMatrix m(dim, {}, order);
    for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = ScalarSeries(1).truncated(order);
    return m;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& params() const { return params_; }
  int order() const { return order_; }
  bool exact() const { return order_ == kExactOrder; }

  const ScalarSeries& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// Stores an entry; a less reliable entry lowers the matrix order.
  void set(std::size_t i, std::size_t j, const ScalarSeries& value) {
    if (value.order() < order_) retruncate(value.order());
    entries_[i * dim_ + j] = value.truncated(order_);
  }

  void set_params(std::vector<std::string> params) { params_ = std::move(params); }

  OperatorMatrix truncated(int order) const {
    OperatorMatrix m = *this;
    if (order < m.order_) m.retruncate(order);
    return m;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const ScalarSeries& s) { return s.is_zero(); });
  }

  /// Minimal valuation over entries (order() when all are zero).
  int valuation() const {
    int v = order_;
    for (const auto& e : entries_)
      if (!e.is_zero()) v = std::min(v, e.valuation());
    return v;
  }

  bool has_parameters() const {
    return std::any_of(entries_.begin(), entries_.end(), [](const ScalarSeries& s) { return s.has_parameters(); });
  }

  /// First nonzero coefficient in row-major order, then by degree.
  std::optional<Witness> first_nonzero() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const auto& e = (*this)(i, j);
        if (!e.is_zero()) return Witness{i + 1, j + 1, e.valuation(), e.coeff(e.valuation())};
      }
    return std::nullopt;
  }

  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const ScalarSeries& s) { return !s.is_zero(); }));
  }

  OperatorMatrix map(const std::function<ScalarSeries(const ScalarSeries&)>& f) const {
    OperatorMatrix m(dim_, params_, order_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.set(k / dim_, k % dim_, f(entries_[k]));
    return m;
  }

  OperatorMatrix specialize(const std::map<std::string, Rational>& values) const {
    OperatorMatrix m = map([&](const ScalarSeries& s) { return s.specialize(values); });
    std::vector<std::string> left;
    for (const auto& p : params_)
      if (!values.contains(p)) left.push_back(p);
    m.params_ = std::move(left);
    return m;
  }

  /// Substitutes t -> c*t.
  OperatorMatrix rescaled(const Rational& c) const {
    return map([&](const ScalarSeries& s) { return s.rescaled(c); });
  }

  /// Degree-d coefficient matrix as an exact matrix.
  OperatorMatrix coefficient(int degree) const {
    OperatorMatrix m(dim_, params_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      m.entries_[k] = ScalarSeries(entries_[k].coeff(degree));
    return m;
  }

  OperatorMatrix operator-() const {
    return map([](const ScalarSeries& s) { return -s; });
  }

  friend OperatorMatrix operator+(const OperatorMatrix& x, const OperatorMatrix& y) {
    check_same_dim(x, y);
    OperatorMatrix m(x.dim_, detail::merge_params(x.params_, y.params_), std::min(x.order_, y.order_));
    for (std::size_t k = 0; k < x.entries_.size(); ++k) m.entries_[k] = x.entries_[k] + y.entries_[k];
    m.retruncate(m.order_);
    return m;
  }

  friend OperatorMatrix operator-(const OperatorMatrix& x, const OperatorMatrix& y) { return x + (-y); }

  friend OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y) {
    check_same_dim(x, y);
    const std::size_t n = x.dim_;
    int order = product_order(x, y);
    OperatorMatrix m(n, detail::merge_params(x.params_, y.params_), order);
    std::vector<ScalarSeries> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(row.begin(), row.end(), ScalarSeries::zero(order));
      for (std::size_t k = 0; k < n; ++k) {
        const ScalarSeries& a = x(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const ScalarSeries& b = y(k, j);
          if (b.is_zero()) continue;
          row[j] += ScalarSeries::multiply(a, b, order);
        }
      }
      for (std::size_t j = 0; j < n; ++j) m.entries_[i * n + j] = row[j].truncated(order);
    }
    return m;
  }

  friend OperatorMatrix operator*(const ScalarSeries& c, const OperatorMatrix& x) {
    int order = std::min(x.order_, c.exact() ? kExactOrder : detail::saturating_add(c.order(), x.valuation()));
    if (!x.exact()) order = std::min(order, detail::saturating_add(x.order_, c.valuation()));
    OperatorMatrix m(x.dim_, x.params_, order);
    for (std::size_t k = 0; k < x.entries_.size(); ++k)
      m.entries_[k] = ScalarSeries::multiply(c, x.entries_[k], order);
    return m;
  }

  friend OperatorMatrix operator*(const OperatorMatrix& x, const ScalarSeries& c) { return c * x; }

  friend OperatorMatrix operator*(const Rational& c, const OperatorMatrix& x) {
    return x.map([&](const ScalarSeries& s) { return s * ParamPoly(c); });
  }

  /// Structural equality (same order, same entries).
  friend bool operator==(const OperatorMatrix& x, const OperatorMatrix& y) {
    return x.dim_ == y.dim_ && x.order_ == y.order_ && x.entries_ == y.entries_;
  }

  /// Reliable order of a product of matrices.
  static int product_order(const OperatorMatrix& x, const OperatorMatrix& y) {
    int a = x.exact() ? kExactOrder : detail::saturating_add(x.order_, y.valuation());
    int b = y.exact() ? kExactOrder : detail::saturating_add(y.order_, x.valuation());
    return std::min(a, b);
  }

 private:
  static void check_same_dim(const OperatorMatrix& x, const OperatorMatrix& y) {
    if (x.dim_ != y.dim_)
      throw Error(ErrorCode::DimensionMismatch, std::to_string(x.dim_) + " vs " + std::to_string(y.dim_));
  }

  void retruncate(int order) {
    order_ = order;
    for (auto& e : entries_) e = e.truncated(order);
  }

  std::size_t dim_ = 0;
  std::vector<std::string> params_;
  int order_ = kExactOrder;
  std::vector<ScalarSeries> entries_;
};

/// Matrix unit e_ij (1-based) of size n, exact.
inline OperatorMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  OperatorMatrix m(n);
  m.set(i - 1, j - 1, ScalarSeries(1));
  return m;
}

/// Kronecker product: (A⊗B)[i*q + k, j*q + l] = A[i,j] * B[k,l].
inline OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  const std::size_t p = a.dim(), q = b.dim();
  int order = OperatorMatrix::product_order(a, b);
  OperatorMatrix m(p * q, detail::merge_params(a.params(), b.params()), order);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const auto& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t l = 0; l < q; ++l) {
          const auto& y = b(k, l);
          if (y.is_zero()) continue;
          m.set(i * q + k, j * q + l, ScalarSeries::multiply(x, y, order));
        }
    }
  return m;
}

/// Flip P: e_i⊗e_j -> e_j⊗e_i on V⊗V.
inline OperatorMatrix flip(std::size_t n) {
  OperatorMatrix p(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.set(j * n + i, i * n + j, ScalarSeries(1));
  return p;
}

/// R21 = P R P.
inline OperatorMatrix flipped(const OperatorMatrix& r, std::size_t n) {
  OperatorMatrix m(r.dim(), r.params(), r.order());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) m.set(j * n + i, l * n + k, r(i * n + j, k * n + l));
  return m;
}

/// Integer n with n*n == d, or DimensionNotSquare.
inline std::size_t side_of_square(std::size_t d) {
  std::size_t n = 0;
  while (n * n < d) ++n;
  if (n * n != d || n == 0) throw Error(ErrorCode::DimensionNotSquare, "dimension " + std::to_string(d));
  return n;
}

enum class FactorPair { P12, P13, P23 };

/// R_ij: R acting on factors i and j of V⊗V⊗V, identity on the third.
inline OperatorMatrix embed(const OperatorMatrix& r, FactorPair pair, std::size_t n) {
  if (r.dim() != n * n)
    throw Error(ErrorCode::DimensionMismatch,
                "embed: R has dim " + std::to_string(r.dim()) + ", expected " + std::to_string(n * n));
  OperatorMatrix m(n * n * n, r.params(), r.order());
  auto idx3 = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const auto& v = r(a * n + b, c * n + d);
          if (v.is_zero()) continue;
          for (std::size_t s = 0; s < n; ++s) {
            switch (pair) {
              case FactorPair::P12: m.set(idx3(a, b, s), idx3(c, d, s), v); break;
              case FactorPair::P23: m.set(idx3(s, a, b), idx3(s, c, d), v); break;
              case FactorPair::P13: m.set(idx3(a, s, b), idx3(c, s, d), v); break;
            }
          }
        }
  return m;
}

/// A permutation of {1,2,3} in one-line notation: images()[k-1] = σ(k).
class Permutation3 {
 public:
  explicit Permutation3(std::array<int, 3> images) : images_(images) {
    std::array<bool, 3> seen{};
    for (int v : images_) {
      if (v < 1 || v > 3 || seen[static_cast<std::size_t>(v - 1)])
        throw Error(ErrorCode::BadParameter, "not a permutation of {1,2,3}");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation3 identity() { return Permutation3({1, 2, 3}); }

  /// All six elements of S3, identity first.
  static std::array<Permutation3, 6> all() {
    return {Permutation3({1, 2, 3}), Permutation3({2, 1, 3}), Permutation3({1, 3, 2}),
            Permutation3({3, 2, 1}), Permutation3({2, 3, 1}), Permutation3({3, 1, 2})};
  }

  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::array<int, 3>& images() const { return images_; }

  Permutation3 inverse() const {
    std::array<int, 3> inv{};
    for (int k = 1; k <= 3; ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return Permutation3(inv);
  }

  /// (σ ∘ τ)(k) = σ(τ(k)).
  friend Permutation3 operator*(const Permutation3& sigma, const Permutation3& tau) {
    return Permutation3({sigma(tau(1)), sigma(tau(2)), sigma(tau(3))});
  }

  friend bool operator==(const Permutation3&, const Permutation3&) = default;

 private:
  std::array<int, 3> images_;
};

/// Place permutation v1⊗v2⊗v3 -> v_{σ⁻¹(1)}⊗v_{σ⁻¹(2)}⊗v_{σ⁻¹(3)}: the factor
/// in position k moves to position σ(k).
inline OperatorMatrix perm_operator(const Permutation3& sigma, std::size_t n) {
  OperatorMatrix m(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::array<std::size_t, 3> in{a, b, c};
        std::array<std::size_t, 3> out{};
        for (int k = 1; k <= 3; ++k) out[static_cast<std::size_t>(sigma(k) - 1)] = in[static_cast<std::size_t>(k - 1)];
        m.set((out[0] * n + out[1]) * n + out[2], (a * n + b) * n + c, ScalarSeries(1));
      }
  return m;
}

namespace detail {

using PolyMatrix = std::vector<ParamPoly>;  // row-major dim x dim

inline PolyMatrix poly_mul(const PolyMatrix& x, const PolyMatrix& y, std::size_t n) {
  PolyMatrix out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i * n + k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[k * n + j].is_zero()) continue;
        out[i * n + j] += x[i * n + k] * y[k * n + j];
      }
    }
  return out;
}

// Gauss-Jordan over ParamPoly, pivoting only on nonzero rational constants.
inline std::optional<PolyMatrix> poly_inverse(PolyMatrix a, std::size_t n) {
  PolyMatrix inv(n * n);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = ParamPoly(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      const auto& p = a[r * n + col];
      if (!p.is_zero() && p.is_constant()) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    Rational scale = Rational(1) / a[col * n + col].constant_value();
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] *= scale;
      inv[col * n + j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col].is_zero()) continue;
      ParamPoly f = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col * n + j].is_zero()) a[r * n + j] -= f * a[col * n + j];
        if (!inv[col * n + j].is_zero()) inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Two-sided inverse computed degree by degree from the inverse of the
/// degree-0 coefficient matrix. When M is exact and the series inverse
/// terminates before `order`, the result is marked exact (checked by
/// multiplying back).
inline OperatorMatrix matrix_inverse(const OperatorMatrix& m, int order = kDefaultOrder) {
  const std::size_t n = m.dim();
  if (m.valuation() < 0)
    throw Error(ErrorCode::SingularLeadingMatrix, "matrix_inverse: entries with negative degree");
  std::vector<detail::PolyMatrix> coeffs;
  int max_degree = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) max_degree = std::max(max_degree, m(i, j).highest_degree());
  for (int d = 0; d <= max_degree; ++d) {
    detail::PolyMatrix c(n * n);
    for (std::size_t k = 0; k < n * n; ++k) c[k] = m(k / n, k % n).coeff(d);
    coeffs.push_back(std::move(c));
  }
  auto inv0 = detail::poly_inverse(coeffs[0], n);
  if (!inv0) throw Error(ErrorCode::SingularLeadingMatrix, "degree-0 coefficient matrix has no rational pivot");

  int target = m.exact() ? order : std::min(order, m.order());
  std::vector<detail::PolyMatrix> x{*inv0};
  int last_nonzero = 0;
  for (int k = 1; k < target; ++k) {
    detail::PolyMatrix acc(n * n);
    for (int j = 1; j <= k && j <= max_degree; ++j) {
      auto prod = detail::poly_mul(coeffs[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(k - j)], n);
      for (std::size_t e = 0; e < n * n; ++e)
        if (!prod[e].is_zero()) acc[e] += prod[e];
    }
    auto xk = detail::poly_mul(*inv0, acc, n);
    bool zero = true;
    for (auto& e : xk) {
      e = -e;
      zero = zero && e.is_zero();
    }
    if (!zero) last_nonzero = k;
    x.push_back(std::move(xk));
    // An exact M whose inverse has stopped producing terms for max_degree
    // consecutive degrees has terminated.
    if (m.exact() && k - last_nonzero >= std::max(max_degree, 1)) break;
  }

  auto assemble = [&](int ord) {
    OperatorMatrix out(n, m.params(), ord);
    for (std::size_t e = 0; e < n * n; ++e) {
      std::vector<ParamPoly> c;
      c.reserve(x.size());
      for (const auto& xk : x) c.push_back(xk[e]);
      out.set(e / n, e % n, ScalarSeries::from_coefficients(0, std::move(c), ord));
    }
    return out;
  };

  if (m.exact()) {
    OperatorMatrix candidate = assemble(kExactOrder);
    if ((m * candidate - OperatorMatrix::identity(n)).is_zero()) return candidate;
  }
  return assemble(target);
}

}  // namespace ybe
