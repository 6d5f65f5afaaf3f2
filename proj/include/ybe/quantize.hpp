#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lie.hpp"
#include "operator_matrix.hpp"
#include "series.hpp"
#include "yang_baxter.hpp"

namespace ybe {

/// Σ A^k/k!. Exact when A is exactly nilpotent; otherwise A must be O(t)
/// and the sum is truncated at `order`.
inline OperatorMatrix matrix_exp(const OperatorMatrix& a, int order = kDefaultOrder) {
  const std::size_t dim = a.dim();
  const int val = a.valuation();
  OperatorMatrix result = OperatorMatrix::identity(dim);
  result.set_params(a.params());
  OperatorMatrix term = result;
  bool truncating = false;
  for (std::size_t k = 1;; ++k) {
    term = Rational(1, static_cast<long>(k)) * (term * a);
    if (term.is_zero() && term.exact()) return truncating ? result.truncated(order) : result;
    if (!truncating && k >= dim) {
      // A^dim != 0, so A is not nilpotent.
      if (val < 1) throw Error(ErrorCode::NonNilpotent, "matrix_exp: exponent is neither nilpotent nor O(t)");
      truncating = true;
    }
    if (truncating || !a.exact()) {
      term = term.truncated(order);
      result = result.truncated(order);
      if (val >= 1 && (term.is_zero() || term.valuation() >= order)) return result + term;
    }
    result = result + term;
  }
}

/// exp(c·t·T(w)).
inline OperatorMatrix exp_tensor(const WedgeElement& w, const Rational& c, int order) {
  OperatorMatrix a = ScalarSeries::monomial(ParamPoly(c), 1) * tensor_form(w).matrix();
  return matrix_exp(a, order);
}

/// exp(2t·T(w)).
inline OperatorMatrix exp_quantize(const WedgeElement& w, int order = kDefaultOrder) {
  return exp_tensor(w, Rational(2), order);
}

/// exp(t·T(β))·exp(2t·T(γ))·exp(t·T(β)).
inline OperatorMatrix sandwich_quantize(const WedgeElement& beta, const WedgeElement& gamma,
                                        int order = kDefaultOrder) {
  OperatorMatrix side = exp_tensor(beta, Rational(1), order);
  return side * (exp_tensor(gamma, Rational(2), order) * side);
}

struct OrbitExpansion {
  GlElement x;
  WedgeElement base;
  std::vector<WedgeElement> coefficients;  // w_k = (ad x)^k base / k!
  int degree = 0;
};

inline int default_orbit_bound(std::size_t n) { return static_cast<int>((n * n - 1) * (n * n - 1)); }

inline OrbitExpansion orbit_expand(const GlElement& x, const WedgeElement& w, int bound) {
  if (bound < 1) throw Error(ErrorCode::BadParameter, "orbit_expand: bound must be >= 1");
  OrbitExpansion out{x, w, {canonical(w)}, 0};
  if (out.coefficients[0].terms().empty()) return out;
  for (int k = 1; k <= bound; ++k) {
    WedgeElement next = canonical(Rational(1, k) * ad_wedge(x, out.coefficients.back()));
    if (next.terms().empty()) return out;
    out.coefficients.push_back(std::move(next));
    out.degree = k;
  }
  throw Error(ErrorCode::NonNilpotentAction, "orbit_expand: no zero within " + std::to_string(bound) + " steps");
}

struct BoundaryResult {
  int degree = 0;
  WedgeElement gamma_d;
  WedgeElement beta_d;
  OperatorMatrix r;
};

/// Leading orbit coefficients of γ and β under exp(v ad x) at the largest
/// degree d where γ_d + β_d survives, and exp(tβ_d)·exp(2tγ_d)·exp(tβ_d).
inline BoundaryResult theorem3_boundary(const GlElement& x, const WedgeElement& gamma, const WedgeElement& beta,
                                        int order = kDefaultOrder) {
  const std::size_t n = x.n();
  const int bound = default_orbit_bound(n);
  OrbitExpansion g = orbit_expand(x, gamma.n() ? gamma : WedgeElement(n), bound);
  OrbitExpansion b = orbit_expand(x, beta.n() ? beta : WedgeElement(n), bound);
  auto at = [n](const OrbitExpansion& o, int k) {
    return k < static_cast<int>(o.coefficients.size()) ? o.coefficients[static_cast<std::size_t>(k)]
                                                        : WedgeElement(n);
  };
  for (int d = std::max(g.degree, b.degree); d >= 0; --d) {
    WedgeElement gd = at(g, d), bd = at(b, d);
    if (is_zero(gd + bd)) continue;
    return BoundaryResult{d, gd, bd, sandwich_quantize(bd, gd, order)};
  }
  throw Error(ErrorCode::ZeroLeadingTerm, "theorem3_boundary: gamma + beta is zero");
}

/// H(H+1)⋯(H+i−1), with H^⟨0⟩ = I.
inline GlElement rising_factorial(const GlElement& h, unsigned i) {
  GlElement out = GlElement::identity(h.n());
  for (unsigned k = 0; k < i; ++k) out = out * (h + ParamPoly(static_cast<long>(k)) * GlElement::identity(h.n()));
  return out;
}

inline GlElement matrix_power(const GlElement& x, unsigned k) {
  GlElement out = GlElement::identity(x.n());
  for (unsigned i = 0; i < k; ++i) out = out * x;
  return out;
}

/// F_m = Σ_i (−1)^i C(m,i) E^{m−i}H^⟨i⟩ ⊗ E^i H^⟨m−i⟩.
inline OperatorMatrix theorem4_term(const GlElement& h, const GlElement& e, unsigned m) {
  const std::size_t n = h.n();
  OperatorMatrix f(n * n);
  for (unsigned i = 0; i <= m; ++i) {
    GlElement left = matrix_power(e, m - i) * rising_factorial(h, i);
    GlElement right = matrix_power(e, i) * rising_factorial(h, m - i);
    if (left.is_zero() || right.is_zero()) continue;
    Rational c(binomial(m, i));
    if (i % 2 == 1) c = -c;
    f = f + c * kron(left.to_matrix(), right.to_matrix());
  }
  return f;
}

/// F₂₁⁻¹·F with F = Σ_m (t^m/m!) F_m.
inline OperatorMatrix theorem4_universal(const GlElement& h, const GlElement& e, int order = kDefaultOrder) {
  if (bracket(h, e) != e) throw Error(ErrorCode::BracketRelationFails, "theorem4_universal: [H,E] != E");
  const std::size_t n = h.n();
  if (!matrix_power(e, static_cast<unsigned>(n)).is_zero())
    throw Error(ErrorCode::NonNilpotent, "theorem4_universal: E is not nilpotent");
  // E^n = 0 kills F_m for m >= 2n−1, so F is a polynomial in t.
  const int last = static_cast<int>(2 * n - 1);
  const bool exact = last <= order;
  OperatorMatrix f(n * n);
  for (int m = 0; m < std::min(last, order); ++m) {
    OperatorMatrix fm = theorem4_term(h, e, static_cast<unsigned>(m));
    ScalarSeries coef = ScalarSeries::monomial(ParamPoly(Rational(1) / factorial(static_cast<unsigned>(m))), m);
    f = f + coef * fm;
  }
  if (!exact) f = f.truncated(order);
  OperatorMatrix f21 = flipped(f, n);
  OperatorMatrix r = matrix_inverse(f21, order) * f;
  return exact ? r : r.truncated(order);
}

/// Smallest k with X^k = 0.
inline int nilpotency_index(const OperatorMatrix& x) {
  OperatorMatrix p = OperatorMatrix::identity(x.dim());
  for (std::size_t k = 1; k <= x.dim(); ++k) {
    p = p * x;
    if (p.is_zero()) return static_cast<int>(k);
  }
  throw Error(ErrorCode::NonNilpotent, "matrix is not nilpotent");
}

/// lim_{t→0} G·Q·G⁻¹ with G = exp((scale/t)·(x⊗1 + 1⊗x)).
inline OperatorMatrix conjugation_limit(const OperatorMatrix& q, const GlElement& x, const ParamPoly& scale) {
  const std::size_t n = x.n();
  if (q.dim() != n * n) throw Error(ErrorCode::DimensionMismatch, "conjugation_limit: Q is not on V⊗V");
  OperatorMatrix xm = x.to_matrix();
  OperatorMatrix id = OperatorMatrix::identity(n);
  OperatorMatrix big = kron(xm, id) + kron(id, xm);
  const int index = nilpotency_index(big);
  const int needed = 2 * (index - 1) + 2;
  if (!q.exact() && q.order() < needed)
    throw Error(ErrorCode::InsufficientOrder, "conjugation_limit: Q must be known to order " + std::to_string(needed));
  ScalarSeries s_over_t = ScalarSeries::monomial(scale, -1);
  OperatorMatrix g = matrix_exp(s_over_t * big);
  OperatorMatrix g_inv = matrix_exp(-(s_over_t * big));
  OperatorMatrix conj = g * (q * g_inv);
  std::vector<std::string> params = conj.params();
  for (const auto& v : scale.variables())
    if (std::find(params.begin(), params.end(), v) == params.end()) params.push_back(v);
  std::sort(params.begin(), params.end());
  OperatorMatrix out(n * n, params);
  for (std::size_t i = 0; i < conj.dim(); ++i)
    for (std::size_t j = 0; j < conj.dim(); ++j) {
      const ScalarSeries& e = conj(i, j);
      if (!e.is_zero() && e.valuation() < 0)
        throw Error(ErrorCode::PoleAtZero,
                    "conjugation_limit: " + Witness{i + 1, j + 1, e.valuation(), e.coeff(e.valuation())}.to_string());
      out.set(i, j, ScalarSeries(laurent_constant_term(e)));
    }
  return out;
}

/// Coefficient of p^k of a wedge family whose p-degree is at most k.
inline WedgeElement scaled_wedge_limit(const WedgeElement& family, const std::string& p, unsigned k) {
  WedgeElement c = canonical(family);
  WedgeElement out(family.n());
  for (const auto& t : c.terms()) {
    if (t.c.degree_in(p) > k)
      throw Error(ErrorCode::DegreeExceedsK, "scaled_wedge_limit: " + p + "-degree " +
                                                 std::to_string(t.c.degree_in(p)) + " exceeds " + std::to_string(k));
    ParamPoly lead = t.c.coefficient_of(p, k);
    if (!lead.is_zero()) out += WedgeElement::wedge(t.x, t.y, lead);
  }
  return out;
}

}  // namespace ybe
