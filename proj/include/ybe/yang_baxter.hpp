#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lie.hpp"
#include "operator_matrix.hpp"
#include "series.hpp"

namespace ybe {

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::optional<Witness> witness;
  std::string detail;
  std::string exactness;  // "exact (polynomial identity)" or "to order N"

  bool passed() const { return status != CheckStatus::Fail; }
};

struct VerificationReport {
  std::string subject_id;
  int order = kDefaultOrder;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
  }
  void add(Check c) { checks.push_back(std::move(c)); }
};

inline std::string exactness_label(int order) {
  return order >= kExactOrder ? "exact (polynomial identity)" : "to order " + std::to_string(order);
}

/// Pass iff `defect` vanishes; a failure carries its first nonzero entry.
inline Check zero_check(std::string name, const OperatorMatrix& defect, std::string detail = {}) {
  Check c{std::move(name), CheckStatus::Pass, std::nullopt, std::move(detail), exactness_label(defect.order())};
  if (auto w = defect.first_nonzero()) {
    c.status = CheckStatus::Fail;
    c.witness = w;
  }
  return c;
}

inline Check skipped(std::string name, std::string why) {
  return Check{std::move(name), CheckStatus::Skipped, std::nullopt, std::move(why), ""};
}

/// R12 R13 R23 − R23 R13 R12.
inline OperatorMatrix qybe_defect(const OperatorMatrix& r) {
  const std::size_t n = side_of_square(r.dim());
  OperatorMatrix r12 = embed(r, FactorPair::P12, n);
  OperatorMatrix r13 = embed(r, FactorPair::P13, n);
  OperatorMatrix r23 = embed(r, FactorPair::P23, n);
  OperatorMatrix m = r13 * r23;
  OperatorMatrix lhs = r12 * m;
  OperatorMatrix rhs = r23 * (r13 * r12);
  return lhs - rhs;
}

inline Check is_qybe(const OperatorMatrix& r) { return zero_check("QYBE", qybe_defect(r)); }

/// (123)·R12 − (213)·R23, with the 3-cycles read as one-line images
/// [2,3,1] and [3,1,2] acting by left multiplication.
inline OperatorMatrix mqybe_rhs_operator(const OperatorMatrix& r) {
  const std::size_t n = side_of_square(r.dim());
  OperatorMatrix c123 = perm_operator(Permutation3({2, 3, 1}), n);
  OperatorMatrix c213 = perm_operator(Permutation3({3, 1, 2}), n);
  return c123 * embed(r, FactorPair::P12, n) - c213 * embed(r, FactorPair::P23, n);
}

struct MqybeResult {
  std::optional<ScalarSeries> lambda;
  std::string reason;  // "D=0", "no scalar fits", or empty on success
  std::optional<Witness> witness;
  std::size_t row = 0, col = 0;  // entry λ was solved from, 1-based
};

/// D(i,j) / B(i,j) as a series.
inline ScalarSeries entry_quotient(const OperatorMatrix& d, const OperatorMatrix& b, std::size_t i, std::size_t j,
                                   int order) {
  return d(i, j) * series_inv(b(i, j), order);
}

/// Scalar λ(t) with D = λ·B, if one exists and is nonzero.
inline MqybeResult mqybe_lambda(const OperatorMatrix& r) {
  MqybeResult out;
  OperatorMatrix d = qybe_defect(r);
  if (d.is_zero()) {
    out.reason = "D=0";
    return out;
  }
  OperatorMatrix b = mqybe_rhs_operator(r);
  std::optional<std::pair<std::size_t, std::size_t>> pick;
  int best = kExactOrder;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const auto& e = b(i, j);
      if (e.is_zero() || !e.coeff(e.valuation()).is_constant()) continue;
      if (e.valuation() < best) {
        best = e.valuation();
        pick = {i, j};
      }
    }
  if (!pick) {
    out.reason = "no scalar fits";
    out.witness = d.first_nonzero();
    return out;
  }
  ScalarSeries lambda = entry_quotient(d, b, pick->first, pick->second, std::min(d.order(), b.order()));
  OperatorMatrix residual = d - lambda * b;
  if (auto w = residual.first_nonzero(); w || lambda.is_zero()) {
    out.reason = "no scalar fits";
    out.witness = w ? w : d.first_nonzero();
    return out;
  }
  out.lambda = lambda;
  out.row = pick->first + 1;
  out.col = pick->second + 1;
  return out;
}

inline Check mqybe_check(const OperatorMatrix& r) {
  MqybeResult m = mqybe_lambda(r);
  if (m.lambda)
    return Check{"MQYBE", CheckStatus::Pass, std::nullopt, "lambda = " + m.lambda->to_string(),
                 exactness_label(m.lambda->order())};
  return Check{"MQYBE", CheckStatus::Fail, m.witness, m.reason, exactness_label(r.order())};
}

/// R21 = R⁻¹ with R21 = P·R·P.
inline Check unitarity_check(const OperatorMatrix& r, int order = kDefaultOrder) {
  const std::size_t n = side_of_square(r.dim());
  OperatorMatrix inv = matrix_inverse(r, r.exact() ? order : std::min(order, r.order()));
  OperatorMatrix r21 = flipped(r, n);
  int reliable = std::min(inv.order(), r21.order());
  return zero_check("unitarity", r21.truncated(reliable) - inv.truncated(reliable));
}

/// Coefficient of t¹ of R; requires R = I + O(t).
inline OperatorMatrix classical_limit(const OperatorMatrix& r) {
  if (r.valuation() < 0) throw Error(ErrorCode::ConstantTermNotIdentity, "classical_limit: negative degree");
  OperatorMatrix c0 = r.coefficient(0);
  OperatorMatrix diff = c0 - OperatorMatrix::identity(r.dim());
  if (auto w = diff.first_nonzero())
    throw Error(ErrorCode::ConstantTermNotIdentity, "classical_limit: R(0) - I nonzero at " + w->to_string());
  if (r.order() <= 1) throw Error(ErrorCode::InsufficientOrder, "classical_limit: t^1 not known");
  return r.coefficient(1);
}

/// ρ = t¹ coefficient: ρ = 2·T(w) and P·ρ·P = −ρ.
inline Check matches_classical(const OperatorMatrix& r, const WedgeElement& w) {
  const std::size_t n = side_of_square(r.dim());
  OperatorMatrix rho = classical_limit(r);
  OperatorMatrix expected = w.terms().empty() ? OperatorMatrix(r.dim()) : tensor_form(w).doubled();
  // compare over the union of both parameter sets
  std::vector<std::string> all = rho.params();
  for (const auto& p : expected.params())
    if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
  std::sort(all.begin(), all.end());
  rho.set_params(all);
  expected.set_params(all);
  Check c = zero_check("classical limit", rho - expected);
  if (c.status == CheckStatus::Fail) {
    c.witness->degree = 1;
    c.detail = "t^1 coefficient differs from 2T(r)";
    return c;
  }
  Check skew = zero_check("classical limit", flipped(rho, n) + rho);
  if (skew.status == CheckStatus::Fail) {
    skew.witness->degree = 1;
    skew.detail = "t^1 coefficient is not flip-skew";
    return skew;
  }
  c.exactness = exactness_label(kExactOrder);
  return c;
}

namespace detail {

inline std::optional<Integer> exact_sqrt(const Integer& z) {
  if (z < 0) return std::nullopt;
  Integer s = sqrt(z);
  if (s * s != z) return std::nullopt;
  return s;
}

}  // namespace detail

/// Square root μ of λ with positive leading coefficient, for λ of even
/// valuation whose leading coefficient is a rational square.
inline ScalarSeries hecke_parameter(const ScalarSeries& lambda, int order = kDefaultOrder) {
  if (lambda.is_zero()) return lambda;
  const int v = lambda.valuation();
  const ParamPoly& lead = lambda.coeff(v);
  if (v % 2 != 0 || !lead.is_constant())
    throw Error(ErrorCode::BadParameter, "hecke_parameter: leading term is not a square");
  Rational c = lead.constant_value();
  auto num = detail::exact_sqrt(c.get_num());
  auto den = detail::exact_sqrt(c.get_den());
  if (!num || !den) throw Error(ErrorCode::BadParameter, "hecke_parameter: leading coefficient is not a square");
  int top = std::min(order + v, lambda.order());
  std::vector<ParamPoly> u;
  for (int k = v; k < top; ++k) u.push_back(lambda.coeff(k) * (Rational(1) / c));
  ScalarSeries unit = ScalarSeries::from_coefficients(0, std::move(u), lambda.exact() ? kExactOrder : top - v);
  ScalarSeries root = series_pow(unit, Rational(1, 2), order);
  return ScalarSeries::monomial(ParamPoly(Rational(*num, *den)), v / 2) * root;
}

struct HeckeResult {
  Check braid;
  Check quadratic;
  bool passed() const { return braid.passed() && quadratic.passed(); }
};

/// B̂ = (P·R − μ)/√(1−μ²): braid relation and (B̂ − q)(B̂ + q⁻¹) = 0 with
/// q = (1−μ)/√(1−μ²).
inline HeckeResult hecke_check(const OperatorMatrix& r, const ScalarSeries& mu, int order = kDefaultOrder) {
  if (!mu.is_zero() && (mu.valuation() < 0 || !mu.coeff(0).is_zero()))
    throw Error(ErrorCode::NonzeroConstantLambda, "hecke_check: parameter must vanish at t = 0");
  const std::size_t n = side_of_square(r.dim());
  const int work = std::min({order, r.order(), mu.order()});
  ScalarSeries one(1);
  ScalarSeries norm = series_inv(series_pow(one - mu * mu, Rational(1, 2), work), work);
  ScalarSeries q = (one - mu) * norm;
  ScalarSeries q_inv = series_inv(q, work);

  OperatorMatrix id = OperatorMatrix::identity(r.dim());
  OperatorMatrix bhat = norm * (flip(n) * r - mu * id);
  OperatorMatrix idn = OperatorMatrix::identity(n);
  OperatorMatrix b12 = kron(bhat, idn);
  OperatorMatrix b23 = kron(idn, bhat);
  OperatorMatrix braid = b12 * (b23 * b12) - b23 * (b12 * b23);
  OperatorMatrix quad = (bhat - q * id) * (bhat + q_inv * id);
  return HeckeResult{zero_check("Hecke braid", braid), zero_check("Hecke quadratic", quad)};
}

/// Rewrites a parameter as the deformation variable: every name^k in a
/// coefficient of t^d moves to t^(d+k). Used for entries whose printed
/// deformation parameter is not t.
inline OperatorMatrix promote_parameter(const OperatorMatrix& r, const std::string& name) {
  std::vector<std::string> params;
  for (const auto& p : r.params())
    if (p != name) params.push_back(p);
  OperatorMatrix out(r.dim(), params, r.order());
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) {
      ScalarSeries acc = ScalarSeries::zero(r.order());
      for (const auto& [d, c] : r(i, j).nonzero_terms()) {
        for (unsigned k = 0; k <= c.degree_in(name); ++k) {
          ParamPoly part = c.coefficient_of(name, k);
          if (!part.is_zero()) acc = acc + ScalarSeries::monomial(part, d + static_cast<int>(k));
        }
      }
      out.set(i, j, acc);
    }
  return out;
}

}  // namespace ybe
