#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catalog_literals.hpp"
#include "errors.hpp"
#include "lie.hpp"
#include "operator_matrix.hpp"
#include "quantize.hpp"
#include "series.hpp"
#include "yang_baxter.hpp"

namespace ybe {

enum class Kind { Qybe, Mqybe };
enum class BoundaryStatus { ClaimedBoundary, Unknown, Modified };

inline std::string to_string(Kind k) { return k == Kind::Qybe ? "qybe" : "mqybe"; }

inline std::string to_string(BoundaryStatus b) {
  switch (b) {
    case BoundaryStatus::ClaimedBoundary: return "claimed_boundary";
    case BoundaryStatus::Unknown: return "unknown";
    case BoundaryStatus::Modified: return "modified";
  }
  return "?";
}

struct CatalogEntry {
  std::string id{};
  std::size_t n = 3;
  std::vector<std::string> params{};
  WedgeElement classical_r{};
  std::optional<WedgeElement> printed_classical_r{};  // when the display differs from classical_r
  Kind kind = Kind::Qybe;
  bool expected_unitary = true;
  BoundaryStatus boundary_status = BoundaryStatus::Unknown;
  std::string label{};
  std::string recipe{};
  std::string deformation_variable = "t";
  std::string note{};
  bool has_literal = true;
  std::size_t carrier_dim = 0;  // expected at the default specialization; 0 = not applicable
};

namespace gens {

inline GlElement e(std::size_t i, std::size_t j) { return GlElement::unit(3, i, j); }
inline ParamPoly var(const std::string& name) { return ParamPoly::variable(name); }
inline WedgeElement wedge(const GlElement& x, const GlElement& y, const ParamPoly& c = ParamPoly(1)) {
  return WedgeElement::wedge(x, y, c);
}

/// Σ_{i<j} e_ij∧e_ji.
inline WedgeElement gamma(std::size_t n = 3) {
  WedgeElement g(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) g += WedgeElement::wedge(GlElement::unit(n, i, j), GlElement::unit(n, j, i));
  return g;
}

/// (e11−e22)∧(e22−e33).
inline WedgeElement cartan_wedge() { return wedge(e(1, 1) - e(2, 2), e(2, 2) - e(3, 3)); }

/// γ + c·(e11−e22)∧(e22−e33).
inline WedgeElement r_lambda(const ParamPoly& c) { return gamma() + c * cartan_wedge(); }

inline WedgeElement r_cremmer_gervais() { return r_lambda(Rational(1, 3)) + wedge(e(1, 2), e(3, 2), 2); }

inline WedgeElement r_p() {
  return wedge(2 * e(1, 1) - e(2, 2) - e(3, 3), e(1, 2)) + wedge(e(1, 1) + e(2, 2) - 2 * e(3, 3), e(2, 3)) +
         wedge(e(1, 3), e(3, 2), 3);
}

inline WedgeElement r_r() {
  ParamPoly a = var("a");
  GlElement d1 = a * (-e(1, 1) + 2 * e(2, 2) - e(3, 3)) + 3 * e(2, 3);
  GlElement d2 = -2 * e(1, 1) + e(2, 2) + e(3, 3);
  return wedge(d1, e(1, 2)) + wedge(d2, e(1, 3));
}

inline WedgeElement r_q(const ParamPoly& a, const ParamPoly& b, const ParamPoly& c) {
  return wedge(a * e(1, 1) + b * e(2, 2) + c * e(3, 3), e(1, 3)) + wedge(e(1, 2), e(2, 3), a - c);
}

inline WedgeElement r_q011m1_prime() { return wedge(e(2, 2) - e(3, 3), e(2, 3)) + wedge(e(1, 2), e(1, 3)); }

inline WedgeElement r_q11m2_prime() {
  return wedge(e(1, 1) + e(2, 2) - 2 * e(3, 3) + e(2, 3), e(1, 3)) + wedge(e(1, 2), e(2, 3), 3);
}

inline WedgeElement r_q11m2_prime_printed() {
  return wedge(e(1, 1) + e(2, 2) - 2 * e(3, 3) + e(2, 3), e(1, 2)) + wedge(e(1, 2), e(2, 3), 3);
}

inline WedgeElement r_b_lambda() {
  ParamPoly lam = var("lam");
  return wedge((lam - 1) * e(1, 1) + (lam + 1) * e(2, 2) - 2 * lam * e(3, 3), e(1, 2));
}

inline WedgeElement r_b0() { return wedge(e(1, 2) + e(2, 3), 2 * e(1, 1) - 2 * e(3, 3)); }
inline WedgeElement r_b1() { return wedge(e(1, 3), 2 * e(1, 1) - e(2, 2) - e(3, 3) + e(2, 3)); }
inline WedgeElement r_h() { return cartan_wedge(); }
inline WedgeElement r_h1() { return wedge(e(1, 1) + e(2, 2) - 2 * e(3, 3), e(1, 2)); }
inline WedgeElement r_h_lam1() { return wedge(e(1, 2) + var("lam") * e(2, 3), e(1, 3)); }

/// ad-element used on the DJ data for r.
inline GlElement x_r() { return Rational(3, 2) * var("a") * e(1, 2) + ParamPoly(Rational(3, 2)) * e(1, 3); }

/// Conjugating element for the limit producing R(p).
inline GlElement x_p() { return -e(1, 2) - ParamPoly(Rational(1, 2)) * e(2, 3); }

/// [H, E] = E pairs for the two-dimensional carriers.
inline std::pair<GlElement, GlElement> pair_b0() { return {e(1, 1) - e(3, 3), e(1, 2) + e(2, 3)}; }
inline std::pair<GlElement, GlElement> pair_b1() {
  return {ParamPoly(Rational(1, 3)) * (2 * e(1, 1) - e(2, 2) - e(3, 3) + e(2, 3)), e(1, 3)};
}
inline const Rational kB1Rescale{3, 2};

}  // namespace gens

inline const std::map<std::string, Rational>& default_specialization() {
  static const std::map<std::string, Rational> values{
      {"a", Rational(1)}, {"b", Rational(2)}, {"c", Rational(-3)}, {"lam", Rational(1)}, {"m", Rational(1)}};
  return values;
}

inline const std::vector<CatalogEntry>& catalog_entries() {
  using namespace gens;
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto add = [&](CatalogEntry c) { v.push_back(std::move(c)); };
    add({.id = "gamma_dj", .classical_r = gamma(), .kind = Kind::Mqybe,
         .boundary_status = BoundaryStatus::Modified, .label = "standard Drinfeld-Jimbo modified solution exp(2t gamma)",
         .recipe = "exp_quantize(gamma)", .has_literal = false});
    add({.id = "cremmer_gervais", .classical_r = r_cremmer_gervais(), .kind = Kind::Mqybe,
         .boundary_status = BoundaryStatus::Modified, .label = "Cremmer-Gervais modified solution",
         .recipe = "q^-beta (exp(2t gamma) + 2 sin t (q^1/2 e12(x)e32 - q^-1/2 e32(x)e12)) q^-beta, q = sec t - tan t",
         .has_literal = false});
    add({.id = "p", .params = {"m"}, .classical_r = r_p(), .boundary_status = BoundaryStatus::ClaimedBoundary,
         .label = "boundary quantization of r(p), six-dimensional carrier",
         .recipe = "conjugation_limit(cremmer_gervais, x = -e12 - 1/2 e23, scale = 3m)",
         .deformation_variable = "m", .carrier_dim = 6});
    add({.id = "r", .params = {"a"}, .classical_r = r_r(), .boundary_status = BoundaryStatus::ClaimedBoundary,
         .label = "boundary quantization of r(r)",
         .recipe = "theorem3(x = 3a/2 e12 + 3/2 e13, gamma, 1/3 (e11-e22)^(e22-e33))", .carrier_dim = 4});
    add({.id = "q_abc", .params = {"a", "b", "c"}, .classical_r = r_q(var("a"), var("b"), var("c")),
         .label = "exponential quantization of r(q_abc)", .recipe = "exp_quantize",
         .note = "sub-family (-1-lam, 2lam, 1-lam) is a boundary family", .carrier_dim = 4});
    add({.id = "q011m1_prime", .classical_r = r_q011m1_prime(), .label = "second r-matrix on q_(0,1,-1)",
         .recipe = "exp_quantize", .carrier_dim = 4});
    add({.id = "q11m2_prime", .classical_r = r_q11m2_prime(), .printed_classical_r = r_q11m2_prime_printed(),
         .label = "second r-matrix on q_(1,1,-2)", .recipe = "exp_quantize",
         .note = "displayed r' has e12 in its first factor; e13 is the version whose exponential is the displayed R'",
         .carrier_dim = 4});
    add({.id = "b_lambda", .params = {"lam"}, .classical_r = r_b_lambda(),
         .boundary_status = BoundaryStatus::ClaimedBoundary, .label = "boundary quantization of r(b_lam)",
         .recipe = "theorem3(x = e12, gamma, lam (e11-e22)^(e22-e33))", .carrier_dim = 2});
    add({.id = "b0", .classical_r = r_b0(), .label = "universal quantization on b0",
         .recipe = "theorem4(H = e11 - e33, E = e12 + e23)", .carrier_dim = 2});
    add({.id = "b1", .classical_r = r_b1(), .label = "universal quantization on b1",
         .recipe = "theorem4(H = 1/3 (2e11 - e22 - e33 + e23), E = e13), t -> 3/2 t",
         .note = "printed carrier element is 3/2 times a normalized [H,E] = E pair", .carrier_dim = 2});
    add({.id = "h", .classical_r = r_h(), .boundary_status = BoundaryStatus::ClaimedBoundary,
         .label = "diagonal quantization of the Cartan wedge", .recipe = "exp_quantize; classical r = lim (1/lam) r_lam",
         .note = "deformation parameter m identified with t; displayed row 2 is one entry short (read as 0)",
         .carrier_dim = 2});
    add({.id = "h1", .classical_r = r_h1(), .boundary_status = BoundaryStatus::ClaimedBoundary,
         .label = "limit of the b_lam family", .recipe = "exp_quantize; classical r = lim (1/lam) r(b_lam)",
         .carrier_dim = 2});
    add({.id = "h_lam1", .params = {"lam"}, .classical_r = r_h_lam1(),
         .boundary_status = BoundaryStatus::ClaimedBoundary, .label = "limit inside the q_(-1,0,1) orbit",
         .recipe = "exp_quantize", .carrier_dim = 2});
    return v;
  }();
  return entries;
}

inline const CatalogEntry& find_entry(const std::string& id) {
  const auto& all = catalog_entries();
  auto it = std::find_if(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.id == id; });
  if (it == all.end()) throw Error(ErrorCode::UnknownId, id);
  return *it;
}

namespace detail {

inline std::vector<std::string> sorted_variables(const OperatorMatrix& m) {
  std::set<std::string> vars;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (const auto& [d, c] : m(i, j).nonzero_terms())
        for (const auto& v : c.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

inline OperatorMatrix from_table(const literals::LiteralTable& table) {
  OperatorMatrix m(9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) m.set(i, j, series_in(parse_poly(table[i][j]), "t"));
  m.set_params(sorted_variables(m));
  return m;
}

}  // namespace detail

/// The displayed matrix for `id`. Only "h" depends on `order` (its entries
/// are e^{±t}).
inline OperatorMatrix build_literal(const std::string& id, int order = kDefaultOrder) {
  const CatalogEntry& entry = find_entry(id);
  if (!entry.has_literal) throw Error(ErrorCode::NoLiteralForm, id + " is defined by a formula");
  static const std::map<std::string, const literals::LiteralTable*> tables{
      {"p", &literals::kLiteralP},          {"r", &literals::kLiteralR},
      {"q_abc", &literals::kLiteralQabc},   {"q011m1_prime", &literals::kLiteralQ011m1Prime},
      {"q11m2_prime", &literals::kLiteralQ11m2Prime}, {"b_lambda", &literals::kLiteralBLambda},
      {"b0", &literals::kLiteralB0},        {"b1", &literals::kLiteralB1},
      {"h1", &literals::kLiteralH1},        {"h_lam1", &literals::kLiteralHLam1}};
  if (id == "h") {
    ScalarSeries up = series_exp(ScalarSeries::t(), order);
    ScalarSeries down = series_exp(-ScalarSeries::t(), order);
    const int signs[9] = {0, 1, -1, -1, 0, 1, 1, -1, 0};
    OperatorMatrix m(9);
    for (std::size_t k = 0; k < 9; ++k) m.set(k, k, signs[k] == 0 ? ScalarSeries(1) : signs[k] > 0 ? up : down);
    return m;
  }
  return detail::from_table(*tables.at(id));
}

/// q^{−β}{exp(2tγ) + 2 sin t (q^{1/2} e12⊗e32 − q^{−1/2} e32⊗e12)}q^{−β}.
inline OperatorMatrix cremmer_gervais(int order = kDefaultOrder) {
  using namespace gens;
  ScalarSeries q = trig_series(TrigKind::Sec, order) - trig_series(TrigKind::Tan, order);
  ScalarSeries log_q = series_log(q, order);
  ScalarSeries sqrt_q = series_pow(q, Rational(1, 2), order);
  ScalarSeries inv_sqrt_q = series_inv(sqrt_q, order);
  ScalarSeries two_sin = ScalarSeries(2) * trig_series(TrigKind::Sin, order);
  WedgeElement beta = ParamPoly(Rational(1, 3)) * cartan_wedge();
  OperatorMatrix q_beta = matrix_exp((-log_q) * tensor_form(beta).matrix(), order);
  OperatorMatrix e12 = e(1, 2).to_matrix(), e32 = e(3, 2).to_matrix();
  OperatorMatrix middle =
      exp_quantize(gamma(), order) + two_sin * (sqrt_q * kron(e12, e32) - inv_sqrt_q * kron(e32, e12));
  return q_beta * (middle * q_beta);
}

/// Runs the recipe for `id`.
inline OperatorMatrix build_constructive(const std::string& id, int order = kDefaultOrder) {
  using namespace gens;
  const CatalogEntry& entry = find_entry(id);
  if (id == "gamma_dj") return exp_quantize(gamma(), order);
  if (id == "cremmer_gervais") return cremmer_gervais(order);
  if (id == "p") {
    // Pole depth of the conjugation is 8; the limit needs Q through t^9.
    return conjugation_limit(cremmer_gervais(std::max(order, 10)), x_p(), ParamPoly(3) * var("m"));
  }
  if (id == "r") return theorem3_boundary(x_r(), gamma(), ParamPoly(Rational(1, 3)) * cartan_wedge(), order).r;
  if (id == "b_lambda") return theorem3_boundary(e(1, 2), gamma(), var("lam") * cartan_wedge(), order).r;
  if (id == "b0") {
    auto [h, e_] = pair_b0();
    return theorem4_universal(h, e_, order);
  }
  if (id == "b1") {
    auto [h, e_] = pair_b1();
    return theorem4_universal(h, e_, order).rescaled(kB1Rescale);
  }
  return exp_quantize(entry.classical_r, order);
}

/// R(q_{−1−λ,2λ,1−λ}) from the orbit of r_λ under x = e13.
inline BoundaryResult q_subfamily_boundary(int order = kDefaultOrder) {
  using namespace gens;
  return theorem3_boundary(e(1, 3), gamma(), var("lam") * cartan_wedge(), order);
}

inline OperatorMatrix substitute(const OperatorMatrix& m, const std::map<std::string, ParamPoly>& values) {
  OperatorMatrix out = m.map([&](const ScalarSeries& s) { return s.substitute(values); });
  out.set_params(detail::sorted_variables(out));
  return out;
}

/// Matrix the identity checks run on: the literal form if displayed,
/// otherwise the construction.
inline OperatorMatrix subject_matrix(const CatalogEntry& entry, int order) {
  return entry.has_literal ? build_literal(entry.id, order) : build_constructive(entry.id, order);
}

/// Rejects names outside the entry's declared parameter set.
inline void check_parameters(const CatalogEntry& entry, const std::map<std::string, Rational>& values) {
  for (const auto& [name, v] : values)
    if (std::find(entry.params.begin(), entry.params.end(), name) == entry.params.end())
      throw Error(ErrorCode::BadParameter, "\"" + name + "\" is not a parameter of " + entry.id);
}

/// All identity checks for one entry, against a supplied subject matrix
/// (already specialized at `values`, if any).
inline VerificationReport verify_matrix(const CatalogEntry& entry, const OperatorMatrix& subject, int order,
                                        const std::map<std::string, Rational>& values = {}) {
  using namespace gens;
  check_parameters(entry, values);
  VerificationReport report{entry.id, order, {}};
  const WedgeElement classical = values.empty() ? entry.classical_r : entry.classical_r.specialize(values);

  if (entry.has_literal) {
    OperatorMatrix built = build_constructive(entry.id, order);
    if (!values.empty()) built = built.specialize(values);
    Check c = zero_check("literal = constructive", subject - built);
    c.detail = c.passed() ? entry.recipe : "literal and recipe differ";
    report.add(c);
  }

  if (entry.kind == Kind::Qybe) {
    report.add(is_qybe(subject));
  } else {
    MqybeResult m = mqybe_lambda(subject);
    report.add(mqybe_check(subject));
    if (m.lambda) {
      ScalarSeries mu = hecke_parameter(*m.lambda, order);
      HeckeResult h = hecke_check(subject, mu, order);
      h.braid.detail = "mu = sqrt(lambda) = " + mu.to_string();
      report.add(h.braid);
      report.add(h.quadratic);
    } else {
      report.add(skipped("Hecke braid", "no lambda"));
      report.add(skipped("Hecke quadratic", "no lambda"));
    }
  }

  OperatorMatrix in_t =
      entry.deformation_variable == "t" ? subject : promote_parameter(subject, entry.deformation_variable);
  report.add(unitarity_check(in_t, order));
  Check cl = matches_classical(in_t, classical);
  if (entry.deformation_variable != "t") cl.detail += (cl.detail.empty() ? "" : "; ") + std::string("limit taken in ") +
                                                      entry.deformation_variable;
  report.add(cl);

  OperatorMatrix cybe = cybe_defect(classical);
  if (entry.kind == Kind::Qybe) {
    report.add(zero_check("CYBE", cybe));
  } else {
    Check c{"CYBE", CheckStatus::Pass, std::nullopt, "nonzero, sl(3)-invariant", exactness_label(kExactOrder)};
    if (cybe.is_zero()) {
      c.status = CheckStatus::Fail;
      c.witness = Witness{1, 1, 0, ParamPoly()};
      c.detail = "defect vanishes";
    } else if (!is_sl_invariant(cybe)) {
      c.status = CheckStatus::Fail;
      c.witness = cybe.first_nonzero();
      c.detail = "defect is not sl(3)-invariant";
    }
    report.add(c);
  }

  if (entry.carrier_dim > 0) {
    std::map<std::string, Rational> point = values;
    point.insert(default_specialization().begin(), default_specialization().end());
    CarrierInfo info = carrier(classical.specialize(point));
    bool ok = info.dimension() == entry.carrier_dim && info.dimension() % 2 == 0 && info.is_subalgebra &&
              info.nondegenerate;
    Check c{"carrier", ok ? CheckStatus::Pass : CheckStatus::Fail, std::nullopt,
            "dim " + std::to_string(info.dimension()) + (info.is_subalgebra ? ", subalgebra" : ", not closed") +
                (info.nondegenerate ? ", nondegenerate" : ", degenerate"),
            exactness_label(kExactOrder)};
    if (!ok) c.witness = Witness{info.dimension(), entry.carrier_dim, 0, ParamPoly()};
    report.add(c);
  }

  if (!values.empty()) return report;
  if (entry.id == "q_abc") {
    BoundaryResult b = q_subfamily_boundary(order);
    ParamPoly lam = var("lam");
    OperatorMatrix special =
        substitute(subject, {{"a", ParamPoly(-1) - lam}, {"b", ParamPoly(2) * lam}, {"c", ParamPoly(1) - lam}});
    Check c = zero_check("boundary sub-family", b.r - special);
    c.detail = c.passed() ? "x = e13 on (gamma, lam h^h), d = " + std::to_string(b.degree) : c.detail;
    report.add(c);
  }
  if (entry.id == "h" || entry.id == "h1") {
    WedgeElement family = entry.id == "h" ? r_lambda(var("lam")) : r_b_lambda();
    WedgeElement limit = scaled_wedge_limit(family, "lam", 1);
    Check c = zero_check("scaled limit", tensor_form(limit).matrix() - tensor_form(entry.classical_r).matrix());
    c.detail = c.passed() ? "lim (1/lam) family = " + limit.to_string() : c.detail;
    report.add(c);
  }
  return report;
}

inline VerificationReport verify_entry(const std::string& id, int order = kDefaultOrder,
                                       const std::map<std::string, Rational>& values = {}) {
  const CatalogEntry& entry = find_entry(id);
  check_parameters(entry, values);
  OperatorMatrix subject = subject_matrix(entry, order);
  return verify_matrix(entry, values.empty() ? subject : subject.specialize(values), order, values);
}

}  // namespace ybe
