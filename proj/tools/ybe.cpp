#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ybe/ybe.hpp"

#ifndef YBE_GOLDEN_DIR
#define YBE_GOLDEN_DIR "golden"
#endif

namespace fs = std::filesystem;
using namespace ybe;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Config {
  int order = kDefaultOrder;
  std::vector<std::string> params;
  std::string format = "pretty";
  std::string out;
};

std::map<std::string, Rational> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, Rational> values;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::BadParameter, "expected NAME=RATIONAL, got " + item);
    values[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return values;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParameter, "cannot write " + cfg.out);
  out << text;
}

std::string render_matrix(const OperatorMatrix& m, const std::string& format) {
  if (format == "json") return canonical_matrix_text(m);
  if (format == "csv") return render_csv(m);
  if (format == "latex") return render_latex(m);
  return render_pretty(m);
}

std::string render_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
  }
  if (format == "csv") return report_csv(reports);
  std::string out;
  for (const auto& r : reports) out += report_table(r);
  return out;
}

int exit_for(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return kExitFail;
  return kExitPass;
}

std::string joined(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

int cmd_list(const Config& cfg) {
  const auto& entries = catalog_entries();
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& e : entries) {
      Json j;
      j["id"] = e.id;
      j["kind"] = to_string(e.kind);
      j["params"] = e.params;
      j["deformation_variable"] = e.deformation_variable;
      j["boundary_status"] = to_string(e.boundary_status);
      j["expected_unitary"] = e.expected_unitary;
      j["has_literal"] = e.has_literal;
      j["label"] = e.label;
      j["recipe"] = e.recipe;
      j["classical_r"] = e.classical_r.to_string();
      if (!e.note.empty()) j["note"] = e.note;
      arr.push_back(j);
    }
    emit(cfg, arr.dump(2) + "\n");
    return kExitPass;
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "id,kind,params,boundary_status,label,classical_r\n";
    for (const auto& e : entries)
      os << e.id << "," << to_string(e.kind) << ",\"" << joined(e.params, " ") << "\","
         << to_string(e.boundary_status) << ",\"" << e.label << "\",\"" << e.classical_r.to_string() << "\"\n";
  } else {
    for (const auto& e : entries) {
      std::string params = e.params.empty() ? "-" : joined(e.params, ",");
      if (e.deformation_variable != "t") params += " (deformation " + e.deformation_variable + ")";
      if (e.id == "h") params = "m = t";
      os << e.id << std::string(e.id.size() < 16 ? 16 - e.id.size() : 1, ' ') << to_string(e.kind) << "  "
         << to_string(e.boundary_status) << "  params: " << params << "\n    r = " << e.classical_r.to_string()
         << "\n    " << e.label << "\n";
    }
  }
  emit(cfg, os.str());
  return kExitPass;
}

int cmd_verify(const Config& cfg, std::vector<std::string> ids, const std::string& golden_dir, bool no_golden) {
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    ids.clear();
    for (const auto& e : catalog_entries()) ids.push_back(e.id);
  }
  auto values = parse_params(cfg.params);
  for (const auto& id : ids) check_parameters(find_entry(id), values);

  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& id : ids)
    jobs.push_back(std::async(std::launch::async, [&, id] {
      VerificationReport r = verify_entry(id, cfg.order, values);
      const CatalogEntry& entry = find_entry(id);
      if (entry.has_literal && !no_golden && values.empty())
        r.add(golden_check(id, (fs::path(golden_dir) / (id + ".json")).string()));
      return r;
    }));
  std::vector<VerificationReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());
  emit(cfg, render_reports(reports, cfg.format));
  return exit_for(reports);
}

OperatorMatrix entry_matrix(const std::string& id, int order, bool constructive) {
  const CatalogEntry& entry = find_entry(id);
  return (constructive || !entry.has_literal) ? build_constructive(id, order) : build_literal(id, order);
}

int cmd_show(const Config& cfg, const std::string& id, bool constructive) {
  auto values = parse_params(cfg.params);
  check_parameters(find_entry(id), values);
  OperatorMatrix m = entry_matrix(id, cfg.order, constructive);
  if (!values.empty()) m = m.specialize(values);
  emit(cfg, render_matrix(m, cfg.format));
  return kExitPass;
}

/// Identity checks on an arbitrary matrix file.
VerificationReport check_matrix(const std::string& subject, const OperatorMatrix& input, int order,
                                const std::string& deform) {
  VerificationReport report{subject, order, {}};
  OperatorMatrix r = deform.empty() ? input : promote_parameter(input, deform);
  if (!r.exact()) r = r.truncated(order);

  Check q = is_qybe(r);
  MqybeResult m = q.passed() ? MqybeResult{std::nullopt, "D=0", std::nullopt} : mqybe_lambda(r);
  if (m.lambda) {
    q.status = CheckStatus::Skipped;
    q.detail = "defect nonzero; modified solution";
    q.witness.reset();
  }
  report.add(q);
  if (m.lambda) {
    report.add(mqybe_check(r));
  } else if (m.reason == "D=0") {
    report.add(skipped("MQYBE", "absent (D=0)"));
  } else {
    report.add(Check{"MQYBE", CheckStatus::Fail, m.witness, "absent (" + m.reason + ")", exactness_label(r.order())});
  }

  try {
    report.add(unitarity_check(r, order));
  } catch (const Error& e) {
    report.add(Check{"unitarity", CheckStatus::Fail, r.coefficient(0).first_nonzero(), e.what(), ""});
  }
  try {
    OperatorMatrix rho = classical_limit(r);
    Check skew = zero_check("classical limit skew", flipped(rho, side_of_square(r.dim())) + rho);
    if (skew.witness) skew.witness->degree = 1;
    skew.detail = !skew.passed() ? "t^1 coefficient is not flip-skew"
                  : rho.is_zero() ? "t^1 coefficient is zero"
                                  : "t^1 coefficient is flip-skew";
    report.add(skew);
  } catch (const Error& e) {
    OperatorMatrix diff = r.coefficient(0) - OperatorMatrix::identity(r.dim());
    report.add(Check{"classical limit skew", CheckStatus::Fail, diff.first_nonzero(), e.what(), ""});
  }
  return report;
}

int cmd_check_file(const Config& cfg, const std::string& path, const std::string& deform) {
  OperatorMatrix m = read_matrix_file(path);
  std::size_t n = 1;
  while (n * n < m.dim()) ++n;
  if (n * n != m.dim()) throw Error(ErrorCode::DimensionNotSquare, "dim " + std::to_string(m.dim()));
  auto values = parse_params(cfg.params);
  if (!values.empty()) m = m.specialize(values);
  std::vector<VerificationReport> reports{check_matrix(path, m, cfg.order, deform)};
  emit(cfg, render_reports(reports, cfg.format));
  return exit_for(reports);
}

/// A wedge from a JSON file, or the classical r of a catalog entry.
WedgeElement resolve_wedge(const std::string& spec) {
  if (spec.empty()) return WedgeElement(3);
  if (fs::exists(spec)) return wedge_from_json(parse_json_text(read_file(spec)));
  if (spec == "gamma") return gens::gamma();
  return find_entry(spec).classical_r;
}

struct QuantizeArgs {
  std::string method;
  std::string entry;
  std::string input;
  std::string wedge;
  std::string gamma;
  std::string beta;
  std::string x;
  std::string h;
  std::string e;
  std::string scale = "1";
  std::string rescale = "1";
  std::size_t n = 3;
};

int cmd_quantize(const Config& cfg, const QuantizeArgs& a) {
  OperatorMatrix result;
  std::string note;
  const std::string method = a.method.empty() && !a.entry.empty() ? "recipe" : a.method;
  if (method == "recipe") {
    result = build_constructive(a.entry, cfg.order);
  } else if (method == "exp") {
    result = exp_quantize(resolve_wedge(!a.wedge.empty() ? a.wedge : a.entry), cfg.order);
  } else if (method == "sandwich") {
    result = sandwich_quantize(resolve_wedge(a.beta), resolve_wedge(a.gamma), cfg.order);
  } else if (method == "theorem3") {
    if (a.x.empty()) throw Error(ErrorCode::BadParameter, "theorem3 needs --x");
    BoundaryResult b = theorem3_boundary(parse_gl(a.x, a.n), resolve_wedge(a.gamma), resolve_wedge(a.beta), cfg.order);
    std::cerr << "d = " << b.degree << "\ngamma_d = " << b.gamma_d.to_string() << "\nbeta_d = " << b.beta_d.to_string()
              << "\n";
    result = b.r;
  } else if (method == "theorem4") {
    if (a.h.empty() || a.e.empty()) throw Error(ErrorCode::BadParameter, "theorem4 needs --H and --E");
    result = theorem4_universal(parse_gl(a.h, a.n), parse_gl(a.e, a.n), cfg.order);
    Rational c = parse_rational(a.rescale);
    if (c != 1) result = result.rescaled(c);
  } else if (method == "conjugation-limit") {
    if (a.x.empty()) throw Error(ErrorCode::BadParameter, "conjugation-limit needs --x");
    OperatorMatrix q = !a.input.empty() ? read_matrix_file(a.input)
                                        : entry_matrix(a.entry.empty() ? "cremmer_gervais" : a.entry,
                                                       std::max(cfg.order, 10), false);
    result = conjugation_limit(q, parse_gl(a.x, side_of_square(q.dim())), parse_poly(a.scale));
  } else {
    throw Error(ErrorCode::BadParameter, "unknown method \"" + method + "\"");
  }
  auto values = parse_params(cfg.params);
  if (!values.empty()) result = result.specialize(values);
  emit(cfg, render_matrix(result, cfg.format));
  return kExitPass;
}

void add_common(CLI::App* sub, Config& cfg, bool with_params) {
  sub->add_option("--order", cfg.order, "truncation order of t-series")->check(CLI::Range(4, 1 << 20));
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
  sub->add_option("--out", cfg.out, "write output to a file");
  if (with_params) sub->add_option("--param", cfg.params, "NAME=RATIONAL specialization (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Yang-Baxter R-matrices and their quantizations"};
  app.require_subcommand(1);
  Config cfg;

  auto* list = app.add_subcommand("list", "list catalog entries");
  add_common(list, cfg, false);

  std::vector<std::string> ids;
  std::string golden_dir = YBE_GOLDEN_DIR;
  bool no_golden = false;
  auto* verify = app.add_subcommand("verify", "verify catalog entries (ids or \"all\")");
  verify->add_option("ids", ids, "entry ids, or all");
  verify->add_option("--golden", golden_dir, "directory of golden matrix files");
  verify->add_flag("--no-golden", no_golden, "skip the golden-file comparison");
  add_common(verify, cfg, true);

  std::string show_id;
  bool constructive = false;
  auto* show = app.add_subcommand("show", "render a catalog matrix");
  show->add_option("id", show_id, "entry id")->required();
  show->add_flag("--constructive", constructive, "run the recipe instead of the displayed matrix");
  add_common(show, cfg, true);

  std::string path, deform;
  auto* check = app.add_subcommand("check-file", "run the identity checks on a JSON matrix file");
  check->add_option("path", path, "matrix file")->required();
  check->add_option("--deformation-var", deform, "parameter to read as the deformation variable t");
  add_common(check, cfg, true);

  QuantizeArgs qa;
  auto* quantize = app.add_subcommand("quantize", "run a quantization construction");
  quantize->add_option("--method", qa.method, "construction")
      ->check(CLI::IsMember({"exp", "sandwich", "theorem3", "theorem4", "conjugation-limit"}));
  quantize->add_option("--entry", qa.entry, "catalog entry (its recipe, its classical r, or Q)");
  quantize->add_option("--input", qa.input, "matrix file for conjugation-limit");
  quantize->add_option("--wedge", qa.wedge, "wedge file or entry id for exp");
  quantize->add_option("--gamma", qa.gamma, "wedge file, entry id, or \"gamma\"");
  quantize->add_option("--beta", qa.beta, "wedge file or entry id");
  quantize->add_option("--x", qa.x, "ad-element, e.g. \"-e12 - 1/2*e23\"");
  quantize->add_option("--H", qa.h, "H of a [H,E] = E pair");
  quantize->add_option("--E", qa.e, "E of a [H,E] = E pair");
  quantize->add_option("--scale", qa.scale, "scale polynomial for conjugation-limit");
  quantize->add_option("--rescale", qa.rescale, "substitute t -> c t in the theorem4 output");
  quantize->add_option("--n", qa.n, "size of gl(n) for --x/--H/--E")->check(CLI::Range(1, 9));
  add_common(quantize, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*list) return cmd_list(cfg);
    if (*verify) return cmd_verify(cfg, ids, golden_dir, no_golden);
    if (*show) return cmd_show(cfg, show_id, constructive);
    if (*check) return cmd_check_file(cfg, path, deform);
    if (*quantize) {
      if (qa.method.empty() && qa.entry.empty()) throw Error(ErrorCode::BadParameter, "quantize needs --method or --entry");
      return cmd_quantize(cfg, qa);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
