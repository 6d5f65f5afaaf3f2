#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "errors.hpp"
#include "lie.hpp"
#include "operator_matrix.hpp"
#include "series.hpp"
#include "yang_baxter.hpp"

namespace ybe {

using Json = nlohmann::ordered_json;

// ---- series and matrices ---------------------------------------------------

inline Json series_to_json(const ScalarSeries& s) {
  Json terms = Json::array();
  for (const auto& [d, c] : s.nonzero_terms()) terms.push_back(Json::array({d, c.to_string()}));
  Json out;
  out["terms"] = terms;
  out["order"] = s.exact() ? Json(nullptr) : Json(s.order());
  out["exact"] = s.exact();
  return out;
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline int json_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) parse_fail(what + ": expected an integer");
  return j.get<int>();
}

inline std::string json_string(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  parse_fail(what + ": expected a string");
}

}  // namespace detail

/// Accepts the object form or a plain polynomial string in t.
inline ScalarSeries series_from_json(const Json& j, int matrix_order) {
  if (j.is_string() || j.is_number_integer())
    return series_in(parse_poly(detail::json_string(j, "entry")), "t").truncated(matrix_order);
  if (!j.is_object() || !j.contains("terms")) detail::parse_fail("entry: expected a series object or string");
  int order = kExactOrder;
  if (j.contains("order") && !j["order"].is_null()) order = detail::json_int(j["order"], "series order");
  if (j.contains("exact") && j["exact"].is_boolean() && j["exact"].get<bool>() && order != kExactOrder)
    detail::parse_fail("entry: exact series with a finite order");
  ScalarSeries s = ScalarSeries::zero(order);
  if (!j["terms"].is_array()) detail::parse_fail("entry: terms must be an array");
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 2) detail::parse_fail("entry: term must be [degree, polynomial]");
    int d = detail::json_int(term[0], "term degree");
    s = s + ScalarSeries::monomial(parse_poly(detail::json_string(term[1], "term coefficient")), d);
  }
  return s.truncated(std::min(order, matrix_order));
}

inline Json matrix_to_json(const OperatorMatrix& m) {
  Json out;
  out["dim"] = m.dim();
  out["params"] = m.params();
  out["series_var"] = "t";
  out["order"] = m.exact() ? Json(nullptr) : Json(m.order());
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!m(i, j).is_zero()) entries.push_back(Json::array({i + 1, j + 1, series_to_json(m(i, j))}));
  out["entries"] = entries;
  return out;
}

/// Canonical text: fixed key order, one entry per line.
inline std::string canonical_matrix_text(const OperatorMatrix& m) {
  Json j = matrix_to_json(m);
  std::ostringstream os;
  os << "{\n";
  for (const char* key : {"dim", "params", "series_var", "order"}) os << "  \"" << key << "\": " << j[key].dump() << ",\n";
  os << "  \"entries\": [";
  const auto& entries = j["entries"];
  for (std::size_t k = 0; k < entries.size(); ++k) os << (k ? ",\n    " : "\n    ") << entries[k].dump();
  os << (entries.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

inline OperatorMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) detail::parse_fail("matrix: expected an object");
  for (const char* key : {"dim", "entries"})
    if (!j.contains(key)) detail::parse_fail(std::string("matrix: missing \"") + key + "\"");
  int dim = detail::json_int(j["dim"], "dim");
  if (dim <= 0) detail::parse_fail("dim must be positive");
  if (j.contains("series_var") && j["series_var"] != "t") detail::parse_fail("series_var must be \"t\"");
  int order = kExactOrder;
  if (j.contains("order") && !j["order"].is_null()) order = detail::json_int(j["order"], "order");
  std::vector<std::string> params;
  if (j.contains("params")) {
    if (!j["params"].is_array()) detail::parse_fail("params must be an array");
    for (const auto& p : j["params"]) params.push_back(detail::json_string(p, "param"));
    std::sort(params.begin(), params.end());
  }
  OperatorMatrix m(static_cast<std::size_t>(dim), params, order);
  if (!j["entries"].is_array()) detail::parse_fail("entries must be an array");
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3) detail::parse_fail("entry must be [row, col, series]");
    int row = detail::json_int(e[0], "row"), col = detail::json_int(e[1], "col");
    if (row < 1 || col < 1 || row > dim || col > dim)
      detail::parse_fail("entry (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
    ScalarSeries s = series_from_json(e[2], order);
    for (const auto& [d, c] : s.nonzero_terms())
      for (const auto& v : c.variables())
        if (std::find(params.begin(), params.end(), v) == params.end())
          detail::parse_fail("entry (" + std::to_string(row) + "," + std::to_string(col) + ") uses undeclared \"" +
                             v + "\"");
    m.set(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1), s);
  }
  return m;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline OperatorMatrix read_matrix_file(const std::string& path) { return matrix_from_json(parse_json_text(read_file(path))); }

// ---- wedges -------------------------------------------------------------------

inline Json gl_to_json(const GlElement& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.n(); ++j) row.push_back(g(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

inline GlElement gl_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) detail::parse_fail("wedge factor must be an n x n array");
  GlElement g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) detail::parse_fail("wedge factor must be an n x n array");
    for (std::size_t k = 0; k < n; ++k) g(i, k) = parse_poly(detail::json_string(j[i][k], "wedge cell"));
  }
  return g;
}

inline Json wedge_to_json(const WedgeElement& w) {
  Json out = Json::array();
  for (const auto& t : w.terms()) {
    Json term;
    term["x"] = gl_to_json(t.x);
    term["y"] = gl_to_json(t.y);
    term["c"] = t.c.to_string();
    out.push_back(term);
  }
  return out;
}

inline WedgeElement wedge_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) detail::parse_fail("wedge: expected a non-empty array of {x, y, c}");
  if (!j[0].is_object() || !j[0].contains("x") || !j[0]["x"].is_array())
    detail::parse_fail("wedge: term needs an x matrix");
  const std::size_t n = j[0]["x"].size();
  WedgeElement w(n);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("x") || !term.contains("y")) detail::parse_fail("wedge: term needs x and y");
    ParamPoly c = term.contains("c") ? parse_poly(detail::json_string(term["c"], "c")) : ParamPoly(1);
    w += WedgeElement::wedge(gl_from_json(term["x"], n), gl_from_json(term["y"], n), c);
  }
  return w;
}

// ---- reports -----------------------------------------------------------------

inline Json witness_to_json(const Witness& w) {
  Json out;
  out["row"] = w.row;
  out["col"] = w.col;
  out["degree"] = w.degree;
  out["value"] = w.value.to_string();
  return out;
}

inline Json report_to_json(const VerificationReport& r) {
  Json out;
  out["subject"] = r.subject_id;
  out["order"] = r.order;
  out["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["status"] = to_string(c.status);
    jc["exactness"] = c.exactness;
    jc["detail"] = c.detail;
    jc["witness"] = c.witness ? witness_to_json(*c.witness) : Json(nullptr);
    checks.push_back(jc);
  }
  out["checks"] = checks;
  return out;
}

inline std::string report_table(const VerificationReport& r) {
  std::ostringstream os;
  os << "== " << r.subject_id << " (order " << r.order << "): " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    std::string status = to_string(c.status);
    os << "  " << status << std::string(9 - status.size(), ' ') << c.name;
    if (!c.exactness.empty()) os << ": " << c.exactness;
    if (!c.detail.empty()) os << "  " << c.detail;
    if (c.witness && c.status == CheckStatus::Fail) os << "  [witness " << c.witness->to_string() << "]";
    os << "\n";
  }
  return os.str();
}

inline std::string report_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "subject,check,status,exactness,witness_row,witness_col,witness_degree,detail\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      os << r.subject_id << "," << quote(c.name) << "," << to_string(c.status) << "," << quote(c.exactness) << ",";
      if (c.witness)
        os << c.witness->row << "," << c.witness->col << "," << c.witness->degree;
      else
        os << ",,";
      os << "," << quote(c.detail) << "\n";
    }
  return os.str();
}

// ---- matrix renderers ----------------------------------------------------------

inline std::string series_cell(const ScalarSeries& s) {
  if (s.is_zero() && s.exact()) return "0";
  return s.to_string();
}

inline std::string render_csv(const OperatorMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? "," : "") << '"' << series_cell(m(i, j)) << '"';
    os << "\n";
  }
  return os.str();
}

inline std::string render_pretty(const OperatorMatrix& m) {
  std::vector<std::string> cells;
  std::vector<std::size_t> width(m.dim(), 1);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      cells.push_back(series_cell(m(i, j)));
      width[j] = std::max(width[j], cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const std::string& c = cells[i * m.dim() + j];
      os << std::string(width[j] - c.size(), ' ') << c << (j + 1 < m.dim() ? "  " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

namespace detail {

inline std::string latex_name(const std::string& v) { return v == "lam" ? "\\lambda" : v; }

inline std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

/// One term c·monomial·t^d; `first` controls the leading sign.
inline std::string latex_term(const Rational& c, const Monomial& mono, int d, bool first) {
  std::string body;
  Rational mag = abs(c);
  std::vector<std::string> factors;
  for (const auto& [name, e] : mono.factors())
    factors.push_back(latex_name(name) + (e > 1 ? "^{" + std::to_string(e) + "}" : ""));
  if (d != 0) factors.push_back(d == 1 ? "t" : "t^{" + std::to_string(d) + "}");
  if (mag != 1 || factors.empty()) body = latex_rational(mag);
  for (const auto& f : factors) body += (body.empty() ? "" : "\\,") + f;
  if (c < 0) return (first ? "-" : " - ") + body;
  return first ? body : " + " + body;
}

}  // namespace detail

inline std::string latex_cell(const ScalarSeries& s) {
  if (s.is_zero() && s.exact()) return "0";
  std::string out;
  for (const auto& [d, c] : s.nonzero_terms())
    for (const auto& [mono, coef] : c.terms()) out += detail::latex_term(coef, mono, d, out.empty());
  if (!s.exact()) out += (out.empty() ? "" : " + ") + std::string("O(t^{") + std::to_string(s.order()) + "})";
  return out.empty() ? "0" : out;
}

inline std::string render_latex(const OperatorMatrix& m) {
  std::ostringstream os;
  os << "\\left(\n\\begin{array}{" << std::string(m.dim(), 'c') << "}\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " & " : "") << latex_cell(m(i, j));
    os << (i + 1 < m.dim() ? " \\\\\n" : "\n");
  }
  os << "\\end{array}\n\\right)\n";
  return os.str();
}

// ---- golden files -----------------------------------------------------------------

/// Byte comparison of the canonical serialization of the literal against a
/// golden file; on mismatch the first differing entry is the witness.
inline Check golden_check(const std::string& id, const std::string& path) {
  Check c{"golden file", CheckStatus::Pass, std::nullopt, path, ""};
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    c.status = CheckStatus::Fail;
    c.detail = e.what();
    c.witness = Witness{0, 0, 0, ParamPoly()};
    return c;
  }
  OperatorMatrix golden;
  try {
    golden = matrix_from_json(parse_json_text(text));
  } catch (const Error& e) {
    c.status = CheckStatus::Fail;
    c.detail = std::string("unreadable golden file: ") + e.what();
    c.witness = Witness{0, 0, 0, ParamPoly()};
    return c;
  }
  OperatorMatrix literal = build_literal(id, golden.exact() ? kDefaultOrder : golden.order());
  c.exactness = exactness_label(literal.order());
  if (canonical_matrix_text(literal) == text) return c;
  c.status = CheckStatus::Fail;
  if (golden.dim() != literal.dim()) {
    c.detail = "dimension differs";
    c.witness = Witness{golden.dim(), literal.dim(), 0, ParamPoly()};
    return c;
  }
  for (std::size_t i = 0; i < golden.dim() && !c.witness; ++i)
    for (std::size_t j = 0; j < golden.dim() && !c.witness; ++j)
      if (!(golden(i, j) == literal(i, j))) {
        ScalarSeries diff = golden(i, j) - literal(i, j);
        int d = diff.is_zero() ? std::min(golden(i, j).order(), literal(i, j).order()) : diff.valuation();
        c.witness = Witness{i + 1, j + 1, d, diff.coeff(d)};
      }
  if (!c.witness) c.witness = Witness{0, 0, 0, ParamPoly()};
  c.detail = "golden file differs from the displayed matrix";
  return c;
}

}  // namespace ybe
