#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ybe {

/// A power product of named parameters, e.g. a^2*m. Factors are kept sorted
/// by name with strictly positive exponents, so equal monomials compare equal.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;

  static Monomial variable(std::string name, unsigned exponent = 1) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  unsigned degree_in(std::string_view name) const {
    for (const auto& [var, e] : factors_)
      if (var == name) return e;
    return 0;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  /// Removes `name` from the product.
  Monomial without(std::string_view name) const {
    Monomial out;
    for (const auto& f : factors_)
      if (f.first != name) out.factors_.push_back(f);
    return out;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.factors_.reserve(x.factors_.size() + y.factors_.size());
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() && j != y.factors_.end()) {
      if (i->first == j->first) {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      } else if (i->first < j->first) {
        out.factors_.push_back(*i++);
      } else {
        out.factors_.push_back(*j++);
      }
    }
    out.factors_.insert(out.factors_.end(), i, x.factors_.end());
    out.factors_.insert(out.factors_.end(), j, y.factors_.end());
    return out;
  }

  /// Lexicographic order on exponent vectors, variables ordered by name.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() && j != y.factors_.end()) {
      if (i->first == j->first) {
        if (i->second != j->second) return i->second <=> j->second;
        ++i;
        ++j;
      } else {
        // The smaller name is present in one monomial only.
        return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    if (i != x.factors_.end()) return std::strong_ordering::greater;
    if (j != y.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string out;
    for (const auto& [var, e] : factors_) {
      if (!out.empty()) out += '*';
      out += var;
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<Factor> factors_;
};

/// Multivariate polynomial with exact rational coefficients. Terms are stored
/// in strictly decreasing monomial order with no zero coefficients, so two
/// polynomials are equal exactly when their term vectors are.
class ParamPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(Monomial{}, c);
  }
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static ParamPoly variable(const std::string& name, unsigned exponent = 1) {
    ParamPoly p;
    p.terms_.emplace_back(Monomial::variable(name, exponent), Rational(1));
    return p;
  }

  static ParamPoly from_terms(std::vector<Term> terms) {
    ParamPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  /// Value of a parameter-free polynomial; only meaningful when is_constant().
  Rational constant_value() const { return terms_.empty() ? Rational(0) : terms_[0].second; }

  /// Coefficient of the monomial 1.
  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return 0;
  }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
      for (const auto& f : m.factors()) out.insert(f.first);
    return out;
  }

  unsigned degree_in(std::string_view name) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(name));
    return d;
  }

  /// Coefficient of name^k, as a polynomial in the remaining parameters.
  ParamPoly coefficient_of(std::string_view name, unsigned k) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_)
      if (m.degree_in(name) == k) out.emplace_back(m.without(name), c);
    return from_terms(std::move(out));
  }

  /// Replaces each listed parameter by a polynomial; others are left alone.
  ParamPoly substitute(const std::map<std::string, ParamPoly>& values) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
      ParamPoly term(c);
      Monomial rest;
      for (const auto& [var, e] : m.factors()) {
        auto it = values.find(var);
        if (it == values.end()) {
          rest = rest * Monomial::variable(var, e);
        } else {
          for (unsigned k = 0; k < e; ++k) term = term * it->second;
        }
      }
      ParamPoly restp;
      restp.terms_.emplace_back(std::move(rest), Rational(1));
      out += term * restp;
    }
    return out;
  }

  ParamPoly specialize(const std::map<std::string, Rational>& values) const {
    std::map<std::string, ParamPoly> polys;
    for (const auto& [k, v] : values) polys.emplace(k, ParamPoly(v));
    return substitute(polys);
  }

  ParamPoly operator-() const {
    ParamPoly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  ParamPoly& operator+=(const ParamPoly& other) {
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) return *this = other;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() && j != other.terms_.end()) {
      auto cmp = i->first <=> j->first;
      if (cmp == 0) {
        Rational sum = i->second + j->second;
        if (sum != 0) merged.emplace_back(i->first, std::move(sum));
        ++i;
        ++j;
      } else if (cmp > 0) {
        merged.push_back(*i++);
      } else {
        merged.push_back(*j++);
      }
    }
    merged.insert(merged.end(), i, terms_.end());
    merged.insert(merged.end(), j, other.terms_.end());
    terms_ = std::move(merged);
    return *this;
  }

  ParamPoly& operator-=(const ParamPoly& other) { return *this += -other; }

  ParamPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
  friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
  friend ParamPoly operator*(ParamPoly x, const Rational& c) { return x *= c; }
  friend ParamPoly operator*(const Rational& c, ParamPoly x) { return x *= c; }
  friend ParamPoly operator*(int c, ParamPoly x) { return x *= Rational(c); }
  friend ParamPoly operator*(ParamPoly x, int c) { return x *= Rational(c); }

  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    if (x.terms_.empty() || y.terms_.empty()) return {};
    if (x.is_constant()) return y * x.terms_[0].second;
    if (y.is_constant()) return x * y.terms_[0].second;
    std::vector<Term> out;
    out.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) out.emplace_back(mx * my, cx * cy);
    return from_terms(std::move(out));
  }

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string piece;
      Rational mag = abs(c);
      if (m.is_one()) {
        piece = ybe::to_string(mag);
      } else if (mag == 1) {
        piece = m.to_string();
      } else {
        piece = ybe::to_string(mag) + "*" + m.to_string();
      }
      if (first) {
        out = (c < 0 ? "-" : "") + piece;
      } else {
        out += (c < 0 ? " - " : " + ") + piece;
      }
      first = false;
    }
    return out;
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& term : terms_) {
      if (!out.empty() && out.back().first == term.first) {
        out.back().second += term.second;
      } else {
        out.push_back(std::move(term));
      }
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

namespace detail {

// Recursive-descent parser for polynomial text: sums of products of
// rationals, identifiers and integer powers, with parentheses.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  ParamPoly parse() {
    ParamPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  ParamPoly expression() {
    ParamPoly acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ParamPoly term() {
    ParamPoly acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        ParamPoly divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / divisor.constant_value();
      } else {
        return acc;
      }
    }
  }

  ParamPoly unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ParamPoly power() {
    ParamPoly base = primary();
    skip_space();
    if (accept('^')) {
      skip_space();
      std::string digits = take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
      if (digits.empty()) fail("expected an integer exponent");
      unsigned long e = std::stoul(digits);
      ParamPoly out(1);
      for (unsigned long k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  ParamPoly primary() {
    skip_space();
    if (accept('(')) {
      ParamPoly inner = expression();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::string digits = take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
      return ParamPoly(Rational(Integer(digits)));
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      std::string name = take_while(
          [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_'; });
      return ParamPoly::variable(name);
    }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of input");
  }

  template <typename Pred>
  std::string take_while(Pred pred) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool accept(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the canonical rendering ("2*a^2*m - 1/3*b + 5") and anything
/// built from the same operators with parentheses.
inline ParamPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace ybe
