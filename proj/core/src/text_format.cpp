// Textual polynomial format shared by reports and fixtures:
//   poly   := ["-"] term { ("+" | "-") term }
//   term   := factor { "*" factor }
//   factor := integer ["/" integer] | name ["^" integer]
// Whitespace is insignificant. str() emits terms in canonical order with
// " + " / " - " separators and omits unit coefficients.

#include <cctype>

#include "macrocheck/errors.hpp"
#include "macrocheck/polynomial.hpp"

namespace macrocheck {

namespace {

std::string monomial_text(const VarSet& vars, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

class Parser {
 public:
  Parser(VarSet vars, std::string_view text) : vars_(std::move(vars)), text_(text) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = take() == '-';
    }
    terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char sign = take();
      if (sign != '+' && sign != '-') fail("expected '+' or '-'");
      terms.push_back(term(sign == '-'));
    }
    return Polynomial::normalize(vars_, std::move(terms));
  }

 private:
  Term term(bool negative) {
    Monomial m(vars_.size());
    Rational coefficient(negative ? -1 : 1);
    factor(m, coefficient);
    while (true) {
      skip_space();
      if (peek() != '*') break;
      take();
      factor(m, coefficient);
    }
    return {std::move(m), std::move(coefficient)};
  }

  void factor(Monomial& m, Rational& coefficient) {
    skip_space();
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string number = digits();
      skip_space();
      if (peek() == '/') {
        take();
        skip_space();
        number += '/' + digits();
      }
      coefficient *= Rational::parse(number);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::string name = identifier();
      const auto idx = vars_.index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      std::uint32_t exponent = 1;
      skip_space();
      if (peek() == '^') {
        take();
        skip_space();
        const std::string e = digits();
        if (e.size() > 9) fail("exponent too large");
        exponent = static_cast<std::uint32_t>(std::stoul(e));
      }
      m[*idx] += exponent;
      return;
    }
    fail("expected a number or a variable");
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += take();
    if (out.empty()) fail("expected digits");
    return out;
  }

  std::string identifier() {
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') out += take();
    return out;
  }

  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("polynomial text, offset " + std::to_string(pos_) + ": " + what);
  }

  VarSet vars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = c.abs();
    const std::string vars_text = monomial_text(vars_, m);
    if (vars_text.empty()) {
      out += magnitude.str();
    } else if (magnitude == Rational(1)) {
      out += vars_text;
    } else {
      out += magnitude.str() + '*' + vars_text;
    }
  }
  return out;
}

Polynomial Polynomial::parse(VarSet vars, std::string_view text) {
  return Parser(std::move(vars), text).run();
}

}  // namespace macrocheck
