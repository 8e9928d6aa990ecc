#include "macrocheck/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "macrocheck/errors.hpp"

namespace macrocheck {

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (size() != rhs.size()) throw StructuralError("monomial length mismatch");
  Monomial out(*this);
  for (std::size_t i = 0; i < size(); ++i) out.exponents_[i] += rhs.exponents_[i];
  return out;
}

bool GrlexDescending::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const auto dl = lhs.total_degree();
  const auto dr = rhs.total_degree();
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(rhs.exponents().begin(), rhs.exponents().end(),
                                      lhs.exponents().begin(), lhs.exponents().end());
}

Polynomial::Polynomial(VarSet vars) : vars_(std::move(vars)) {}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::normalize(VarSet vars, std::vector<Term> raw) {
  Polynomial out(std::move(vars));
  for (auto& [m, c] : raw) {
    if (m.size() != out.vars_.size()) {
      throw StructuralError("exponent vector of length " + std::to_string(m.size()) +
                            " over " + std::to_string(out.vars_.size()) + " variables");
    }
    out.add_term(m, c);
  }
  return out;
}

Polynomial Polynomial::constant(VarSet vars, const Rational& value) {
  Polynomial out(std::move(vars));
  out.add_term(Monomial(out.vars_.size()), value);
  return out;
}

Polynomial Polynomial::variable(VarSet vars, std::string_view name) {
  return monomial(std::move(vars), Rational(1), {{name, 1}});
}

Polynomial Polynomial::monomial(
    VarSet vars, const Rational& coefficient,
    std::initializer_list<std::pair<std::string_view, std::uint32_t>> powers) {
  Polynomial out(std::move(vars));
  Monomial m(out.vars_.size());
  for (const auto& [name, e] : powers) {
    const auto idx = out.vars_.index_of(name);
    if (!idx) {
      throw StructuralError("variable '" + std::string(name) + "' not in " + to_string(out.vars_));
    }
    m[*idx] += e;
  }
  out.add_term(m, coefficient);
  return out;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

std::uint64_t Polynomial::total_degree() const {
  if (is_zero()) throw DegenerateInputError("degree of the zero polynomial");
  return terms_.begin()->first.total_degree();
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree() const {
  if (is_zero()) throw DegenerateInputError("degree of the zero polynomial");
  // Grlex keeps the largest degree first and the smallest last.
  const auto top = terms_.begin()->first.total_degree();
  if (terms_.rbegin()->first.total_degree() != top) return std::nullopt;
  return top;
}

std::uint32_t Polynomial::degree_in(std::string_view name) const {
  const auto idx = vars_.index_of(name);
  if (!idx) throw StructuralError("variable '" + std::string(name) + "' not in " + to_string(vars_));
  std::uint32_t best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m[*idx]);
  return best;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::string_view name) const {
  const auto idx = vars_.index_of(name);
  if (!idx) throw StructuralError("variable '" + std::string(name) + "' not in " + to_string(vars_));
  std::vector<Polynomial> out(degree_in(name) + 1, Polynomial(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial rest(m);
    const auto e = rest[*idx];
    rest[*idx] = 0;
    out[e].add_term(rest, c);
  }
  return out;
}

void Polynomial::require_same_vars(const Polynomial& rhs, const char* op) const {
  if (!(vars_ == rhs.vars_)) {
    throw StructuralError(std::string(op) + ": variable sets differ " + to_string(vars_) +
                          " vs " + to_string(rhs.vars_));
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_vars(rhs, "add");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_vars(rhs, "sub");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_vars(rhs, "mul");
  Polynomial out(lhs.vars_);
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, cl * cr);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(vars_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::embed(const VarSet& superset) const {
  std::vector<std::size_t> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto idx = superset.index_of(vars_.name(i));
    if (!idx) {
      throw StructuralError("embed: '" + vars_.name(i) + "' missing from " + to_string(superset));
    }
    target[i] = *idx;
  }
  Polynomial out(superset);
  for (const auto& [m, c] : terms_) {
    Monomial moved(superset.size());
    for (std::size_t i = 0; i < m.size(); ++i) moved[target[i]] = m[i];
    out.terms_.emplace(std::move(moved), c);
  }
  return out;
}

Rational Polynomial::evaluate(const Point& point) const {
  std::vector<Rational> values;
  values.reserve(vars_.size());
  for (const auto& name : vars_.names()) {
    const auto it = point.find(name);
    if (it == point.end()) throw StructuralError("evaluate: no value for '" + name + "'");
    values.push_back(it->second);
  }
  return evaluate(values);
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  if (values.size() != vars_.size()) {
    throw StructuralError("evaluate: expected " + std::to_string(vars_.size()) + " values, got " +
                          std::to_string(values.size()));
  }
  // powers[i][e] = values[i]^e, filled lazily up to the largest exponent seen.
  std::vector<std::vector<Rational>> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) powers[i].push_back(Rational(1));

  Rational sum;
  Rational product;
  for (const auto& [m, c] : terms_) {
    product = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto e = m[i];
      if (e == 0) continue;
      auto& table = powers[i];
      while (table.size() <= e) table.push_back(table.back() * values[i]);
      product *= table[e];
    }
    sum += product;
  }
  return sum;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace macrocheck
