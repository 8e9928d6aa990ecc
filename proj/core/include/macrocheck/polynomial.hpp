#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macrocheck/rational.hpp"
#include "macrocheck/varset.hpp"

namespace macrocheck {

/// Exponent vector, one entry per variable of the owning VarSet.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  std::size_t size() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }

  std::uint64_t total_degree() const;
  bool is_constant() const { return total_degree() == 0; }

  /// Exponent-wise sum. Sizes must agree.
  Monomial operator*(const Monomial& rhs) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded lexicographic order, largest first. Within a total degree the
/// variable listed first in the VarSet dominates.
struct GrlexDescending {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

using Term = std::pair<Monomial, Rational>;
using Point = std::map<std::string, Rational, std::less<>>;

/// Sparse multivariate polynomial over the rationals in canonical form: no
/// stored coefficient is zero and terms are kept in GrlexDescending order,
/// so equality is term-map equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  explicit Polynomial(VarSet vars);

  /// Merges like monomials and drops zero coefficients. Throws
  /// StructuralError when an exponent vector does not match `vars`.
  static Polynomial normalize(VarSet vars, std::vector<Term> raw);
  static Polynomial constant(VarSet vars, const Rational& value);
  /// Throws StructuralError when `name` is not in `vars`.
  static Polynomial variable(VarSet vars, std::string_view name);
  /// Monomial given as (name, exponent) pairs.
  static Polynomial monomial(VarSet vars, const Rational& coefficient,
                             std::initializer_list<std::pair<std::string_view, std::uint32_t>> powers);

  /// Reads the textual format produced by str(). Variables must belong to
  /// `vars`. Throws StructuralError.
  static Polynomial parse(VarSet vars, std::string_view text);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of `m`, zero when absent.
  Rational coefficient(const Monomial& m) const;

  /// Throws DegenerateInputError on the zero polynomial.
  std::uint64_t total_degree() const;
  /// Degree k when every term has total degree k, nullopt otherwise.
  /// Throws DegenerateInputError on the zero polynomial.
  std::optional<std::uint64_t> homogeneous_degree() const;
  /// Largest exponent of `name` among the terms (0 for the zero polynomial).
  std::uint32_t degree_in(std::string_view name) const;

  /// Coefficients of the expansion in powers of `name`: result[j] is the
  /// polynomial multiplying name^j. Each entry lives over the same VarSet and
  /// does not contain `name`.
  std::vector<Polynomial> coefficients_in(std::string_view name) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }

  Polynomial pow(unsigned exponent) const;

  /// Rewrites this polynomial over `superset`, which must contain every
  /// variable of vars(). Throws StructuralError otherwise.
  Polynomial embed(const VarSet& superset) const;

  /// Exact value at `point`, which must assign every variable of vars()
  /// (extra names are ignored). Throws StructuralError.
  Rational evaluate(const Point& point) const;
  /// Same, with values aligned to vars() order.
  Rational evaluate(std::span<const Rational> values) const;

  /// Canonical text, e.g. "3*a1^2*b2^2 - 1/2*b3^4"; "0" for the zero polynomial.
  std::string str() const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

 private:
  void require_same_vars(const Polynomial& rhs, const char* op) const;
  void add_term(const Monomial& m, const Rational& c);

  VarSet vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace macrocheck
