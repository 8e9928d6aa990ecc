#include "macrocheck/corpus.hpp"

#include <string>

#include "macrocheck/errors.hpp"

namespace macrocheck::corpus {

namespace {

std::string indexed(const char* stem, int i) { return stem + std::to_string(i); }

void require_index(int i) {
  if (i < 1 || i > 3) throw PreconditionError("index must be 1, 2 or 3");
}

// Cyclic successors: for i, the other two indices in increasing order.
std::pair<int, int> others(int i) {
  switch (i) {
    case 1: return {2, 3};
    case 2: return {1, 3};
    default: return {1, 2};
  }
}

struct Ab {
  Polynomial a[4];
  Polynomial b[4];
  Ab()
      : a{Polynomial(ab_alphabet()), Polynomial::variable(ab_alphabet(), "a1"),
          Polynomial::variable(ab_alphabet(), "a2"), Polynomial::variable(ab_alphabet(), "a3")},
        b{Polynomial(ab_alphabet()), Polynomial::variable(ab_alphabet(), "b1"),
          Polynomial::variable(ab_alphabet(), "b2"), Polynomial::variable(ab_alphabet(), "b3")} {}
};

Polynomial sq(const Polynomial& p) { return p * p; }

Polynomial dot(const Ab& v) { return v.a[1] * v.b[1] + v.a[2] * v.b[2] + v.a[3] * v.b[3]; }

Polynomial norm_b(const Ab& v) { return sq(v.b[1]) + sq(v.b[2]) + sq(v.b[3]); }

Polynomial intertwined_lhs(const Ab& v) {
  return (sq(v.a[1]) + sq(v.b[2]) + sq(v.b[3])) * (sq(v.a[2]) + sq(v.b[3]) + sq(v.b[1])) *
         (sq(v.a[3]) + sq(v.b[1]) + sq(v.b[2]));
}

Polynomial macro_var(const char* stem, int i) {
  return Polynomial::variable(macro_alphabet(), indexed(stem, i));
}

}  // namespace

const VarSet& ab_alphabet() {
  static const VarSet vars{"a1", "a2", "a3", "b1", "b2", "b3"};
  return vars;
}

const VarSet& kb_alphabet() {
  static const VarSet vars{"k1", "k2", "k3", "b1", "b2", "b3"};
  return vars;
}

const VarSet& kb_parametric_alphabet() {
  static const VarSet vars{"k1", "k2", "k3", "b1", "b2", "b3", "Cc"};
  return vars;
}

const VarSet& macro_alphabet() {
  static const VarSet vars{"p1", "p2", "p3", "z1", "z2", "z3"};
  return vars;
}

Polynomial cross_term(int i) {
  require_index(i);
  const Ab v;
  // cross(i) = a_j b_k - a_k b_j with (i, j, k) cyclic.
  const int j = i % 3 + 1;
  const int k = j % 3 + 1;
  return v.a[j] * v.b[k] - v.a[k] * v.b[j];
}

Polynomial build_half_bracket() {
  const Ab v;
  Polynomial bracket(ab_alphabet());
  for (int i = 1; i <= 3; ++i) bracket += sq(v.b[i]) * sq(cross_term(i));
  return bracket * Rational(1, 2);
}

Inequality build_inequality() {
  const Ab v;
  Polynomial lhs = intertwined_lhs(v);
  Polynomial rhs = sq(dot(v)) * norm_b(v) + build_half_bracket();
  Polynomial diff = lhs - rhs;
  return {std::move(lhs), std::move(rhs), std::move(diff)};
}

LagrangeForms build_lagrange_and_cs() {
  const Ab v;
  const Polynomial norm_a = sq(v.a[1]) + sq(v.a[2]) + sq(v.a[3]);
  Polynomial lhs = norm_a * norm_b(v);
  Polynomial rhs = sq(dot(v));
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) rhs += sq(v.a[i] * v.b[j] - v.a[j] * v.b[i]);
  }
  Polynomial cs = lhs - sq(dot(v));
  return {std::move(lhs), std::move(rhs), std::move(cs)};
}

Polynomial macro_x(int i) {
  require_index(i);
  const auto [j, k] = others(i);
  return Polynomial::monomial(ab_alphabet(), Rational(1),
                              {{indexed("a", j), 1}, {indexed("a", k), 1}});
}

Polynomial macro_y(int i) {
  require_index(i);
  const auto [j, k] = others(i);
  return Polynomial::monomial(ab_alphabet(), Rational(1),
                              {{indexed("b", j), 1}, {indexed("b", k), 1}});
}

Substitution build_macro_substitution() {
  std::map<std::string, Polynomial, std::less<>> images;
  for (int i = 1; i <= 3; ++i) {
    const Polynomial x = macro_x(i);
    const Polynomial y = macro_y(i);
    images.emplace(indexed("p", i), (x - y) * y);
    images.emplace(indexed("z", i), y * y);
  }
  return Substitution(macro_alphabet(), ab_alphabet(), images);
}

Polynomial macro_c(int i) {
  require_index(i);
  const auto [j, k] = others(i);
  const Polynomial pj = macro_var("p", j);
  const Polynomial pk = macro_var("p", k);
  return pj * pj + pj * pk + pk * pk;
}

Polynomial build_d() {
  Polynomial d = macro_var("p", 1) * macro_var("p", 2) * macro_var("p", 3);
  for (int i = 1; i <= 3; ++i) d += macro_c(i) * macro_var("z", i);
  return d;
}

Polynomial build_constraint() {
  Polynomial out = Polynomial::constant(macro_alphabet(), Rational(1));
  for (int i = 1; i <= 3; ++i) out *= macro_var("p", i) + macro_var("z", i);
  return out;
}

Polynomial build_k_form(bool parametric) {
  const VarSet& vars = parametric ? kb_parametric_alphabet() : kb_alphabet();
  auto var = [&](const char* stem, int i) { return Polynomial::variable(vars, indexed(stem, i)); };
  const Polynomial k[4] = {Polynomial(vars), var("k", 1), var("k", 2), var("k", 3)};
  const Polynomial b[4] = {Polynomial(vars), var("b", 1), var("b", 2), var("b", 3)};

  const Polynomial lhs = (sq(k[1]) * sq(b[1]) + sq(b[2]) + sq(b[3])) *
                         (sq(k[2]) * sq(b[2]) + sq(b[3]) + sq(b[1])) *
                         (sq(k[3]) * sq(b[3]) + sq(b[1]) + sq(b[2]));
  const Polynomial weighted = k[1] * sq(b[1]) + k[2] * sq(b[2]) + k[3] * sq(b[3]);
  const Polynomial spread = sq(k[1] - k[2]) + sq(k[2] - k[3]) + sq(k[1] - k[3]);
  const Polynomial constant = parametric ? Polynomial::variable(vars, "Cc")
                                         : Polynomial::constant(vars, Rational(1, 2));
  const Polynomial rhs = sq(weighted) * (sq(b[1]) + sq(b[2]) + sq(b[3])) +
                         constant * sq(b[1]) * sq(b[2]) * sq(b[3]) * spread;
  return lhs - rhs;
}

Substitution build_k_substitution() {
  std::map<std::string, Polynomial, std::less<>> images;
  for (int i = 1; i <= 3; ++i) {
    const Polynomial bi = Polynomial::variable(kb_alphabet(), indexed("b", i));
    images.emplace(indexed("a", i), Polynomial::variable(kb_alphabet(), indexed("k", i)) * bi);
    images.emplace(indexed("b", i), bi);
  }
  return Substitution(ab_alphabet(), kb_alphabet(), images);
}

Polynomial build_weak_difference() {
  const Ab v;
  return intertwined_lhs(v) - sq(dot(v)) * norm_b(v);
}

}  // namespace macrocheck::corpus
