#pragma once

#include "macrocheck/polynomial.hpp"
#include "macrocheck/substitution.hpp"

/// Exact constructors for the three-factor inequality, its Lagrange
/// identity and the macro-variable reduction.
namespace macrocheck::corpus {

/// {a1, a2, a3, b1, b2, b3}
const VarSet& ab_alphabet();
/// {k1, k2, k3, b1, b2, b3}
const VarSet& kb_alphabet();
/// {k1, k2, k3, b1, b2, b3, Cc}; Cc stands for the constant in front of the bracket.
const VarSet& kb_parametric_alphabet();
/// {p1, p2, p3, z1, z2, z3}
const VarSet& macro_alphabet();

struct Inequality {
  Polynomial lhs;
  Polynomial rhs;
  Polynomial d_tilde;  // lhs - rhs
};

/// (a1^2+b2^2+b3^2)(a2^2+b3^2+b1^2)(a3^2+b1^2+b2^2) against
/// (a.b)^2 |b|^2 + 1/2 [b1^2(a2b3-a3b2)^2 + b2^2(a3b1-a1b3)^2 + b3^2(a1b2-a2b1)^2].
Inequality build_inequality();

struct LagrangeForms {
  Polynomial lagrange_lhs;  // |a|^2 |b|^2
  Polynomial lagrange_rhs;  // (a.b)^2 + sum_{i<j} (a_i b_j - a_j b_i)^2
  Polynomial cs_diff;       // |a|^2 |b|^2 - (a.b)^2
};
LagrangeForms build_lagrange_and_cs();

/// Image of x_i = a1a2a3/a_i as a monomial over ab_alphabet() (i in 1..3).
Polynomial macro_x(int i);
/// Image of y_i = b1b2b3/b_i.
Polynomial macro_y(int i);

/// p_i -> (x_i - y_i) y_i, z_i -> y_i^2, from macro_alphabet() to ab_alphabet().
Substitution build_macro_substitution();

/// c_i as polynomials over macro_alphabet(): c1 = p2^2+p2p3+p3^2 and cyclically.
Polynomial macro_c(int i);

/// p1p2p3 + c1 z1 + c2 z2 + c3 z3.
Polynomial build_d();

/// (p1+z1)(p2+z2)(p3+z3).
Polynomial build_constraint();

/// lhs - rhs of the inequality rewritten with k_i = a_i / b_i. Over
/// kb_alphabet(), or kb_parametric_alphabet() with Cc in place of 1/2.
Polynomial build_k_form(bool parametric);

/// a_i -> k_i b_i, b_i -> b_i, from ab_alphabet() to kb_alphabet().
Substitution build_k_substitution();

/// (a1b2 - a2b1)-type cross terms: cross(1) = a2b3 - a3b2, cross(2) = a3b1 - a1b3,
/// cross(3) = a1b2 - a2b1.
Polynomial cross_term(int i);

/// lhs minus (a.b)^2 |b|^2, i.e. the inequality without the half bracket.
Polynomial build_weak_difference();

/// 1/2 [b1^2 cross(1)^2 + b2^2 cross(2)^2 + b3^2 cross(3)^2].
Polynomial build_half_bracket();

}  // namespace macrocheck::corpus
