#include "macrocheck/polynomial.hpp"

#include <gtest/gtest.h>

#include "macrocheck/errors.hpp"

namespace macrocheck {
namespace {

const VarSet kXY{"x", "y"};

Polynomial X() { return Polynomial::variable(kXY, "x"); }
Polynomial Y() { return Polynomial::variable(kXY, "y"); }
Polynomial C(long n, long d = 1) { return Polynomial::constant(kXY, Rational(n, d)); }

Monomial mono(std::uint32_t ex, std::uint32_t ey) { return Monomial({ex, ey}); }

TEST(VarSet, RejectsDuplicatesAndBadNames) {
  EXPECT_THROW(VarSet({"x", "x"}), StructuralError);
  EXPECT_THROW(VarSet({"1x"}), StructuralError);
  EXPECT_THROW(VarSet({""}), StructuralError);
  const VarSet v{"b", "a"};
  EXPECT_EQ(v.index_of("b"), 0U);
  EXPECT_EQ(v.index_of("a"), 1U);
  EXPECT_FALSE(v.index_of("c"));
  EXPECT_FALSE(v == VarSet({"a", "b"}));
  EXPECT_TRUE(v == VarSet({"b", "a"}));
}

TEST(Normalize, CancellationGivesZero) {
  const auto p = Polynomial::normalize(kXY, {{mono(2, 0), Rational(1)}, {mono(2, 0), Rational(-1)}});
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.str(), "0");
}

TEST(Normalize, MergesLikeMonomials) {
  const auto p = Polynomial::normalize(kXY, {{mono(1, 0), Rational(2)}, {mono(1, 0), Rational(3)}});
  EXPECT_EQ(p, Rational(5) * X());
  EXPECT_EQ(p.term_count(), 1U);
}

TEST(Normalize, DropsExplicitZeroTerm) {
  const auto p = Polynomial::normalize(kXY, {{mono(1, 1), Rational(1, 2)}, {mono(0, 0), Rational(0)}});
  EXPECT_EQ(p.term_count(), 1U);
  EXPECT_EQ(p.str(), "1/2*x*y");
}

TEST(Normalize, RejectsWrongExponentLength) {
  EXPECT_THROW(Polynomial::normalize(kXY, {{Monomial({1, 0, 0}), Rational(1)}}), StructuralError);
}

TEST(Arith, DifferenceOfSquares) { EXPECT_EQ((X() + Y()) * (X() - Y()), X() * X() - Y() * Y()); }

TEST(Arith, Binomial) {
  const Polynomial one = C(1);
  EXPECT_EQ((X() + one).pow(2), X() * X() + C(2) * X() + one);
  EXPECT_EQ((X() + one).pow(0), one);
  EXPECT_EQ(Polynomial(kXY).pow(0), one);
}

TEST(Arith, DotProductSquareHasSixTerms) {
  const VarSet ab{"a1", "a2", "a3", "b1", "b2", "b3"};
  auto v = [&](const char* n) { return Polynomial::variable(ab, n); };
  const Polynomial dot = v("a1") * v("b1") + v("a2") * v("b2") + v("a3") * v("b3");
  const Polynomial sq = dot * dot;
  EXPECT_EQ(sq.term_count(), 6U);
  EXPECT_EQ(sq.coefficient(Monomial({1, 1, 0, 1, 1, 0})), Rational(2));
  EXPECT_EQ(sq.coefficient(Monomial({2, 0, 0, 2, 0, 0})), Rational(1));
}

TEST(Arith, DifferentVarSetsFailLoudly) {
  const VarSet other{"x", "z"};
  const Polynomial z = Polynomial::variable(other, "x");
  EXPECT_THROW(X() + z, StructuralError);
  EXPECT_THROW(X() - z, StructuralError);
  EXPECT_THROW(X() * z, StructuralError);
  // Same names in another order are a different VarSet.
  EXPECT_THROW(X() + Polynomial::variable(VarSet({"y", "x"}), "x"), StructuralError);
}

TEST(Arith, ScalarMultiplicationByZeroClears) {
  auto p = X() + Y();
  p *= Rational(0);
  EXPECT_TRUE(p.is_zero());
}

TEST(Evaluate, SumOfSquares) {
  EXPECT_EQ((X() * X() + Y() * Y()).evaluate(Point{{"x", Rational(3)}, {"y", Rational(4)}}), Rational(25));
}

TEST(Evaluate, ZeroPolynomial) {
  EXPECT_EQ(Polynomial(kXY).evaluate(Point{{"x", Rational(9)}, {"y", Rational(-1, 7)}}), Rational(0));
}

TEST(Evaluate, MissingAssignmentIsStructuralError) {
  EXPECT_THROW(X().evaluate(Point{{"x", Rational(1)}}), StructuralError);
  const std::vector<Rational> one_value = {Rational(1)};
  EXPECT_THROW(X().evaluate(one_value), StructuralError);
}

TEST(Degree, Homogeneous) {
  EXPECT_EQ((X() * X() * Y() + Y() * Y() * Y()).homogeneous_degree(), 3U);
  EXPECT_FALSE((X() + C(1)).homogeneous_degree().has_value());
  EXPECT_THROW(Polynomial(kXY).homogeneous_degree(), DegenerateInputError);
  EXPECT_THROW(Polynomial(kXY).total_degree(), DegenerateInputError);
  EXPECT_EQ((X() * Y() + C(1)).total_degree(), 2U);
}

TEST(Degree, CoefficientsInOneVariable) {
  // x^2 y + 3 x y - y + 5 = (y) x^2 + (3y) x + (5 - y)
  const Polynomial p = X() * X() * Y() + C(3) * X() * Y() - Y() + C(5);
  const auto coeffs = p.coefficients_in("x");
  ASSERT_EQ(coeffs.size(), 3U);
  EXPECT_EQ(coeffs[2], Y());
  EXPECT_EQ(coeffs[1], C(3) * Y());
  EXPECT_EQ(coeffs[0], C(5) - Y());
  EXPECT_EQ(p.degree_in("y"), 1U);
  EXPECT_THROW(p.coefficients_in("q"), StructuralError);
}

TEST(Embed, ExtendsToSuperset) {
  const VarSet big{"y", "w", "x"};
  const Polynomial p = X() * X() - Rational(2) * Y();
  const Polynomial e = p.embed(big);
  EXPECT_EQ(e.vars(), big);
  EXPECT_EQ(e, Polynomial::variable(big, "x").pow(2) - Rational(2) * Polynomial::variable(big, "y"));
  EXPECT_THROW(p.embed(VarSet({"x"})), StructuralError);
}

TEST(TextFormat, CanonicalGrlexOrder) {
  const VarSet ab{"a1", "b2", "b3"};
  const Polynomial p = Polynomial::parse(ab, "- 1/2*b3^4 + 3*a1^2*b2^2");
  EXPECT_EQ(p.str(), "3*a1^2*b2^2 - 1/2*b3^4");
  EXPECT_EQ((X() + C(1)).pow(2).str(), "x^2 + 2*x + 1");
  EXPECT_EQ((C(-1) * X() * Y() + Y() * Y() - C(7, 3)).str(), "-x*y + y^2 - 7/3");
  EXPECT_EQ(C(-4).str(), "-4");
}

TEST(TextFormat, ParsesItsOwnOutput) {
  const Polynomial p = (X() - Rational(3, 4) * Y()).pow(3) + C(-2);
  EXPECT_EQ(Polynomial::parse(kXY, p.str()), p);
  EXPECT_EQ(Polynomial::parse(kXY, "0"), Polynomial(kXY));
  EXPECT_EQ(Polynomial::parse(kXY, "2*x*3*x"), C(6) * X() * X());
  EXPECT_EQ(Polynomial::parse(kXY, "x^2*x"), X().pow(3));
}

TEST(TextFormat, RejectsMalformedText) {
  for (const char* bad : {"", "x +", "x ** 2", "q", "x^", "2/0*x", "x y", "1/"}) {
    EXPECT_THROW(Polynomial::parse(kXY, bad), StructuralError) << bad;
  }
}

}  // namespace
}  // namespace macrocheck
