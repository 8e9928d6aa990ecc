// Ring axioms, canonicity and text round-trips on seeded random polynomials.

#include <gtest/gtest.h>

#include "macrocheck/polynomial.hpp"
#include "test_support.hpp"

namespace macrocheck {
namespace {

using testing::random_polynomial;
using testing::small_vars;

constexpr int kTriples = 1000;

bool canonical(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c.is_zero() || m.size() != p.vars().size()) return false;
  }
  return true;
}

class RingAxioms : public ::testing::Test {
 protected:
  template <typename Check>
  void for_triples(std::uint64_t seed, Check check) {
    for (int n = 0; n < kTriples; ++n) {
      auto rng = SplitMix64::for_sample(seed, static_cast<std::uint64_t>(n));
      const VarSet vars = small_vars(1 + rng.below(4));
      const Polynomial p = random_polynomial(rng, vars);
      const Polynomial q = random_polynomial(rng, vars);
      const Polynomial r = random_polynomial(rng, vars);
      check(p, q, r);
      if (HasFailure()) {
        ADD_FAILURE() << "triple " << n << ": p=" << p << " q=" << q << " r=" << r;
        return;
      }
    }
  }
};

TEST_F(RingAxioms, AdditionCommutesAndAssociates) {
  for_triples(101, [](const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p + q) + r, p + (q + r));
  });
}

TEST_F(RingAxioms, MultiplicationCommutesAndAssociates) {
  for_triples(202, [](const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
  });
}

TEST_F(RingAxioms, MultiplicationDistributes) {
  for_triples(303, [](const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ((p + q) * r, p * r + q * r);
  });
}

TEST_F(RingAxioms, AdditiveInverseAndIdentities) {
  for_triples(404, [](const Polynomial& p, const Polynomial& q, const Polynomial&) {
    EXPECT_TRUE((p + (-p)).is_zero());
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p * Polynomial::constant(p.vars(), Rational(1)), p);
    EXPECT_EQ(p + Polynomial(p.vars()), p);
    EXPECT_EQ(p - q, p + (-q));
  });
}

TEST_F(RingAxioms, OutputsStayCanonical) {
  for_triples(505, [](const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    EXPECT_TRUE(canonical(p + q));
    EXPECT_TRUE(canonical(p - q));
    EXPECT_TRUE(canonical(p * q + r));
    EXPECT_TRUE(canonical(q.pow(2)));
  });
}

TEST(Canonicity, NormalizeIsIdempotent) {
  for (std::uint64_t n = 0; n < 500; ++n) {
    auto rng = SplitMix64::for_sample(606, n);
    const VarSet vars = small_vars(1 + rng.below(4));
    // Raw list with deliberate duplicates and zeros.
    std::vector<Term> raw;
    const Polynomial p = random_polynomial(rng, vars);
    for (const auto& t : p.terms()) {
      raw.push_back(t);
      raw.emplace_back(t.first, Rational());
      raw.emplace_back(t.first, t.second);
    }
    const Polynomial once = Polynomial::normalize(vars, raw);
    std::vector<Term> again(once.terms().begin(), once.terms().end());
    EXPECT_EQ(Polynomial::normalize(vars, again), once);
    EXPECT_EQ(once, Rational(2) * p);
  }
}

TEST(TextRoundTrip, ParseInvertsStr) {
  for (std::uint64_t n = 0; n < 500; ++n) {
    auto rng = SplitMix64::for_sample(707, n);
    const VarSet vars = small_vars(1 + rng.below(4));
    const Polynomial p = random_polynomial(rng, vars, 8);
    EXPECT_EQ(Polynomial::parse(vars, p.str()), p) << p;
  }
}

TEST(EvaluationIsARingMap, AgreesWithArithmetic) {
  for (std::uint64_t n = 0; n < 500; ++n) {
    auto rng = SplitMix64::for_sample(808, n);
    const VarSet vars = small_vars(1 + rng.below(4));
    const Polynomial p = random_polynomial(rng, vars);
    const Polynomial q = random_polynomial(rng, vars);
    const auto point = testing::random_point(rng, vars.size());
    EXPECT_EQ((p * q).evaluate(point), p.evaluate(point) * q.evaluate(point));
    EXPECT_EQ((p - q).evaluate(point), p.evaluate(point) - q.evaluate(point));
  }
}

}  // namespace
}  // namespace macrocheck
