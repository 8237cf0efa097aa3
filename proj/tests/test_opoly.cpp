#include <gtest/gtest.h>

#include "gen.hpp"
#include "octo/io.hpp"

namespace octo {
namespace {

using testing::Gen;
using Q = Rational;
using P = OPolynomial<Q>;

Octonion<Q> oq(std::string_view s) { return parse_octonion<Q>(s); }
P pq(std::string_view s) { return parse_polynomial<Q>(s); }
Octonion<Q> one() { return Octonion<Q>::scalar(AlgebraParams<Q>::standard(), Q(1)); }

TEST(OPolynomial, ConstructionAndTrim) {
  P zero;
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_TRUE(zero.is_zero());
  P f(AlgebraParams<Q>::standard(), {oq("1"), oq("i"), Octonion<Q>()});
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f.coeff(5), Octonion<Q>());
  EXPECT_EQ(f.coeff(-1), Octonion<Q>());
  EXPECT_EQ(P::monomial(oq("j"), 3).degree(), 3);
  EXPECT_EQ(P::x(AlgebraParams<Q>::standard()).leading(), one());
  auto other = AlgebraParams<Q>::make(Q(-2), Q(-1), Q(-1));
  EXPECT_THROW(P(other, {oq("1")}), MathError);
  EXPECT_THROW(f + P::x(other), MathError);
}

TEST(OPolynomial, RingOperations) {
  Gen gen(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = gen.poly<Q>(gen.integer(0, 3)), g = gen.poly<Q>(gen.integer(0, 3));
    EXPECT_EQ(f + g, g + f);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ((f * g).degree(), f.degree() + g.degree());  // no zero divisors
    auto x = P::x(f.params());
    // Multiplying by the central indeterminate shifts coefficients.
    EXPECT_EQ(x * f, f * x);
    EXPECT_EQ((x * f).coeff(1), f.coeff(0));
    auto c = gen.nonzero<Q>();
    EXPECT_EQ(scale_left(c, f), P::constant(c) * f);
    EXPECT_EQ(scale_right(f, c), f * P::constant(c));
  }
}

TEST(OPolynomial, CompanionHasCentralCoefficients) {
  Gen gen(22);
  EXPECT_EQ(companion(pq("(1)x^2 + (i)x + (1 - k)")),
            CentralPoly<Q>({Q(2), Q(0), Q(3), Q(0), Q(1)}));
  for (int trial = 0; trial < 40; ++trial) {
    auto f = gen.poly<Q>(gen.integer(1, 4));
    auto c = companion(f);
    EXPECT_EQ(c.degree(), 2 * f.degree());
    EXPECT_EQ(c.leading(), norm(f.leading()));
    // Every leading/constant coefficient is a norm.
    EXPECT_EQ(c[0], norm(f.coeff(0)));
  }
  for (int trial = 0; trial < 40; ++trial) {
    auto f = gen.poly<double>(gen.integer(1, 5));
    EXPECT_NO_THROW(companion(f));
  }
  EXPECT_THROW(companion(P()), MathError);
}

TEST(OPolynomial, EvalMatchesSyntheticDivisionRemainder) {
  Gen gen(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = gen.poly<Q>(gen.integer(0, 5));
    auto lambda = gen.octonion<Q>();
    auto div = right_div_linear(f, lambda);
    EXPECT_EQ(div.remainder, eval(f, lambda));
    EXPECT_EQ(div.quotient.degree(), f.degree() - 1);
  }
  // f(lambda) = 0 for a right factor (x - lambda) in the associative case.
  auto lambda = oq("1 + 2 i - j");
  auto f = pq("(1)x^2 + (3 k)x") * (P::x(lambda.params()) - P::constant(lambda));
  EXPECT_EQ(eval(f, lambda), Octonion<Q>());
}

TEST(OPolynomial, EvalLinearExamples) {
  EXPECT_EQ(eval(pq("(i)x + (j)"), oq("k")), Octonion<Q>());
  EXPECT_EQ(eval(pq("(il)x + (jl)"), oq("-k")), Octonion<Q>());
  EXPECT_EQ(eval(pq("(-il)x + (-jl)"), oq("-k")), Octonion<Q>());
  EXPECT_NE(eval(pq("(il)x + (jl)"), oq("k")), Octonion<Q>());
}

TEST(OPolynomial, PowersAgreeByPowerAssociativity) {
  Gen gen(24);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = gen.poly<Q>(gen.integer(1, 2));
    for (int t = 0; t <= 4; ++t) EXPECT_EQ(power(g, t), power_left_nested(g, t));
  }
  EXPECT_THROW(power(pq("x"), -1), MathError);
}

TEST(OPolynomial, ComposeAndIterate) {
  auto f = pq("(1)x^2 + (-1)");
  EXPECT_EQ(compose(f, f), pq("(1)x^4 + (-2)x^2"));
  EXPECT_EQ(iterate_comp(f, 1), f);
  EXPECT_EQ(iterate_comp(f, 3).degree(), 8);
  EXPECT_EQ(iterate_sub(f, oq("0"), 2), oq("0"));
  EXPECT_THROW(iterate_comp(f, 0), MathError);
  EXPECT_THROW(iterate_sub(f, oq("0"), 0), MathError);
  try {
    iterate_comp(f, 6);  // needs compose(f, degree-32)
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kResourceLimit);
  }
  EXPECT_EQ(iterate_comp(f, 5).degree(), 32);
}

TEST(OPolynomial, SubstitutionVersusCompositionCanDiffer) {
  Gen gen(25);
  bool differs = false;
  for (int trial = 0; trial < 20 && !differs; ++trial) {
    auto f = gen.poly<Q>(2);
    auto lambda = gen.octonion<Q>();
    differs = !(composition_gap(f, lambda, 2) == Octonion<Q>());
  }
  EXPECT_TRUE(differs);
  // With real coefficients both iterations agree.
  auto f = pq("(1)x^2 + (2)x + (-1/3)");
  auto lambda = oq("1/2 + i - 3 kl");
  EXPECT_EQ(composition_gap(f, lambda, 3), Octonion<Q>());
}

// Statements (1)-(3) about evaluation inside one quaternion copy.
TEST(OPolynomial, EvaluationHomomorphismInsideQuaternionCopy) {
  Gen gen(26);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& p = AlgebraParams<Q>::standard();
    std::vector<Octonion<Q>> fc, gc;
    for (int t = 0; t < 3; ++t) fc.push_back(gen.octonion<Q>(p, 4));
    // g with real coefficients makes g(alpha) commute with alpha.
    for (int t = 0; t < 3; ++t) gc.push_back(Octonion<Q>::scalar(p, gen.rational()));
    P f(p, fc), g(p, gc);
    auto alpha = gen.octonion<Q>(p, 4);
    EXPECT_EQ(eval(f * g, alpha), eval(f, alpha) * eval(g, alpha));
    EXPECT_EQ(eval(power(g, 3), alpha), power(eval(g, alpha), 3));
    EXPECT_EQ(eval(iterate_comp(g, 3), alpha), iterate_sub(g, alpha, 3));
  }
}

}  // namespace
}  // namespace octo
