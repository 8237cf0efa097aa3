#include <gtest/gtest.h>

#include "gen.hpp"
#include "octo/io.hpp"

namespace octo {
namespace {

using testing::Gen;
using Q = Rational;
using O = Octonion<double>;

O od(std::string_view s) { return parse_octonion<double>(s); }
OPolynomial<double> pd(std::string_view s) { return parse_polynomial<double>(s); }

const char* kAmbivalent = "(1)x^2 + (i)x + (-1/4 - 1/2 i)";

// Random unit vector scaled to `radius`.
O random_offset(Gen& gen, double radius) {
  O v = gen.octonion<double>();
  return v * (radius / abs(v));
}

TEST(FixedPoints, Examples) {
  auto rs = fixed_points(parse_polynomial<Q>("x^2"));
  ASSERT_EQ(rs.isolated.size(), 2u);
  EXPECT_EQ(rs.isolated[0].root, parse_octonion<Q>("0"));
  EXPECT_EQ(rs.isolated[1].root, parse_octonion<Q>("1"));

  auto amb = fixed_points(parse_polynomial<Q>(kAmbivalent));
  bool found = false;
  for (const auto& r : amb.isolated) found = found || r.root == parse_octonion<Q>("-1/2 i");
  EXPECT_TRUE(found);

  auto sph = fixed_points(parse_polynomial<Q>("(1)x^2 + (1)"));
  EXPECT_TRUE(sph.isolated.empty());
  ASSERT_EQ(sph.spherical.size(), 1u);
  EXPECT_EQ(sph.spherical[0].trace, 1);
  EXPECT_EQ(sph.spherical[0].norm, 1);
  for (auto m : {"1/2 + 1/2 i + 1/2 j + 1/2 k", "1/2 - 1/2 il + 1/2 l - 1/2 kl"}) {
    auto a = parse_octonion<Q>(m);
    EXPECT_EQ(eval(parse_polynomial<Q>("(1)x^2 + (1)"), a), a);
  }

  EXPECT_THROW(fixed_points(parse_polynomial<Q>("(2)x^2")), MathError);
  EXPECT_THROW(fixed_points(parse_polynomial<Q>("x^3")), MathError);
}

TEST(ClassifyFixed, Examples) {
  auto r = classify_fixed(pd(kAmbivalent), od("-0.5 i"));
  EXPECT_DOUBLE_EQ(r.M, 1.0);
  EXPECT_DOUBLE_EQ(r.m, 0.0);
  EXPECT_EQ(r.verdict, Verdict::kAmbivalent);

  auto a = classify_fixed(pd("x^2"), od("0"));
  EXPECT_EQ(a.verdict, Verdict::kAttracting);
  EXPECT_DOUBLE_EQ(a.M, 0.0);
  auto b = classify_fixed(pd("x^2"), od("1"));
  EXPECT_EQ(b.verdict, Verdict::kRepelling);
  EXPECT_DOUBLE_EQ(b.M, 2.0);
  EXPECT_DOUBLE_EQ(b.m, 2.0);
  auto c = classify_fixed(pd("(1)x^2 + (1 + i)"), od("i"));
  EXPECT_DOUBLE_EQ(c.M, 2.0);
  EXPECT_DOUBLE_EQ(c.m, 0.0);
  EXPECT_EQ(c.verdict, Verdict::kAmbivalent);

  try {
    classify_fixed(pd("x^2"), od("2"));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAFixedPoint);
  }
}

TEST(ClassifyFixed, LowerNeverExceedsUpper) {
  Gen gen(41);
  for (int trial = 0; trial < 1000; ++trial) {
    auto alpha = gen.octonion<double>(), b = gen.octonion<double>();
    EXPECT_LE(multiplier_lower(alpha, b), multiplier_upper(alpha, b) + 1e-15);
  }
}

TEST(ClassifyFixed, VerdictStableUnderTinyPerturbation) {
  Gen gen(42);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 300; ++trial) {
    auto alpha = gen.octonion<double>(), b = gen.octonion<double>();
    const double upper = multiplier_upper(alpha, b), lower = multiplier_lower(alpha, b);
    if (std::abs(upper - 1) < 1e-6 || std::abs(lower - 1) < 1e-6) continue;
    auto c = alpha - alpha * alpha - b * alpha;
    OPolynomial<double> f(alpha.params(), {c, b, O::scalar(alpha.params(), 1.0)});
    auto base = classify_fixed(f, alpha);
    auto da = random_offset(gen, 1e-13), db = random_offset(gen, 1e-13);
    auto a2 = alpha + da, b2 = b + db;
    auto c2 = a2 - a2 * a2 - b2 * a2;
    OPolynomial<double> g(alpha.params(), {c2, b2, O::scalar(alpha.params(), 1.0)});
    EXPECT_EQ(classify_fixed(g, a2).verdict, base.verdict);
    ++checked;
  }
  EXPECT_GE(checked, 300);
}

TEST(ClassifyFixed, EmpiricalContractionAndExpansion) {
  Gen gen(43);
  int attracting = 0, repelling = 0;
  for (int trial = 0; trial < 400; ++trial) {
    // Mixed sizes so both verdicts occur.
    const double size = gen.real(0.05, 1.0);
    auto alpha = gen.octonion<double>() * size, b = gen.octonion<double>() * size;
    auto c = alpha - alpha * alpha - b * alpha;
    OPolynomial<double> f(alpha.params(), {c, b, O::scalar(alpha.params(), 1.0)});
    auto r = classify_fixed(f, alpha);
    if (r.verdict == Verdict::kAttracting && r.M + 1e-2 < 1) {
      ++attracting;
      for (int k = 0; k < 100; ++k) {
        auto lambda = alpha + random_offset(gen, 1e-3);
        EXPECT_LT(abs(O(eval(f, lambda) - alpha)), abs(O(lambda - alpha)));
      }
    }
    if (r.verdict == Verdict::kRepelling && r.m - 1e-2 > 1) {
      ++repelling;
      for (int k = 0; k < 100; ++k) {
        auto lambda = alpha + random_offset(gen, 1e-3);
        EXPECT_GT(abs(O(eval(f, lambda) - alpha)), abs(O(lambda - alpha)));
      }
    }
  }
  EXPECT_GT(attracting, 0);
  EXPECT_GT(repelling, 0);
}

TEST(ClassifyFixed, AmbivalentDirections) {
  auto f = pd(kAmbivalent);
  auto alpha = od("-0.5 i");
  // The real direction contracts (complex derivative vanishes there) ...
  EXPECT_LT(step_ratio(f, alpha, od("1"), 1e-4), 1.0);
  // ... while C j directions are never shrunk.
  for (auto dir : {"j", "k", "0.6 j + 0.8 k"}) {
    EXPECT_GE(step_ratio(f, alpha, od(dir), 1e-4), 1.0 - 1e-6) << dir;
  }
  auto orb = orbit(f, od("-0.5 i + 0.01 j"), 50, 1e6);
  EXPECT_GE(abs(O(orb.iterates.back() - alpha)), 0.01 - 1e-9);
}

TEST(Composition, CorollaryConstruction) {
  Gen gen(44);
  for (int trial = 0; trial < 25; ++trial) {
    const auto& p = AlgebraParams<Q>::standard();
    auto alpha = gen.octonion<Q>(p, 4), b = gen.octonion<Q>(p, 4);
    auto c = alpha - alpha * alpha - b * alpha;
    OPolynomial<Q> f(p, {c, b, Octonion<Q>::scalar(p, Q(1))});
    auto check = verify_composition_fixed(f, alpha, 3);
    EXPECT_TRUE(check.ok);
    EXPECT_FALSE(check.failing_n.has_value());
  }
  EXPECT_TRUE(verify_composition_fixed(parse_polynomial<Q>("x^2"), parse_octonion<Q>("1"), 4).ok);
  EXPECT_TRUE(verify_composition_fixed(parse_polynomial<Q>(kAmbivalent),
                                       parse_octonion<Q>("-1/2 i"), 3).ok);
  EXPECT_TRUE(verify_composition_fixed(pd(kAmbivalent), od("-0.5 i"), 3).ok);
  EXPECT_THROW(verify_composition_fixed(parse_polynomial<Q>("x^2"), parse_octonion<Q>("2"), 2),
               MathError);
  EXPECT_THROW(verify_composition_fixed(parse_polynomial<Q>("x^2"), parse_octonion<Q>("1"), 0),
               MathError);
}

TEST(Orbit, Examples) {
  auto esc = orbit(pd("x^2"), od("2"), 10, 4.0);
  EXPECT_TRUE(esc.escaped);
  EXPECT_EQ(esc.iterates.size(), 2u);
  EXPECT_EQ(esc.iterates[1], od("4"));

  auto cyc = orbit(pd("(1)x^2 + (-1)"), od("0"), 10, 4.0);
  EXPECT_FALSE(cyc.escaped);
  EXPECT_EQ(cyc.detected_period, 2);
  EXPECT_EQ(cyc.iterates[1], od("-1"));

  auto bounded = orbit(pd("x^2"), od("0.5 i"), 20, 4.0);
  EXPECT_FALSE(bounded.escaped);
  EXPECT_EQ(bounded.iterates.front(), od("0.5 i"));
  EXPECT_THROW(orbit(pd("x^2"), od("0"), 0, 4.0), MathError);
}

TEST(PseudoPeriod, DetectAndClassify) {
  EXPECT_EQ(detect_pseudo_period(pd("(1)x^2 + (-1)"), od("0"), 10), 2);
  EXPECT_EQ(detect_pseudo_period(pd("x^2"), od("1"), 10), 1);
  EXPECT_FALSE(detect_pseudo_period(pd("(1)x^2 + (-1)"), od("i"), 20).has_value());

  auto r = classify_pseudo_periodic(pd("(1)x^2 + (-1)"), od("0"), 2);
  EXPECT_EQ(r.verdict, Verdict::kAttracting);
  EXPECT_DOUBLE_EQ(r.product, 0.0);
  ASSERT_EQ(r.cycle.size(), 2u);
  EXPECT_EQ(r.cycle[1], od("-1"));
  EXPECT_DOUBLE_EQ(r.Mi[1], 4.0);

  try {
    classify_pseudo_periodic(pd("(1)x^2 + (-1)"), od("0"), 4);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOrderMismatch);
  }
  EXPECT_EQ(classify_pseudo_periodic(pd("x^2"), od("1"), 1).verdict, Verdict::kInconclusive);
}

TEST(PseudoPeriod, OrderOneConsistentWithFixedClassification) {
  Gen gen(45);
  for (int trial = 0; trial < 200; ++trial) {
    auto alpha = gen.octonion<double>() * 0.7, b = gen.octonion<double>() * 0.7;
    auto c = alpha - alpha * alpha - b * alpha;
    OPolynomial<double> f(alpha.params(), {c, b, O::scalar(alpha.params(), 1.0)});
    if (detect_pseudo_period(f, alpha, 1, 1e-9) != 1) continue;
    auto fixed = classify_fixed(f, alpha);
    auto periodic = classify_pseudo_periodic(f, alpha, 1, 1e-9);
    EXPECT_EQ(fixed.verdict == Verdict::kAttracting, periodic.verdict == Verdict::kAttracting);
    EXPECT_NEAR(periodic.Mi[0], fixed.M * fixed.M, 1e-12);
  }
}

TEST(PseudoPeriod, ZeroLinearTermMultiplier) {
  Gen gen(46);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = gen.octonion<double>();
    EXPECT_NEAR(multiplier_upper(a, O()), abs(O(a * 2.0)), 1e-12);
  }
}

}  // namespace
}  // namespace octo
