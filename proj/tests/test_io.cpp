#include <gtest/gtest.h>

#include <sstream>

#include "gen.hpp"
#include "octo/io.hpp"

namespace octo {
namespace {

using testing::Gen;
using Q = Rational;

template <FieldScalar S>
Octonion<S> basis(int a) {
  return Octonion<S>::basis(AlgebraParams<S>::standard(), a);
}

TEST(ParseOctonion, TextForms) {
  EXPECT_EQ(parse_octonion<Q>("1 + 2 i + 3 j + 4 k + 5 l + 6 il + 7 jl + 8 kl"),
            Octonion<Q>::from_list(AlgebraParams<Q>::standard(),
                                   {Q(1), Q(2), Q(3), Q(4), Q(5), Q(6), Q(7), Q(8)}));
  EXPECT_EQ(parse_octonion<Q>("-k"), -basis<Q>(3));
  EXPECT_EQ(parse_octonion<Q>("j - k"), basis<Q>(2) - basis<Q>(3));
  EXPECT_EQ(parse_octonion<Q>("-1/2 i"), basis<Q>(1) * Q(-1, 2));
  EXPECT_EQ(parse_octonion<Q>("0.5*il"), basis<Q>(5) * Q(1, 2));
  EXPECT_EQ(parse_octonion<Q>("kl + kl"), basis<Q>(7) * Q(2));
  EXPECT_EQ(parse_octonion<Q>("  3  "), Octonion<Q>::scalar(AlgebraParams<Q>::standard(), Q(3)));
  EXPECT_EQ(parse_octonion<Q>("l - -l"), basis<Q>(4) * Q(2));
  EXPECT_EQ(parse_octonion<double>("1e-3 jl"), basis<double>(6) * 1e-3);
}

TEST(ParseOctonion, JsonForms) {
  EXPECT_EQ(parse_octonion<Q>("[0, \"1/3\", 0.1, 0, 0, 0, 0, -2]"),
            Octonion<Q>::from_list(AlgebraParams<Q>::standard(),
                                   {0, Q(1, 3), Q(1, 10), 0, 0, 0, 0, Q(-2)}));
  EXPECT_EQ(parse_octonion<double>("[1,2,3,4,5,6,7,8]")[7], 8.0);
}

TEST(ParseOctonion, ErrorsCarryPositions) {
  struct Case {
    const char* text;
    int line, column;
  };
  for (auto c : {Case{"1 + q", 1, 5}, Case{"1 +", 1, 4}, Case{"", 1, 1}, Case{"i j", 1, 3},
                 Case{"1 +\n  2 x", 2, 5}, Case{"[1,2]", 1, 1}, Case{"[1,2", 1, 5},
                 Case{"ii", 1, 1}}) {
    try {
      parse_octonion<Q>(c.text);
      FAIL() << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse);
      EXPECT_EQ(e.line(), c.line) << c.text;
      EXPECT_EQ(e.column(), c.column) << c.text;
    }
  }
}

TEST(ParseOctonion, RoundTripRandom) {
  Gen gen(51);
  for (int k = 0; k < 1000; ++k) {
    auto q = gen.octonion<Q>();
    EXPECT_EQ(parse_octonion<Q>(format_octonion(q)), q);
    EXPECT_EQ(parse_octonion<Q>(to_json(q).dump()), q);
    Coords<double> c;
    for (int a = 0; a < kOctonionDim; ++a) c[a] = gen.real(-1e3, 1e3) * std::pow(10.0, gen.integer(-8, 8));
    Octonion<double> d(AlgebraParams<double>::standard(), c);
    EXPECT_EQ(parse_octonion<double>(format_octonion(d)), d);
    EXPECT_EQ(parse_octonion<double>(to_json(d).dump()), d);
  }
}

TEST(ParsePolynomial, TextAndJson) {
  auto f = parse_polynomial<Q>("(1)x^2 + (i)x + (j - k)");
  ASSERT_EQ(f.degree(), 2);
  EXPECT_EQ(f.coeff(1), basis<Q>(1));
  EXPECT_EQ(f.coeff(0), basis<Q>(2) - basis<Q>(3));
  EXPECT_EQ(parse_polynomial<Q>("x^2 - (i)x + 3"), parse_polynomial<Q>("(1)x^2 + (-i)x + (3)"));
  EXPECT_EQ(parse_polynomial<Q>("(i)*x + (i)x"), parse_polynomial<Q>("(2 i)x"));
  EXPECT_EQ(parse_polynomial<Q>(format_polynomial(f)), f);

  auto j = parse_polynomial<Q>(
      "{\"params\": [-1, -1, -1], \"coeffs\": [[0,0,1,-1,0,0,0,0], \"i\", [1,0,0,0,0,0,0,0]]}");
  EXPECT_EQ(j, f);
  auto custom = parse_polynomial<Q>("{\"params\": [-2, \"-1/3\", 5], \"coeffs\": [[1,0,0,0,0,0,0,0]]}");
  EXPECT_EQ(custom.params().beta(), Q(-1, 3));
  EXPECT_EQ(parse_polynomial<Q>(to_json(custom).dump()), custom);
}

TEST(ParsePolynomial, Errors) {
  for (auto bad : {"", "(1)x^", "(1 + )x", "(1)y", "(1)x^2 (i)", "{\"coeffs\": 3}",
                   "{\"params\": [0, 1, 1], \"coeffs\": []}", "{\"coeffs\": [[1,2]]}", "{"}) {
    EXPECT_THROW(parse_polynomial<Q>(bad), MathError) << bad;
  }
  try {
    parse_polynomial<Q>("(1)x^2 +\n (i)x + (j -)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 13);
  }
}

TEST(ParseParams, Forms) {
  auto p = parse_params<Q>("-1, -2, 1/2");
  EXPECT_EQ(p.beta(), Q(-2));
  EXPECT_EQ(p.gamma(), Q(1, 2));
  EXPECT_EQ(parse_params<Q>("[-1,-1,-1]"), AlgebraParams<Q>::standard());
  EXPECT_THROW(parse_params<Q>("1,2"), MathError);
}

TEST(Format, Octonions) {
  EXPECT_EQ(format_octonion(Octonion<Q>()), "0");
  EXPECT_EQ(format_octonion(parse_octonion<Q>("-k")), "-k");
  EXPECT_EQ(format_octonion(parse_octonion<Q>("j - i")), "-i + j");
  EXPECT_EQ(format_octonion(parse_octonion<Q>("1/2 - 3 kl")), "1/2 - 3 kl");
  EXPECT_EQ(format_polynomial(parse_polynomial<Q>("x^2 + (i)")), "(1)x^2 + (i)");
  std::ostringstream os;
  os << parse_octonion<double>("0.5 l");
  EXPECT_EQ(os.str(), "0.5 l");
}

TEST(Json, StableKeyOrderAndValues) {
  auto rs = roots(parse_polynomial<Q>("(1)x^2 + (i)x + (1 - k)"));
  auto j = to_json(rs);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"isolated", "spherical", "anomalies"}));
  EXPECT_EQ(j["isolated"][0]["class"].dump(), R"({"T":0,"N":1,"central":false})");
  EXPECT_EQ(to_json(companion(parse_polynomial<Q>("(1)x^2 + (i)x + (1 - k)"))).dump(),
            R"({"degree":4,"coeffs":[2,0,3,0,1]})");
  EXPECT_EQ(scalar_json(Q(1, 3)).dump(), "\"1/3\"");
  EXPECT_EQ(scalar_json(std::nan("")).dump(), "null");
  auto report = classify_fixed(parse_polynomial<double>("x^2"), parse_octonion<double>("0"));
  EXPECT_EQ(to_json(report)["verdict"], "attracting");
}

TEST(Csv, OrbitColumns) {
  auto rec = orbit(parse_polynomial<double>("(1)x^2 + (-1)"), parse_octonion<double>("0"), 10, 4);
  std::ostringstream os;
  write_orbit_csv(os, rec);
  EXPECT_EQ(os.str(),
            "step,c0,c1,c2,c3,c4,c5,c6,c7,abs\n"
            "0,0,0,0,0,0,0,0,0,0\n"
            "1,-1,0,0,0,0,0,0,0,1\n"
            "2,0,0,0,0,0,0,0,0,0\n");
  EXPECT_EQ(to_json(rec)["detectedPeriod"], 2);
}

}  // namespace
}  // namespace octo
