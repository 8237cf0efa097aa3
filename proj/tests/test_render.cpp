#include <gtest/gtest.h>

#include <sstream>

#include "octo/io.hpp"
#include "octo/render.hpp"

namespace octo {
namespace {

using O = Octonion<double>;

SliceSpec disk_spec(int size) {
  SliceSpec s;
  s.base = O();
  s.dir_u = parse_octonion<double>("1");
  s.dir_v = parse_octonion<double>("i");
  s.width = s.height = size;
  s.scale = 4.0 / size;
  s.max_iter = 50;
  s.escape_radius = 4.0;
  return s;
}

TEST(Render, PixelMapping) {
  auto s = disk_spec(4);
  EXPECT_EQ(pixel_point(s, 0, 0), parse_octonion<double>("-1.5 + 1.5 i"));
  EXPECT_EQ(pixel_point(s, 3, 3), parse_octonion<double>("1.5 - 1.5 i"));
}

TEST(Render, EscapeIntensity) {
  auto f = parse_polynomial<double>("x^2");
  EXPECT_EQ(escape_intensity(f, parse_octonion<double>("0.5"), 50, 4), 0);
  EXPECT_EQ(escape_intensity(f, parse_octonion<double>("5"), 50, 4), 255);
  EXPECT_GT(escape_intensity(f, parse_octonion<double>("1.5"), 50, 4),
            escape_intensity(f, parse_octonion<double>("1.01"), 50, 4));
  EXPECT_GT(escape_intensity(f, parse_octonion<double>("1.01"), 50, 4), 0);
}

TEST(Render, UnitDiskForSquaring) {
  auto f = parse_polynomial<double>("x^2");
  for (const char* v : {"i", "jl", "0.6 j + 0.8 kl"}) {
    auto s = disk_spec(256);
    s.dir_v = parse_octonion<double>(v);
    auto img = render_slice(f, s);
    int correct = 0;
    for (int y = 0; y < s.height; ++y) {
      for (int x = 0; x < s.width; ++x) {
        const bool bounded = abs(pixel_point(s, x, y)) <= 1.0;
        correct += (img.at(x, y) == 0) == bounded;
      }
    }
    EXPECT_GE(correct, 0.99 * s.width * s.height) << v;
  }
}

TEST(Render, DeterministicAcrossThreadCounts) {
  auto f = parse_polynomial<double>("(1)x^2 + (-0.4 + 0.3 j)");
  auto s = disk_spec(96);
  auto one = render_slice(f, s, 1);
  for (unsigned t : {2u, 3u, 8u, 0u}) EXPECT_EQ(render_slice(f, s, t).pixels, one.pixels);
  std::ostringstream a, b;
  write_pgm(a, one);
  write_pgm(b, render_slice(f, s, 4));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, 11), "P5\n96 96\n25");
  EXPECT_EQ(a.str().size(), std::string("P5\n96 96\n255\n").size() + 96u * 96u);
}

TEST(Render, InvalidSpecs) {
  auto f = parse_polynomial<double>("x^2");
  auto s = disk_spec(8);
  s.dir_u = O();
  EXPECT_THROW(render_slice(f, s), MathError);
  s = disk_spec(8);
  s.width = 0;
  EXPECT_THROW(render_slice(f, s), MathError);
}

}  // namespace
}  // namespace octo
