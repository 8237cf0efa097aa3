#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "octo/opoly.hpp"

namespace octo {

/// Plane slice lambda = base + x dirU + y dirV, pixel centres spaced `scale`
/// apart and centred on base.
struct SliceSpec {
  Octonion<double> base;
  Octonion<double> dir_u;
  Octonion<double> dir_v;
  int width = 256;
  int height = 256;
  double scale = 4.0 / 256;
  int max_iter = 50;
  double escape_radius = 4.0;
};

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, top row first

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
};

/// Point sampled by pixel (px, py); py grows downwards.
Octonion<double> pixel_point(const SliceSpec& spec, int px, int py);

/// 0 for orbits still bounded after max_iter steps; otherwise 1..255, brighter
/// for earlier escapes.
std::uint8_t escape_intensity(const OPolynomial<double>& f, const Octonion<double>& lambda,
                              int max_iter, double escape_radius);

/// Escape-time image; scanlines are distributed over `threads` workers (0 =
/// hardware concurrency). The result does not depend on the thread count.
GrayImage render_slice(const OPolynomial<double>& f, const SliceSpec& spec, unsigned threads = 0);

/// Binary PGM (P5).
void write_pgm(std::ostream& os, const GrayImage& img);

}  // namespace octo
