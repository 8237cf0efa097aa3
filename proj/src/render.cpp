#include "octo/render.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

namespace octo {

Octonion<double> pixel_point(const SliceSpec& spec, int px, int py) {
  const double x = (px + 0.5 - spec.width / 2.0) * spec.scale;
  const double y = (spec.height / 2.0 - py - 0.5) * spec.scale;
  return spec.base + spec.dir_u * x + spec.dir_v * y;
}

std::uint8_t escape_intensity(const OPolynomial<double>& f, const Octonion<double>& lambda,
                              int max_iter, double escape_radius) {
  Octonion<double> z = lambda;
  for (int k = 0; k <= max_iter; ++k) {
    if (k > 0) z = eval(f, z);
    if (!z.coords().allFinite() || abs(z) >= escape_radius) {
      return static_cast<std::uint8_t>(1 + (254 * (max_iter - k)) / std::max(1, max_iter));
    }
  }
  return 0;
}

GrayImage render_slice(const OPolynomial<double>& f, const SliceSpec& spec, unsigned threads) {
  if (spec.width <= 0 || spec.height <= 0 || spec.max_iter < 0 || !(spec.scale > 0)) {
    throw MathError(ErrorKind::kInvalidInput, "slice needs positive size, scale and max_iter >= 0");
  }
  if (is_zero(spec.dir_u, 0.0) || is_zero(spec.dir_v, 0.0)) {
    throw MathError(ErrorKind::kInvalidInput, "slice directions must be nonzero");
  }
  GrayImage img{spec.width, spec.height,
                std::vector<std::uint8_t>(static_cast<std::size_t>(spec.width) *
                                          static_cast<std::size_t>(spec.height))};
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.height));

  std::atomic<int> next_row{0};
  auto worker = [&] {
    for (int y = next_row++; y < spec.height; y = next_row++) {
      auto* row = img.pixels.data() + static_cast<std::size_t>(y) * static_cast<std::size_t>(spec.width);
      for (int x = 0; x < spec.width; ++x) {
        row[x] = escape_intensity(f, pixel_point(spec, x, y), spec.max_iter, spec.escape_radius);
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();  // joins
  return img;
}

void write_pgm(std::ostream& os, const GrayImage& img) {
  os << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(img.pixels.data()),
           static_cast<std::streamsize>(img.pixels.size()));
}

}  // namespace octo
