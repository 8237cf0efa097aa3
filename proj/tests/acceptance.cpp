// Acceptance checks: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "gen.hpp"
#include "octo/io.hpp"
#include "octo/render.hpp"
#include "octo/selftest.hpp"

namespace {

using namespace octo;
using octo::testing::Gen;
using Q = Rational;
using O = Octonion<double>;

Octonion<Q> oq(std::string_view s) { return parse_octonion<Q>(s); }
OPolynomial<Q> pq(std::string_view s) { return parse_polynomial<Q>(s); }
O od(std::string_view s) { return parse_octonion<double>(s); }
OPolynomial<double> pd(std::string_view s) { return parse_polynomial<double>(s); }

// Collects failed sub-checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  int failed = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto f = pq("(1)x^2 + (i)x + (1 - k)");
  c.expect(companion(f) == CentralPoly<Q>({Q(2), Q(0), Q(3), Q(0), Q(1)}), "companion");
  auto classes = companion_classes(f);
  c.expect(classes.size() == 2 && classes[0].trace == 0 && classes[0].norm == 1 &&
               classes[1].trace == 0 && classes[1].norm == 2,
           "classes (0,1), (0,2)");
  auto red = reduce_linear(f, ConjClass<Q>{Q(0), Q(1), false});
  c.expect(red.E == oq("i") && red.G == oq("-k"), "E = i, G = -ij");
  auto rs = roots(f);
  c.expect(rs.isolated.size() == 2 && rs.spherical.empty() && rs.anomalies.empty(), "root count");
  if (rs.isolated.size() == 2) {
    c.expect(rs.isolated[0].root == oq("j") && rs.isolated[1].root == oq("j - i"), "roots j, j - i");
  }
  for (const auto& r : rs.isolated) c.expect(eval(f, r.root) == Octonion<Q>(), "residual exactly 0");
  const double t = seconds_since(t0);
  c.expect(t < 1.0, "runtime < 1 s");
  c.note = "exact, " + std::to_string(t) + " s";
}

void criterion2(Check& c) {
  auto root_of = [](std::string_view text) {
    auto rs = roots(pq(text));
    return rs.isolated.size() == 1 && rs.spherical.empty() ? rs.isolated[0].root : Octonion<Q>();
  };
  c.expect(root_of("(i)x + (j)") == oq("k"), "ix + j -> ij");
  const auto l = oq("l"), i = oq("i"), j = oq("j");
  OPolynomial<Q> right(l.params(), {Octonion<Q>(j * l), Octonion<Q>(i * l)});
  OPolynomial<Q> left(l.params(), {Octonion<Q>(l * j), Octonion<Q>(l * i)});
  c.expect(roots(right).isolated.size() == 1 && roots(right).isolated[0].root == oq("-k"),
           "(il)x + jl -> -ij");
  c.expect(roots(left).isolated.size() == 1 && roots(left).isolated[0].root == oq("-k"),
           "(li)x + lj -> -ij");
  c.note = "exact";
}

void criterion3(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  Gen gen(0xC0FFEE);
  int roots_checked = 0, witnesses = 0;
  for (int p = 0; p < 5; ++p) {
    auto f = gen.poly<double>(1 + p % 3);
    auto classes = rmr_classes(f);
    for (int k = 0; k < 200; ++k) {
      auto cm = gen.nonzero<double>();
      auto g = scale_right(f, cm);
      auto rs = roots(g);
      c.expect(rs.anomalies.empty(), "no anomalies for f c");
      for (const auto& r : rs.isolated) {
        bool found = false;
        for (const auto& cls : classes) {
          found = found || (std::abs(cls.trace - trace(r.root)) <= 1e-8 * (1 + std::abs(cls.trace)) &&
                            std::abs(cls.norm - norm(r.root)) <= 1e-8 * (1 + std::abs(cls.norm)));
        }
        c.expect(found, "root of f c outside rmr_classes(f)");
        ++roots_checked;
      }
    }
    for (const auto& iso : roots(f).isolated) {
      if (iso.cls.central) continue;
      for (int k = 0; k < 200; ++k) {
        auto d = gen.nonzero<double>();
        O mu = (d * iso.root) * inverse(d);
        try {
          auto cm = rmr_witness(f, mu);
          auto g = scale_right(f, cm);
          const double scale = 1 + eval_magnitude(g, mu);
          c.expect(abs(eval(g, mu)) < 1e-8 * scale, "witness residual");
          ++witnesses;
        } catch (const MathError& e) {
          c.expect(false, std::string("witness: ") + e.what());
        }
      }
    }
  }
  const double t = seconds_since(t0);
  c.expect(witnesses > 0, "some witnesses tested");
  c.expect(t < 10.0, "runtime < 10 s");
  c.note = std::to_string(roots_checked) + " multiple roots, " + std::to_string(witnesses) +
           " witnesses, " + std::to_string(t) + " s";
}

void criterion4(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  Gen gen(0xC0FFEE);
  std::vector<OPolynomial<Q>> polys{pq("(1)x^2 + (i)x + (1 - k)")};
  while (polys.size() < 6) {
    auto mu = gen.octonion<Q>(), lambda = gen.octonion<Q>();
    if (is_central(mu) || is_central(lambda)) continue;
    auto x = OPolynomial<Q>::x(mu.params());
    polys.push_back((x - OPolynomial<Q>::constant(mu)) * (x - OPolynomial<Q>::constant(lambda)));
  }
  int samples = 0, rejected = 0;
  for (std::size_t p = 0; p < polys.size(); ++p) {
    const auto& f = polys[p];
    for (const auto& d : lmr_describe(f)) {
      if (d.kind != LmrKind::kParametrized) continue;
      for (const auto& s : lmr_sample_pairs(d, 1000, 0xC0FFEE + p)) {
        c.expect(s.point == multiple_root(f, d.cls, s.multiplier, Side::kLeft),
                 "sample equals left multiple root");
        c.expect(lmr_contains(d, s.point), "lmr_contains accepts sample");
        ++samples;
        // Stretch the part orthogonal to Q: leaves the norm(z) = x(1-x) c surface.
        auto u = d.Q->project(s.point);
        auto w = s.point - u;
        if (!is_zero(w)) {
          c.expect(!lmr_contains(d, Octonion<Q>(u + w * Q(2))), "off-surface point rejected");
          ++rejected;
        }
      }
      // Beyond the segment 0 <= x <= 1.
      for (Q x : {Q(-1, 2), Q(3, 2), Q(2)}) {
        auto pt = *d.EinvG * (-x) + *d.GEinv * (x - 1);
        c.expect(!lmr_contains(d, pt), "x outside [0,1] rejected");
        ++rejected;
      }
    }
  }
  auto example = lmr_describe(polys[0]);
  c.expect(!example.empty() && example[0].kind == LmrKind::kParametrized, "[j] parametrized");
  if (!example.empty()) {
    for (auto m : {"j", "-j", "l"}) c.expect(lmr_contains(example[0], oq(m)), std::string("[j] checkpoint ") + m);
  }
  const double t = seconds_since(t0);
  c.expect(t < 10.0, "runtime < 10 s");
  c.note = std::to_string(samples) + " exact samples, " + std::to_string(rejected) +
           " rejections, " + std::to_string(t) + " s";
}

void criterion5(Check& c) {
  Gen gen(0xC0FFEE);
  const int trials = 10000;
  for (int k = 0; k < trials; ++k) {
    auto x = gen.octonion<Q>(), y = gen.octonion<Q>(), z = gen.octonion<Q>();
    c.expect((z * x) * (y * z) == (z * (x * y)) * z, "Moufang (zx)(yz) = z(xy)z");
    c.expect(z * (x * (z * y)) == ((z * x) * z) * y, "Moufang z(x(zy)) = (zxz)y");
    c.expect(((x * z) * y) * z == x * ((z * y) * z), "Moufang ((xz)y)z = x(zyz)");
    c.expect((x * x) * y == x * (x * y) && (y * x) * x == y * (x * x), "alternativity");
    c.expect(norm(x * y) == norm(x) * norm(y), "norm multiplicativity");
    c.expect(Octonion<Q>(x * x - x * trace(x) + norm(x)) == Octonion<Q>(), "quadratic identity");
  }
  bool nonassoc = false;
  std::string triple;
  const auto& p = AlgebraParams<Q>::standard();
  for (int a = 1; a < 8 && !nonassoc; ++a) {
    for (int b = 1; b < 8 && !nonassoc; ++b) {
      for (int d = 1; d < 8 && !nonassoc; ++d) {
        auto x = Octonion<Q>::basis(p, a), y = Octonion<Q>::basis(p, b), z = Octonion<Q>::basis(p, d);
        if (!((x * y) * z == x * (y * z))) {
          nonassoc = true;
          triple = format_octonion(x) + "," + format_octonion(y) + "," + format_octonion(z);
        }
      }
    }
  }
  c.expect(nonassoc, "nonassociative basis triple");
  c.note = std::to_string(trials) + " exact triples; nonassociative triple (" + triple + ")";
}

void criterion6(Check& c) {
  Gen gen(0xC0FFEE);
  const auto& p = AlgebraParams<Q>::standard();
  for (int k = 0; k < 100; ++k) {
    auto alpha = gen.octonion<Q>(p), b = gen.octonion<Q>(p);
    auto cc = alpha - alpha * alpha - b * alpha;
    OPolynomial<Q> f(p, {cc, b, Octonion<Q>::scalar(p, Q(1))});
    auto check = verify_composition_fixed(f, alpha, 3);
    c.expect(check.ok, "composition iterates fix alpha (n = " +
                           std::to_string(check.failing_n.value_or(0)) + ")");
  }
  bool differs = false;
  std::string witness;
  for (int k = 0; k < 50 && !differs; ++k) {
    auto f = gen.poly<Q>(2);
    auto lambda = gen.octonion<Q>();
    if (!(composition_gap(f, lambda, 2) == Octonion<Q>())) {
      differs = true;
      witness = "found at attempt " + std::to_string(k + 1);
    }
  }
  c.expect(differs, "composition differs from substitution somewhere");
  c.note = "100 random octonion (alpha, B), exact; divergence " + witness;
}

void criterion7(Check& c) {
  auto f = pd("(1)x^2 + (i)x + (-1/4 - 1/2 i)");
  auto alpha = od("-0.5 i");
  auto r = classify_fixed(f, alpha);
  c.expect(r.M == 1.0 && r.m == 0.0 && r.verdict == Verdict::kAmbivalent, "M = 1, m = 0, ambivalent");
  const double t = 1e-4;
  const double real_ratio = step_ratio(f, alpha, od("1"), t);
  c.expect(real_ratio < 1.0, "contracting direction");
  double worst = 1e9;
  Gen gen(0xC0FFEE);
  for (int k = 0; k < 100; ++k) {
    // Random direction in C j = span(j, k).
    O dir = od("j") * gen.real() + od("k") * gen.real();
    if (abs(dir) < 1e-3) continue;
    worst = std::min(worst, step_ratio(f, alpha, dir, t));
  }
  c.expect(worst >= 1.0 - 1e-6, "C j ratio >= 1");

  auto sq = pd("x^2");
  c.expect(classify_fixed(sq, od("0")).verdict == Verdict::kAttracting, "x^2 at 0 attracting");
  c.expect(classify_fixed(sq, od("1")).verdict == Verdict::kRepelling, "x^2 at 1 repelling");
  for (int k = 0; k < 100; ++k) {
    O v = gen.octonion<double>();
    v = v * (1e-3 / abs(v));
    c.expect(abs(eval(sq, v)) < abs(v), "contraction at 0");
    O w = od("1") + v;
    c.expect(abs(O(eval(sq, w) - od("1"))) > abs(v), "expansion at 1");
  }
  std::ostringstream note;
  note << "real ratio " << real_ratio << ", min C j ratio " << worst;
  c.note = note.str();
}

void criterion8(Check& c) {
  auto f = pd("(1)x^2 + (-1)");
  c.expect(detect_pseudo_period(f, od("0"), 20) == 2, "period 2");
  auto r = classify_pseudo_periodic(f, od("0"), 2);
  c.expect(r.verdict == Verdict::kAttracting && r.product == 0.0, "attracting, product 0");
  Gen gen(0xC0FFEE);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = gen.integer(1, 6);
    double lhs = 1, rhs = 1;
    for (int i = 0; i < n; ++i) {
      auto a = gen.octonion<double>() * 0.5;
      lhs *= multiplier_upper(a, O());
      rhs *= abs(O(a * 2.0));
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  c.expect(worst <= 1e-12, "prod sqrt(M_i) = prod |2 alpha_i|");
  std::ostringstream note;
  note << "max |difference| " << worst;
  c.note = note.str();
}

void criterion9(Check& c) {
  for (const auto& row : run_selftest()) c.expect(row.pass, "selftest " + row.id + ": " + row.got);
  SliceSpec spec;
  spec.base = O();
  spec.dir_u = od("1");
  spec.dir_v = od("i");
  spec.width = spec.height = 256;
  spec.scale = 4.0 / 256;
  spec.max_iter = 50;
  auto f = pd("x^2");
  auto img = render_slice(f, spec);
  int correct = 0;
  for (int y = 0; y < 256; ++y) {
    for (int x = 0; x < 256; ++x) correct += (img.at(x, y) == 0) == (abs(pixel_point(spec, x, y)) <= 1.0);
  }
  const double frac = correct / 65536.0;
  c.expect(frac >= 0.99, "unit disk >= 99%");
  c.note = "disk agreement " + std::to_string(100 * frac) + "%";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"quadratic worked example (exact)", criterion1},
      {"linear example and its multiples", criterion2},
      {"right multiples stay in companion classes", criterion3},
      {"left-multiple formula cross-validation", criterion4},
      {"algebra identities", criterion5},
      {"composition iterates at fixed points", criterion6},
      {"fixed-point classification", criterion7},
      {"pseudo-periodic points", criterion8},
      {"selftest and renderer", criterion9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failed == 0;
    failed += !ok;
    std::printf("criterion %zu: %s - %s (%s)\n", k + 1, ok ? "PASS" : "FAIL", criteria[k].first.c_str(),
                c.note.c_str());
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    if (c.failed > static_cast<int>(c.failures.size())) {
      std::printf("    ... %d failures in total\n", c.failed);
    }
  }
  return failed == 0 ? 0 : 1;
}
