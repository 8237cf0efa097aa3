#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <optional>
#include <random>

#include "octo/scalar.hpp"

namespace octo {

namespace {

using Complex = std::complex<double>;

constexpr int kAberthIterationCap = 1000;
constexpr int kAberthRestarts = 4;
constexpr std::uint64_t kAberthSeed = 0xC0FFEE;
constexpr double kMachineEps = std::numeric_limits<double>::epsilon();
// Upper bound on a cluster inclusion radius, relative to 1 + |z|.
constexpr double kClusterRadiusCap = 1e-2;
// Conjugate pairing and realness tolerance, relative to 1 + |z|.
constexpr double kPairingTolerance = 1e-8;

struct RootCluster {
  Complex value;
  int multiplicity;
};

void horner(const std::vector<double>& c, Complex z, Complex& p, Complex& dp) {
  p = 0.0;
  dp = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

Complex eval_complex(const std::vector<double>& c, Complex z) {
  Complex p = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * z + *it;
  return p;
}

std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

// Runs Aberth on a monic polynomial of degree >= 2 with c[0] != 0.
std::optional<std::vector<Complex>> aberth_attempt(const std::vector<double>& monic,
                                                   std::vector<Complex> z) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kAberthIterationCap; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex p, dp;
      horner(monic, z[i], p, dp);
      double backward = residual_scale(monic, std::abs(z[i]));
      if (std::abs(p) <= 8.0 * static_cast<double>(n) * kMachineEps * backward) {
        done[i] = true;
        continue;
      }
      all_done = false;
      Complex ratio = dp == 0.0 ? Complex(1.0, 0.0) : p / dp;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (diff != 0.0) repulsion += 1.0 / diff;
      }
      Complex w = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
      z[i] -= w;
      if (std::abs(w) <= 4.0 * kMachineEps * (1.0 + std::abs(z[i]))) done[i] = true;
    }
    if (all_done) return z;
  }
  return std::nullopt;
}

std::vector<Complex> initial_guesses(const std::vector<double>& monic, double jitter,
                                     std::mt19937_64& rng) {
  const std::size_t n = monic.size() - 1;
  const double center = -monic[n - 1] / static_cast<double>(n);
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (monic[k] != 0.0) {
      radius = std::max(radius, std::pow(std::abs(monic[k]), 1.0 / static_cast<double>(n - k)));
    }
  }
  if (radius == 0.0) radius = 1.0;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    Complex perturb(jitter * unit(rng), jitter * unit(rng));
    z[k] = Complex(center, 0.0) + radius * (1.0 + perturb) * std::polar(1.0, angle);
  }
  return z;
}

// Groups approximations whose inclusion discs overlap, then replaces each
// group by its centroid polished with Newton on the (m-1)-th derivative.
std::vector<RootCluster> cluster(const std::vector<double>& monic, const std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<double> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex prod = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) prod *= z[i] - z[j];
    }
    double rounding = 4.0 * static_cast<double>(n) * kMachineEps * residual_scale(monic, std::abs(z[i]));
    double cap = kClusterRadiusCap * (1.0 + std::abs(z[i]));
    double r = std::abs(prod) == 0.0
                   ? cap
                   : static_cast<double>(n) * (std::abs(eval_complex(monic, z[i])) + rounding) /
                         std::abs(prod);
    radius[i] = std::min(r, cap);
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) <= radius[i] + radius[j]) parent[find(i)] = find(j);
    }
  }
  std::vector<RootCluster> out;
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (const auto& g : groups) {
    if (g.empty()) continue;
    Complex centroid = 0.0;
    double spread = 0.0;
    for (auto i : g) centroid += z[i];
    centroid /= static_cast<double>(g.size());
    for (auto i : g) spread = std::max(spread, std::abs(z[i] - centroid));
    if (g.size() > 1) {
      std::vector<double> d = monic;
      for (std::size_t k = 1; k < g.size(); ++k) d = derivative(d);
      Complex polished = centroid;
      for (int it = 0; it < 8; ++it) {
        Complex p, dp;
        horner(d, polished, p, dp);
        if (dp == 0.0) break;
        polished -= p / dp;
      }
      if (std::abs(polished - centroid) <= spread + 1e-12 * (1.0 + std::abs(centroid))) {
        centroid = polished;
      }
    }
    out.push_back({centroid, static_cast<int>(g.size())});
  }
  return out;
}

std::vector<RootCluster> root_clusters(const std::vector<double>& coeffs_in) {
  std::vector<double> c = coeffs_in;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.empty()) throw MathError(ErrorKind::kInvalidInput, "zero polynomial has no roots");
  for (double v : c) {
    if (!std::isfinite(v)) throw MathError(ErrorKind::kInvalidInput, "non-finite coefficient");
  }
  std::vector<RootCluster> out;
  std::size_t zeros = 0;
  while (c[zeros] == 0.0) ++zeros;
  if (zeros > 0) {
    out.push_back({0.0, static_cast<int>(zeros)});
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  }
  const std::size_t n = c.size() - 1;
  if (n == 0) return out;
  const double lead = c.back();
  for (double& v : c) v /= lead;
  if (n == 1) {
    out.push_back({-c[0], 1});
    return out;
  }
  std::mt19937_64 rng(kAberthSeed);
  for (int attempt = 0; attempt <= kAberthRestarts; ++attempt) {
    auto guesses = initial_guesses(c, attempt == 0 ? 0.0 : 0.1 * attempt, rng);
    if (auto z = aberth_attempt(c, std::move(guesses))) {
      auto clusters = cluster(c, *z);
      out.insert(out.end(), clusters.begin(), clusters.end());
      return out;
    }
  }
  throw MathError(ErrorKind::kNoConvergence, "root solver did not converge within " +
                                                 std::to_string(kAberthIterationCap) +
                                                 " iterations after restarts");
}

// ---------------------------------------------------------------------------
// Exact polynomial arithmetic over Q (degree-ascending vectors).

using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rderivative(const RPoly& p) {
  RPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * p[k]);
  trim(d);
  return d;
}

// Returns (quotient, remainder).
std::pair<RPoly, RPoly> rdivmod(RPoly num, const RPoly& den) {
  if (den.empty()) throw MathError(ErrorKind::kInternal, "division by zero polynomial");
  trim(num);
  if (num.size() < den.size()) return {RPoly{}, num};
  RPoly q(num.size() - den.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational coef = num[k + den.size() - 1] / den.back();
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= coef * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(q);
  return {q, num};
}

RPoly rmonic(RPoly p) {
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RPoly rgcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = rdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : rmonic(a);
}

RPoly rsub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

// Yun's algorithm: returns (factor, multiplicity) with factors square-free and
// pairwise coprime.
std::vector<std::pair<RPoly, int>> squarefree_decomposition(const RPoly& p) {
  std::vector<std::pair<RPoly, int>> out;
  RPoly dp = rderivative(p);
  RPoly a = rgcd(p, dp);
  RPoly b = rdivmod(p, a).first;
  RPoly c = rdivmod(dp, a).first;
  RPoly d = rsub(c, rderivative(b));
  for (int mult = 1; b.size() > 1; ++mult) {
    RPoly g = rgcd(b, d);
    if (g.empty()) g = RPoly{Rational(1)};
    if (g.size() > 1) out.emplace_back(rmonic(g), mult);
    RPoly next_b = rdivmod(b, g).first;
    c = rdivmod(d, g).first;
    b = std::move(next_b);
    d = rsub(c, rderivative(b));
  }
  return out;
}

BigInt common_denominator(const RPoly& p) {
  BigInt l = 1;
  for (const auto& c : p) {
    BigInt den = denominator(c);
    l = l / boost::multiprecision::gcd(l, den) * den;
  }
  return l;
}

// Candidate rationals near v: continued-fraction convergents and the nearest
// multiple of 1/denominator.
std::vector<Rational> rational_candidates(double v, const BigInt& denominator_hint) {
  std::vector<Rational> out;
  if (!std::isfinite(v)) return out;
  const double scaled = v * denominator_hint.convert_to<double>();
  if (std::isfinite(scaled) && std::abs(scaled) < 1e18) {
    out.emplace_back(BigInt(static_cast<long long>(std::llround(scaled))), denominator_hint);
  }
  // Convergents h/k from the continued fraction of v.
  BigInt h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  double x = v;
  for (int term = 0; term < 40; ++term) {
    double a = std::floor(x);
    if (std::abs(a) > 1e15) break;
    BigInt ai(static_cast<long long>(a));
    BigInt h = ai * h_prev + h_prev2;
    BigInt k = ai * k_prev + k_prev2;
    out.emplace_back(h, k);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    double frac = x - a;
    if (frac < 1e-15 || k > BigInt("1000000000000")) break;
    x = 1.0 / frac;
  }
  return out;
}

std::vector<double> to_doubles(const RPoly& p) {
  std::vector<double> out;
  for (const auto& c : p) out.push_back(c.convert_to<double>());
  return out;
}

bool is_rational_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  BigInt n = numerator(q), d = denominator(q);
  BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

void push_quadratic(std::vector<ClassCandidate<Rational>>& out, const RPoly& monic_quad, int mult) {
  // x^2 - T x + N
  Rational t = -monic_quad[1];
  Rational n = monic_quad[0];
  Rational disc = t * t - 4 * n;
  Rational s;
  if (is_rational_square(disc, s)) {
    out.push_back(ClassCandidate<Rational>::central((t + s) / 2, mult));
    out.push_back(ClassCandidate<Rational>::central((t - s) / 2, mult));
  } else {
    out.push_back(ClassCandidate<Rational>::quadratic(t, n, mult));
  }
}

void split_squarefree(RPoly q, int mult, std::vector<ClassCandidate<Rational>>& out) {
  q = rmonic(q);
  // Rational roots.
  {
    const BigInt hint = common_denominator(q);
    auto roots = aberth_roots(to_doubles(q));
    for (const auto& z : roots) {
      if (q.size() <= 1) break;
      if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
      for (const auto& r : rational_candidates(z.real(), hint)) {
        auto [quot, rem] = rdivmod(q, RPoly{-r, Rational(1)});
        if (rem.empty()) {
          out.push_back(ClassCandidate<Rational>::central(r, mult));
          q = quot;
          break;
        }
      }
    }
  }
  const int d = static_cast<int>(q.size()) - 1;
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(ClassCandidate<Rational>::central(-q[0] / q[1], mult));
    return;
  }
  if (d == 2) {
    push_quadratic(out, q, mult);
    return;
  }
  if (d == 4) {
    const BigInt hint = common_denominator(q);
    auto z = aberth_roots(to_doubles(q));
    const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairings) {
      Complex t = z[static_cast<std::size_t>(pr[0])] + z[static_cast<std::size_t>(pr[1])];
      Complex n = z[static_cast<std::size_t>(pr[0])] * z[static_cast<std::size_t>(pr[1])];
      if (std::abs(t.imag()) > 1e-6 * (1.0 + std::abs(t)) || std::abs(n.imag()) > 1e-6 * (1.0 + std::abs(n))) {
        continue;
      }
      for (const auto& tr : rational_candidates(t.real(), hint)) {
        for (const auto& nr : rational_candidates(n.real(), hint)) {
          RPoly quad{nr, -tr, Rational(1)};
          auto [quot, rem] = rdivmod(q, quad);
          if (rem.empty()) {
            push_quadratic(out, quad, mult);
            push_quadratic(out, rmonic(quot), mult);
            return;
          }
        }
      }
    }
  }
  // Irreducible cubic or quartic over Q: no element of a quadratic-over-F
  // algebra has it as minimal polynomial, so it contributes no class.
}

template <FieldScalar S>
void sort_candidates(std::vector<ClassCandidate<S>>& v) {
  std::sort(v.begin(), v.end(), [](const ClassCandidate<S>& a, const ClassCandidate<S>& b) {
    if (a.kind != b.kind) return a.kind == CandidateKind::kCentralRoot;
    if (a.is_central()) return a.root < b.root;
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.trace < b.trace;
  });
}

}  // namespace

double residual_scale(const std::vector<double>& coeffs, double abs_z) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * abs_z + std::abs(*it);
  return acc;
}

std::vector<std::complex<double>> aberth_roots(const std::vector<double>& coeffs) {
  std::vector<Complex> out;
  for (const auto& c : root_clusters(coeffs)) {
    for (int k = 0; k < c.multiplicity; ++k) out.push_back(c.value);
  }
  return out;
}

template <>
std::vector<ClassCandidate<double>> central_roots<double>(const CentralPoly<double>& p) {
  if (p.is_zero()) throw MathError(ErrorKind::kInvalidInput, "zero polynomial");
  auto clusters = root_clusters(p.coeffs());
  std::vector<ClassCandidate<double>> out;
  std::vector<RootCluster> upper, lower;
  for (const auto& c : clusters) {
    double scale = 1.0 + std::abs(c.value);
    if (std::abs(c.value.imag()) <= kPairingTolerance * scale) {
      out.push_back(ClassCandidate<double>::central(c.value.real(), c.multiplicity));
    } else if (c.value.imag() > 0) {
      upper.push_back(c);
    } else {
      lower.push_back(c);
    }
  }
  std::vector<bool> used(lower.size(), false);
  for (const auto& u : upper) {
    std::size_t best = lower.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (used[k]) continue;
      double dist = std::abs(u.value - std::conj(lower[k].value));
      if (dist < best_dist) {
        best_dist = dist;
        best = k;
      }
    }
    if (best == lower.size() || best_dist >= kPairingTolerance * (1.0 + std::abs(u.value)) ||
        lower[best].multiplicity != u.multiplicity) {
      throw MathError(ErrorKind::kNoConvergence, "complex root without conjugate partner");
    }
    used[best] = true;
    Complex z = 0.5 * (u.value + std::conj(lower[best].value));
    out.push_back(ClassCandidate<double>::quadratic(2.0 * z.real(), std::norm(z), u.multiplicity));
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw MathError(ErrorKind::kNoConvergence, "complex root without conjugate partner");
  }
  sort_candidates(out);
  return out;
}

template <>
std::vector<ClassCandidate<Rational>> central_roots<Rational>(const CentralPoly<Rational>& p) {
  if (p.is_zero()) throw MathError(ErrorKind::kInvalidInput, "zero polynomial");
  if (p.degree() > 4) {
    throw MathError(ErrorKind::kUnsupportedDegree,
                    "exact root classes are supported up to degree 4, got " + std::to_string(p.degree()));
  }
  std::vector<ClassCandidate<Rational>> out;
  if (p.degree() == 0) return out;
  for (auto& [factor, mult] : squarefree_decomposition(p.coeffs())) split_squarefree(factor, mult, out);
  sort_candidates(out);
  return out;
}

}  // namespace octo
