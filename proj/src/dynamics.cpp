#include "octo/dynamics.hpp"

#include <cmath>

namespace octo {

namespace {

double imag_abs(const Octonion<double>& x) { return abs(im(x)); }

bool finite(const Octonion<double>& x) { return x.coords().allFinite(); }

void require_fixed(const OPolynomial<double>& f, const Octonion<double>& alpha) {
  if (abs(Octonion<double>(eval(f, alpha) - alpha)) >= kFixedPointTolerance * (1.0 + abs(alpha))) {
    throw MathError(ErrorKind::kNotAFixedPoint, "f(alpha) != alpha");
  }
}

void require_fixed(const OPolynomial<Rational>& f, const Octonion<Rational>& alpha) {
  if (!(eval(f, alpha) == alpha)) throw MathError(ErrorKind::kNotAFixedPoint, "f(alpha) != alpha");
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kAttracting: return "attracting";
    case Verdict::kRepelling: return "repelling";
    case Verdict::kAmbivalent: return "ambivalent";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

template <FieldScalar S>
void require_monic_quadratic(const OPolynomial<S>& f) {
  if (f.degree() != 2 || !(f.leading() == Octonion<S>::scalar(f.params(), S(1)))) {
    throw MathError(ErrorKind::kInvalidInput, "expected a monic quadratic x^2 + Bx + C");
  }
}

template <FieldScalar S>
RootSet<S> fixed_points(const OPolynomial<S>& f) {
  require_monic_quadratic(f);
  return roots(f - OPolynomial<S>::x(f.params()));
}

double multiplier_upper(const Octonion<double>& alpha, const Octonion<double>& b) {
  const double re2 = re(alpha) * 2.0 + re(b);
  const double s = imag_abs(alpha + b) + imag_abs(alpha);
  return std::sqrt(re2 * re2 + s * s);
}

double multiplier_lower(const Octonion<double>& alpha, const Octonion<double>& b) {
  const double re2 = re(alpha) * 2.0 + re(b);
  const double s = imag_abs(alpha + b) - imag_abs(alpha);
  return std::sqrt(re2 * re2 + s * s);
}

FixedPointReport classify_fixed(const OPolynomial<double>& f, const Octonion<double>& alpha) {
  require_monic_quadratic(f);
  require_fixed(f, alpha);
  FixedPointReport r{alpha, f.coeff(1), 0.0, 0.0, Verdict::kAmbivalent};
  r.M = multiplier_upper(alpha, r.B);
  r.m = multiplier_lower(alpha, r.B);
  if (r.M < 1.0) {
    r.verdict = Verdict::kAttracting;
  } else if (r.m > 1.0) {
    r.verdict = Verdict::kRepelling;
  }
  return r;
}

template <FieldScalar S>
CompositionCheck verify_composition_fixed(const OPolynomial<S>& f, const Octonion<S>& alpha,
                                          int n_max) {
  if (n_max < 1) throw MathError(ErrorKind::kInvalidInput, "n_max must be >= 1");
  require_fixed(f, alpha);
  OPolynomial<S> iterate = f;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) iterate = compose(f, iterate);
    Octonion<S> value = eval(iterate, alpha);
    bool ok;
    if constexpr (kIsExact<S>) {
      ok = value == alpha;
    } else {
      ok = approx_equal(value, alpha, 1.0 + eval_magnitude(iterate, alpha));
    }
    if (!ok) return {false, n};
  }
  return {};
}

template <FieldScalar S>
Octonion<S> composition_gap(const OPolynomial<S>& f, const Octonion<S>& lambda, int n) {
  return eval(iterate_comp(f, n), lambda) - iterate_sub(f, lambda, n);
}

OrbitRecord orbit(const OPolynomial<double>& f, const Octonion<double>& start, int n_max,
                  double escape_radius, double tol) {
  if (n_max < 1) throw MathError(ErrorKind::kInvalidInput, "n_max must be >= 1");
  OrbitRecord rec{start, {start}, false, std::nullopt};
  if (!finite(start) || abs(start) >= escape_radius) {
    rec.escaped = true;
    return rec;
  }
  Octonion<double> z = start;
  for (int k = 1; k <= n_max; ++k) {
    z = eval(f, z);
    rec.iterates.push_back(z);
    if (!finite(z) || abs(z) >= escape_radius) {
      rec.escaped = true;
      return rec;
    }
    for (int j = 0; j < k; ++j) {
      if (abs(Octonion<double>(z - rec.iterates[static_cast<std::size_t>(j)])) < tol) {
        rec.detected_period = k - j;
        return rec;
      }
    }
  }
  return rec;
}

std::optional<int> detect_pseudo_period(const OPolynomial<double>& f, const Octonion<double>& alpha,
                                        int n_max, double tol) {
  Octonion<double> z = alpha;
  for (int n = 1; n <= n_max; ++n) {
    z = eval(f, z);
    if (!finite(z)) return std::nullopt;
    if (abs(Octonion<double>(z - alpha)) < tol) return n;
  }
  return std::nullopt;
}

PseudoPeriodReport classify_pseudo_periodic(const OPolynomial<double>& f,
                                            const Octonion<double>& alpha, int n, double tol) {
  require_monic_quadratic(f);
  if (n < 1) throw MathError(ErrorKind::kInvalidInput, "order must be >= 1");
  auto detected = detect_pseudo_period(f, alpha, n, tol);
  if (detected != n) {
    throw MathError(ErrorKind::kOrderMismatch,
                    detected ? "minimal order is " + std::to_string(*detected)
                             : "alpha does not return within " + std::to_string(n) + " steps");
  }
  PseudoPeriodReport r;
  r.alpha = alpha;
  r.n = n;
  const Octonion<double> b = f.coeff(1);
  Octonion<double> z = alpha;
  r.product = 1.0;
  for (int i = 0; i < n; ++i) {
    r.cycle.push_back(z);
    const double upper = multiplier_upper(z, b);
    r.Mi.push_back(upper * upper);
    r.product *= upper;
    z = eval(f, z);
  }
  r.verdict = r.product < 1.0 ? Verdict::kAttracting : Verdict::kInconclusive;
  return r;
}

double step_ratio(const OPolynomial<double>& f, const Octonion<double>& alpha,
                  const Octonion<double>& direction, double t) {
  Octonion<double> step = direction * t;
  return abs(Octonion<double>(eval(f, alpha + step) - alpha)) / abs(step);
}

#define OCTO_INSTANTIATE(S)                                                                       \
  template void require_monic_quadratic<S>(const OPolynomial<S>&);                                \
  template RootSet<S> fixed_points<S>(const OPolynomial<S>&);                                     \
  template CompositionCheck verify_composition_fixed<S>(const OPolynomial<S>&, const Octonion<S>&, \
                                                        int);                                     \
  template Octonion<S> composition_gap<S>(const OPolynomial<S>&, const Octonion<S>&, int);

OCTO_INSTANTIATE(double)
OCTO_INSTANTIATE(Rational)

#undef OCTO_INSTANTIATE

}  // namespace octo
