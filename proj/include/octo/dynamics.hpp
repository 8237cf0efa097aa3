#pragma once

#include <optional>
#include <vector>

#include "octo/roots.hpp"

namespace octo {

/// |eval(f, alpha) - alpha| must stay below this times (1 + |alpha|).
inline constexpr double kFixedPointTolerance = 1e-9;
inline constexpr double kPeriodTolerance = 1e-9;

enum class Verdict { kAttracting, kRepelling, kAmbivalent, kInconclusive };

std::string_view to_string(Verdict v);

struct FixedPointReport {
  Octonion<double> alpha;
  Octonion<double> B;
  double M = 0.0;
  double m = 0.0;
  Verdict verdict = Verdict::kAmbivalent;
};

struct OrbitRecord {
  Octonion<double> start;
  std::vector<Octonion<double>> iterates;  // iterates[k] = f^{*k}(start)
  bool escaped = false;
  std::optional<int> detected_period;
};

struct PseudoPeriodReport {
  Octonion<double> alpha;
  int n = 1;
  std::vector<Octonion<double>> cycle;  // alpha_i, i = 0..n-1
  std::vector<double> Mi;               // unsquare-rooted, as in the criterion
  double product = 0.0;                 // prod sqrt(M_i)
  Verdict verdict = Verdict::kInconclusive;
};

/// Throws kInvalidInput unless f = x^2 + B x + C.
template <FieldScalar S>
void require_monic_quadratic(const OPolynomial<S>& f);

/// Roots of f(x) - x for monic quadratic f.
template <FieldScalar S>
RootSet<S> fixed_points(const OPolynomial<S>& f);

/// M = sqrt(Re(2a+B)^2 + (|Im(a+B)| + |Im a|)^2), m likewise with a minus.
double multiplier_upper(const Octonion<double>& alpha, const Octonion<double>& b);
double multiplier_lower(const Octonion<double>& alpha, const Octonion<double>& b);

/// Attracting iff M < 1, repelling iff m > 1, ambivalent otherwise.
/// Throws kNotAFixedPoint when alpha is not fixed.
FixedPointReport classify_fixed(const OPolynomial<double>& f, const Octonion<double>& alpha);

struct CompositionCheck {
  bool ok = true;
  std::optional<int> failing_n;
};

/// eval(f^{o n}, alpha) == alpha for n = 1..n_max. Requires a fixed alpha
/// (kNotAFixedPoint otherwise); large n_max runs into the compose degree cap.
template <FieldScalar S>
CompositionCheck verify_composition_fixed(const OPolynomial<S>& f, const Octonion<S>& alpha,
                                          int n_max);

/// eval(f^{o n}, lambda) - f^{*n}(lambda).
template <FieldScalar S>
Octonion<S> composition_gap(const OPolynomial<S>& f, const Octonion<S>& lambda, int n);

/// Substitution orbit. Stops after n_max steps, on escape (|z| >= radius or
/// non-finite), or when an iterate revisits an earlier one within tol.
OrbitRecord orbit(const OPolynomial<double>& f, const Octonion<double>& start, int n_max,
                  double escape_radius, double tol = kPeriodTolerance);

/// Smallest n <= n_max with |f^{*n}(alpha) - alpha| < tol.
std::optional<int> detect_pseudo_period(const OPolynomial<double>& f, const Octonion<double>& alpha,
                                        int n_max, double tol = kPeriodTolerance);

/// Product criterion over the cycle; never reports repelling. Throws
/// kOrderMismatch unless n is the minimal pseudo-period.
PseudoPeriodReport classify_pseudo_periodic(const OPolynomial<double>& f,
                                            const Octonion<double>& alpha, int n,
                                            double tol = kPeriodTolerance);

/// |f(alpha + t d) - alpha| / |t d|: one-step ratio along direction d.
double step_ratio(const OPolynomial<double>& f, const Octonion<double>& alpha,
                  const Octonion<double>& direction, double t);

}  // namespace octo
