#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "octo/error.hpp"

namespace octo {

/// Exact field element. Expression templates are off so the type behaves as a
/// plain value inside Eigen containers and `auto` declarations.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Comparison tolerance shared by every approximate-mode equality check.
/// Defaults to 1e-9.
double real_epsilon();
void set_real_epsilon(double eps);

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static constexpr std::string_view kName = "real";

  static bool is_zero(double x, double scale = 1.0) {
    return std::abs(x) <= real_epsilon() * scale;
  }
  static double to_double(double x) { return x; }
  static double magnitude(double x) { return std::abs(x); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr std::string_view kName = "exact";

  static bool is_zero(const Rational& x, double /*scale*/ = 1.0) { return x == 0; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static double magnitude(const Rational& x) { return std::abs(to_double(x)); }
};

template <typename S>
concept FieldScalar = requires { ScalarTraits<S>::kExact; };

template <FieldScalar S>
inline constexpr bool kIsExact = ScalarTraits<S>::kExact;

template <FieldScalar S>
bool is_zero(const S& x, double scale = 1.0) {
  return ScalarTraits<S>::is_zero(x, scale);
}

template <FieldScalar S>
bool approx_equal(const S& a, const S& b, double scale = 1.0) {
  return ScalarTraits<S>::is_zero(a - b, scale);
}

template <FieldScalar S>
double to_double(const S& x) {
  return ScalarTraits<S>::to_double(x);
}

template <FieldScalar S>
S from_double(double x);
template <>
inline double from_double<double>(double x) {
  return x;
}
template <>
inline Rational from_double<Rational>(double x) {
  return Rational(x);
}

/// Polynomial with coefficients in the ground field, degree-ascending.
/// The zero polynomial has no coefficients.
template <FieldScalar S>
class CentralPoly {
 public:
  CentralPoly() = default;
  explicit CentralPoly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<S>& coeffs() const { return coeffs_; }
  const S& operator[](int t) const { return coeffs_[static_cast<std::size_t>(t)]; }
  const S& leading() const { return coeffs_.back(); }

  S operator()(const S& x) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == S(0)) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

enum class CandidateKind { kCentralRoot, kQuadraticClass };

/// One root class of a central polynomial: either a root in the ground field
/// or an irreducible quadratic factor x^2 - T x + N.
template <FieldScalar S>
struct ClassCandidate {
  CandidateKind kind = CandidateKind::kCentralRoot;
  S root{0};   // central-root only
  S trace{0};  // T; for a central root this is 2r
  S norm{0};   // N; for a central root this is r^2
  int multiplicity = 1;

  static ClassCandidate central(S r, int mult = 1) {
    ClassCandidate c;
    c.kind = CandidateKind::kCentralRoot;
    c.trace = r + r;
    c.norm = r * r;
    c.root = std::move(r);
    c.multiplicity = mult;
    return c;
  }
  static ClassCandidate quadratic(S t, S n, int mult = 1) {
    ClassCandidate c;
    c.kind = CandidateKind::kQuadraticClass;
    c.trace = std::move(t);
    c.norm = std::move(n);
    c.multiplicity = mult;
    return c;
  }

  bool is_central() const { return kind == CandidateKind::kCentralRoot; }
};

/// Root classes of a central polynomial.
///
/// Real mode: all complex roots from a simultaneous-iteration solver, with
/// clusters merged into multiple roots and conjugate pairs a +- bi merged into
/// quadratic classes (T = 2a, N = a^2 + b^2).
///
/// Exact mode (degree <= 4): square-free decomposition over Q, rational roots,
/// and rational quadratic factors. Factors that are irreducible of degree >= 3
/// over Q contribute no classes, since every algebra element satisfies a
/// quadratic over the ground field.
template <FieldScalar S>
std::vector<ClassCandidate<S>> central_roots(const CentralPoly<S>& p);

/// Complex roots (with multiplicity) of a real polynomial, degree-ascending
/// coefficients. Aberth iteration with clustered multiple roots averaged.
/// Throws kNoConvergence after the iteration cap and restarts are exhausted.
std::vector<std::complex<double>> aberth_roots(const std::vector<double>& coeffs);

/// Real-mode residual scale for a polynomial evaluated at z: sum |c_k| |z|^k.
double residual_scale(const std::vector<double>& coeffs, double abs_z);

std::string format_scalar(double x);
std::string format_scalar(const Rational& x);

/// Accepts integers, decimals with optional exponent, and "p/q".
template <FieldScalar S>
S parse_scalar(std::string_view text);

}  // namespace octo
