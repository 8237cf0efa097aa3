#pragma once

#include <span>
#include <utility>
#include <vector>

#include "octo/octonion.hpp"

namespace octo {

/// Largest degree accepted by compose for either argument.
inline constexpr int kComposeDegreeCap = 16;

/// Polynomial sum_t a_t x^t over the octonion algebra with x central. Stored
/// degree-ascending in left-coefficient form; trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
template <FieldScalar S>
class OPolynomial {
 public:
  explicit OPolynomial(const AlgebraParams<S>& params = AlgebraParams<S>::standard())
      : params_(params) {}
  OPolynomial(const AlgebraParams<S>& params, std::vector<Octonion<S>> coeffs)
      : params_(params), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) Octonion<S>(params_).check_params(c);
    trim();
  }

  static OPolynomial constant(const Octonion<S>& c) { return OPolynomial(c.params(), {c}); }
  /// c x^t
  static OPolynomial monomial(const Octonion<S>& c, int t) {
    std::vector<Octonion<S>> coeffs(static_cast<std::size_t>(t) + 1, Octonion<S>(c.params()));
    coeffs.back() = c;
    return OPolynomial(c.params(), std::move(coeffs));
  }
  static OPolynomial x(const AlgebraParams<S>& params) {
    return monomial(Octonion<S>::scalar(params, S(1)), 1);
  }

  const AlgebraParams<S>& params() const { return params_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Octonion<S>> coeffs() const { return coeffs_; }
  /// Coefficient of x^t; zero beyond the degree.
  Octonion<S> coeff(int t) const {
    if (t < 0 || t > degree()) return Octonion<S>(params_);
    return coeffs_[static_cast<std::size_t>(t)];
  }
  const Octonion<S>& leading() const { return coeffs_.back(); }

  friend bool operator==(const OPolynomial& a, const OPolynomial& b) {
    return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().coords().isZero()) coeffs_.pop_back();
  }

  AlgebraParams<S> params_;
  std::vector<Octonion<S>> coeffs_;
};

template <FieldScalar S>
OPolynomial<S> operator+(const OPolynomial<S>& f, const OPolynomial<S>& g);
template <FieldScalar S>
OPolynomial<S> operator-(const OPolynomial<S>& f, const OPolynomial<S>& g);
template <FieldScalar S>
OPolynomial<S> operator-(const OPolynomial<S>& f);

/// Convolution c_u = sum_{r+s=u} a_r b_s.
template <FieldScalar S>
OPolynomial<S> operator*(const OPolynomial<S>& f, const OPolynomial<S>& g);

template <FieldScalar S>
OPolynomial<S> add(const OPolynomial<S>& f, const OPolynomial<S>& g) {
  return f + g;
}
template <FieldScalar S>
OPolynomial<S> mul(const OPolynomial<S>& f, const OPolynomial<S>& g) {
  return f * g;
}

/// c * f: coefficients c a_t.
template <FieldScalar S>
OPolynomial<S> scale_left(const Octonion<S>& c, const OPolynomial<S>& f);
/// f * c: coefficients a_t c.
template <FieldScalar S>
OPolynomial<S> scale_right(const OPolynomial<S>& f, const Octonion<S>& c);

/// Coefficientwise involution.
template <FieldScalar S>
OPolynomial<S> conj_poly(const OPolynomial<S>& f);

/// conj_poly(f) * f, which has central coefficients. A coefficient with a
/// nonzero imaginary part (beyond tolerance) raises kInternal.
template <FieldScalar S>
CentralPoly<S> companion(const OPolynomial<S>& f);

/// sum_t a_t lambda^t.
template <FieldScalar S>
Octonion<S> eval(const OPolynomial<S>& f, const Octonion<S>& lambda);

/// Real-mode residual scale sum_t |a_t| |lambda|^t.
double eval_magnitude(const OPolynomial<double>& f, const Octonion<double>& lambda);

/// g^0 = 1, g^t = g * g^(t-1).
template <FieldScalar S>
OPolynomial<S> power(const OPolynomial<S>& g, int t);
/// The other bracketing, g^t = g^(t-1) * g; agrees with power() by power
/// associativity.
template <FieldScalar S>
OPolynomial<S> power_left_nested(const OPolynomial<S>& g, int t);

/// f o g = sum_t a_t g^t. Throws kResourceLimit past kComposeDegreeCap.
template <FieldScalar S>
OPolynomial<S> compose(const OPolynomial<S>& f, const OPolynomial<S>& g);

/// f o f o ... o f (n times), built as f o f^(o(n-1)).
template <FieldScalar S>
OPolynomial<S> iterate_comp(const OPolynomial<S>& f, int n);

/// f(f(...f(alpha))) (n substitutions).
template <FieldScalar S>
Octonion<S> iterate_sub(const OPolynomial<S>& f, const Octonion<S>& alpha, int n);

template <FieldScalar S>
struct LinearDivision {
  OPolynomial<S> quotient;
  Octonion<S> remainder;
};

/// f = g (x - lambda) + r by synthetic division; r equals eval(f, lambda).
template <FieldScalar S>
LinearDivision<S> right_div_linear(const OPolynomial<S>& f, const Octonion<S>& lambda);

}  // namespace octo
