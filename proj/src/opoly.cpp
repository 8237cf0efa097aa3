#include "octo/opoly.hpp"

#include <algorithm>

namespace octo {

namespace {

template <FieldScalar S>
std::vector<Octonion<S>> zeros(const AlgebraParams<S>& params, std::size_t n) {
  return std::vector<Octonion<S>>(n, Octonion<S>(params));
}

template <FieldScalar S>
void check_same(const OPolynomial<S>& f, const OPolynomial<S>& g) {
  if (!(f.params() == g.params())) {
    throw MathError(ErrorKind::kInvalidInput, "polynomials over different algebras");
  }
}

}  // namespace

template <FieldScalar S>
OPolynomial<S> operator+(const OPolynomial<S>& f, const OPolynomial<S>& g) {
  check_same(f, g);
  auto out = zeros(f.params(), static_cast<std::size_t>(std::max(f.degree(), g.degree()) + 1));
  for (int t = 0; t <= f.degree(); ++t) out[static_cast<std::size_t>(t)] += f.coeff(t);
  for (int t = 0; t <= g.degree(); ++t) out[static_cast<std::size_t>(t)] += g.coeff(t);
  return OPolynomial<S>(f.params(), std::move(out));
}

template <FieldScalar S>
OPolynomial<S> operator-(const OPolynomial<S>& f) {
  std::vector<Octonion<S>> out;
  for (const auto& c : f.coeffs()) out.push_back(-c);
  return OPolynomial<S>(f.params(), std::move(out));
}

template <FieldScalar S>
OPolynomial<S> operator-(const OPolynomial<S>& f, const OPolynomial<S>& g) {
  return f + (-g);
}

template <FieldScalar S>
OPolynomial<S> operator*(const OPolynomial<S>& f, const OPolynomial<S>& g) {
  check_same(f, g);
  if (f.is_zero() || g.is_zero()) return OPolynomial<S>(f.params());
  auto out = zeros(f.params(), static_cast<std::size_t>(f.degree() + g.degree() + 1));
  for (int r = 0; r <= f.degree(); ++r) {
    for (int s = 0; s <= g.degree(); ++s) {
      out[static_cast<std::size_t>(r + s)] += f.coeff(r) * g.coeff(s);
    }
  }
  return OPolynomial<S>(f.params(), std::move(out));
}

template <FieldScalar S>
OPolynomial<S> scale_left(const Octonion<S>& c, const OPolynomial<S>& f) {
  std::vector<Octonion<S>> out;
  for (const auto& a : f.coeffs()) out.push_back(c * a);
  return OPolynomial<S>(f.params(), std::move(out));
}

template <FieldScalar S>
OPolynomial<S> scale_right(const OPolynomial<S>& f, const Octonion<S>& c) {
  std::vector<Octonion<S>> out;
  for (const auto& a : f.coeffs()) out.push_back(a * c);
  return OPolynomial<S>(f.params(), std::move(out));
}

template <FieldScalar S>
OPolynomial<S> conj_poly(const OPolynomial<S>& f) {
  std::vector<Octonion<S>> out;
  for (const auto& a : f.coeffs()) out.push_back(conj(a));
  return OPolynomial<S>(f.params(), std::move(out));
}

template <FieldScalar S>
CentralPoly<S> companion(const OPolynomial<S>& f) {
  if (f.is_zero()) throw MathError(ErrorKind::kInvalidInput, "companion of the zero polynomial");
  double scale = 1.0;
  for (const auto& a : f.coeffs()) scale += max_coord(a) * max_coord(a);
  OPolynomial<S> product = conj_poly(f) * f;
  std::vector<S> coeffs;
  for (const auto& c : product.coeffs()) {
    if (!is_central(c, 8.0 * scale)) {
      throw MathError(ErrorKind::kInternal, "companion polynomial has a non-central coefficient");
    }
    coeffs.push_back(c[0]);
  }
  return CentralPoly<S>(std::move(coeffs));
}

template <FieldScalar S>
Octonion<S> eval(const OPolynomial<S>& f, const Octonion<S>& lambda) {
  Octonion<S> acc(f.params());
  Octonion<S> lambda_power = Octonion<S>::scalar(f.params(), S(1));
  for (int t = 0; t <= f.degree(); ++t) {
    if (t > 0) lambda_power = lambda_power * lambda;
    acc += f.coeff(t) * lambda_power;
  }
  return acc;
}

double eval_magnitude(const OPolynomial<double>& f, const Octonion<double>& lambda) {
  const double r = abs(lambda);
  double acc = 0.0;
  for (int t = f.degree(); t >= 0; --t) acc = acc * r + abs(f.coeff(t));
  return acc;
}

template <FieldScalar S>
OPolynomial<S> power(const OPolynomial<S>& g, int t) {
  if (t < 0) throw MathError(ErrorKind::kInvalidInput, "negative power");
  OPolynomial<S> acc = OPolynomial<S>::constant(Octonion<S>::scalar(g.params(), S(1)));
  for (int k = 0; k < t; ++k) acc = g * acc;
  return acc;
}

template <FieldScalar S>
OPolynomial<S> power_left_nested(const OPolynomial<S>& g, int t) {
  if (t < 0) throw MathError(ErrorKind::kInvalidInput, "negative power");
  OPolynomial<S> acc = OPolynomial<S>::constant(Octonion<S>::scalar(g.params(), S(1)));
  for (int k = 0; k < t; ++k) acc = acc * g;
  return acc;
}

template <FieldScalar S>
OPolynomial<S> compose(const OPolynomial<S>& f, const OPolynomial<S>& g) {
  check_same(f, g);
  if (f.degree() > kComposeDegreeCap || g.degree() > kComposeDegreeCap) {
    throw MathError(ErrorKind::kResourceLimit,
                    "compose input degree exceeds " + std::to_string(kComposeDegreeCap));
  }
  OPolynomial<S> out(f.params());
  OPolynomial<S> g_power = OPolynomial<S>::constant(Octonion<S>::scalar(f.params(), S(1)));
  for (int t = 0; t <= f.degree(); ++t) {
    if (t > 0) g_power = g * g_power;
    out = out + scale_left(f.coeff(t), g_power);
  }
  return out;
}

template <FieldScalar S>
OPolynomial<S> iterate_comp(const OPolynomial<S>& f, int n) {
  if (n < 1) throw MathError(ErrorKind::kInvalidInput, "iteration count must be >= 1");
  OPolynomial<S> acc = f;
  for (int k = 1; k < n; ++k) acc = compose(f, acc);
  return acc;
}

template <FieldScalar S>
Octonion<S> iterate_sub(const OPolynomial<S>& f, const Octonion<S>& alpha, int n) {
  if (n < 1) throw MathError(ErrorKind::kInvalidInput, "iteration count must be >= 1");
  Octonion<S> z = alpha;
  for (int k = 0; k < n; ++k) z = eval(f, z);
  return z;
}

template <FieldScalar S>
LinearDivision<S> right_div_linear(const OPolynomial<S>& f, const Octonion<S>& lambda) {
  if (f.is_zero()) throw MathError(ErrorKind::kInvalidInput, "division of the zero polynomial");
  const int n = f.degree();
  if (n == 0) return {OPolynomial<S>(f.params()), f.coeff(0)};
  // b_{n-1} = a_n, b_{t-1} = a_t + b_t lambda, r = a_0 + b_0 lambda.
  auto b = zeros(f.params(), static_cast<std::size_t>(n));
  b[static_cast<std::size_t>(n - 1)] = f.coeff(n);
  for (int t = n - 1; t >= 1; --t) {
    b[static_cast<std::size_t>(t - 1)] = f.coeff(t) + b[static_cast<std::size_t>(t)] * lambda;
  }
  Octonion<S> r = f.coeff(0) + b[0] * lambda;
  return {OPolynomial<S>(f.params(), std::move(b)), r};
}

#define OCTO_INSTANTIATE(S)                                                                        \
  template OPolynomial<S> operator+ <S>(const OPolynomial<S>&, const OPolynomial<S>&);             \
  template OPolynomial<S> operator- <S>(const OPolynomial<S>&, const OPolynomial<S>&);             \
  template OPolynomial<S> operator- <S>(const OPolynomial<S>&);                                    \
  template OPolynomial<S> operator* <S>(const OPolynomial<S>&, const OPolynomial<S>&);             \
  template OPolynomial<S> scale_left<S>(const Octonion<S>&, const OPolynomial<S>&);                \
  template OPolynomial<S> scale_right<S>(const OPolynomial<S>&, const Octonion<S>&);               \
  template OPolynomial<S> conj_poly<S>(const OPolynomial<S>&);                                     \
  template CentralPoly<S> companion<S>(const OPolynomial<S>&);                                     \
  template Octonion<S> eval<S>(const OPolynomial<S>&, const Octonion<S>&);                         \
  template OPolynomial<S> power<S>(const OPolynomial<S>&, int);                                    \
  template OPolynomial<S> power_left_nested<S>(const OPolynomial<S>&, int);                        \
  template OPolynomial<S> compose<S>(const OPolynomial<S>&, const OPolynomial<S>&);                \
  template OPolynomial<S> iterate_comp<S>(const OPolynomial<S>&, int);                             \
  template Octonion<S> iterate_sub<S>(const OPolynomial<S>&, const Octonion<S>&, int);             \
  template LinearDivision<S> right_div_linear<S>(const OPolynomial<S>&, const Octonion<S>&);

OCTO_INSTANTIATE(double)
OCTO_INSTANTIATE(Rational)

#undef OCTO_INSTANTIATE

}  // namespace octo
