#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <ostream>

#include <Eigen/Dense>

#include "octo/scalar.hpp"

namespace octo {

inline constexpr int kOctonionDim = 8;

template <FieldScalar S>
using Coords = Eigen::Matrix<S, kOctonionDim, 1>;
template <FieldScalar S>
using LinearMap = Eigen::Matrix<S, kOctonionDim, kOctonionDim>;

/// Structure constants (alpha, beta, gamma): i^2 = alpha, j^2 = beta,
/// ij = -ji, l^2 = gamma. The multiplication table of the basis
/// (1, i, j, k = ij, l, il, jl, kl) is generated once by Cayley doubling
/// and shared between copies.
template <FieldScalar S>
class AlgebraParams {
 public:
  struct Table {
    std::array<std::array<int, kOctonionDim>, kOctonionDim> index;
    std::array<std::array<S, kOctonionDim>, kOctonionDim> coef;
    std::array<S, kOctonionDim> norm_diag;  // norm(e_a)
    bool integral = true;                    // every coef has denominator 1
  };

  /// Real default (-1, -1, -1): Hamilton quaternions doubled to the octonions.
  static const AlgebraParams& standard();
  static AlgebraParams make(S alpha, S beta, S gamma);

  const S& alpha() const { return impl_->alpha; }
  const S& beta() const { return impl_->beta; }
  const S& gamma() const { return impl_->gamma; }
  const Table& table() const { return impl_->table; }

  /// Norm form positive definite; over Q and R this is equivalent to being a
  /// division algebra.
  bool is_definite() const { return alpha() < 0 && beta() < 0 && gamma() < 0; }

  friend bool operator==(const AlgebraParams& a, const AlgebraParams& b) {
    return a.impl_ == b.impl_ ||
           (a.alpha() == b.alpha() && a.beta() == b.beta() && a.gamma() == b.gamma());
  }

 private:
  struct Impl {
    S alpha, beta, gamma;
    Table table;
  };
  explicit AlgebraParams(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Product by the recursive Cayley doubling (q + r l)(s + t l) =
/// qs + c t* r + (t q + r s*) l over the chain F -> F(i) -> quaternions ->
/// octonions, with c = alpha, beta, gamma per level. Used to generate the
/// table and as an independent route in tests.
template <FieldScalar S>
Coords<S> doubling_product(const Coords<S>& x, const Coords<S>& y, const S& alpha, const S& beta,
                           const S& gamma);

/// Exact product for tables with integral coefficients: clears denominators,
/// accumulates in integers and normalizes once per output coordinate.
Coords<Rational> exact_table_product(const Coords<Rational>& x, const Coords<Rational>& y,
                                     const AlgebraParams<Rational>::Table& table);
/// sum_a w_a x_a y_a for integral weights, same technique.
Rational exact_weighted_dot(const Coords<Rational>& x, const Coords<Rational>& y,
                            const std::array<Rational, kOctonionDim>& weights);

template <FieldScalar S>
class Octonion {
 public:
  explicit Octonion(const AlgebraParams<S>& params = AlgebraParams<S>::standard())
      : params_(params) {
    coords_.setZero();
  }
  Octonion(const AlgebraParams<S>& params, const Coords<S>& coords)
      : params_(params), coords_(coords) {}

  static Octonion scalar(const AlgebraParams<S>& params, const S& s) {
    Octonion x(params);
    x.coords_[0] = s;
    return x;
  }
  static Octonion basis(const AlgebraParams<S>& params, int index) {
    Octonion x(params);
    x.coords_[index] = S(1);
    return x;
  }
  static Octonion from_list(const AlgebraParams<S>& params, std::initializer_list<S> values) {
    Octonion x(params);
    int k = 0;
    for (const auto& v : values) x.coords_[k++] = v;
    return x;
  }

  const AlgebraParams<S>& params() const { return params_; }
  const Coords<S>& coords() const { return coords_; }
  const S& operator[](int k) const { return coords_[k]; }

  Octonion& operator+=(const Octonion& o) {
    check_params(o);
    coords_ += o.coords_;
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    check_params(o);
    coords_ -= o.coords_;
    return *this;
  }
  Octonion& operator*=(const S& s) {
    coords_ *= s;
    return *this;
  }
  Octonion& operator/=(const S& s) {
    coords_ /= s;
    return *this;
  }

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(const Octonion& a) { return Octonion(a.params_, -a.coords_); }
  friend Octonion operator*(Octonion a, const S& s) { return a *= s; }
  friend Octonion operator*(const S& s, Octonion a) { return a *= s; }
  friend Octonion operator/(Octonion a, const S& s) { return a /= s; }
  friend Octonion operator+(Octonion a, const S& s) {
    a.coords_[0] += s;
    return a;
  }
  friend Octonion operator-(Octonion a, const S& s) {
    a.coords_[0] -= s;
    return a;
  }

  /// Algebra product via the generated structure table.
  friend Octonion operator*(const Octonion& x, const Octonion& y) {
    x.check_params(y);
    const auto& t = x.params_.table();
    if constexpr (kIsExact<S>) {
      if (t.integral) return Octonion(x.params_, exact_table_product(x.coords_, y.coords_, t));
    }
    Octonion out(x.params_);
    for (int a = 0; a < kOctonionDim; ++a) {
      if (x.coords_[a] == S(0)) continue;
      for (int b = 0; b < kOctonionDim; ++b) {
        if (y.coords_[b] == S(0)) continue;
        out.coords_[t.index[a][b]] += t.coef[a][b] * x.coords_[a] * y.coords_[b];
      }
    }
    return out;
  }

  /// Exact coordinate equality.
  friend bool operator==(const Octonion& a, const Octonion& b) {
    return a.params_ == b.params_ && a.coords_ == b.coords_;
  }

  void check_params(const Octonion& o) const {
    if (!(params_ == o.params_)) {
      throw MathError(ErrorKind::kInvalidInput, "octonions from different algebras");
    }
  }

 private:
  AlgebraParams<S> params_;
  Coords<S> coords_;
};

template <FieldScalar S>
Octonion<S> mul(const Octonion<S>& x, const Octonion<S>& y) {
  return x * y;
}

template <FieldScalar S>
Octonion<S> conj(const Octonion<S>& x) {
  Coords<S> c = -x.coords();
  c[0] = x[0];
  return Octonion<S>(x.params(), c);
}

template <FieldScalar S>
S trace(const Octonion<S>& x) {
  return x[0] + x[0];
}

template <FieldScalar S>
S re(const Octonion<S>& x) {
  return x[0];
}

template <FieldScalar S>
Octonion<S> im(const Octonion<S>& x) {
  Coords<S> c = x.coords();
  c[0] = S(0);
  return Octonion<S>(x.params(), c);
}

/// x * conj(x), evaluated through the diagonal norm form.
template <FieldScalar S>
S norm(const Octonion<S>& x) {
  const auto& t = x.params().table();
  if constexpr (kIsExact<S>) {
    if (t.integral) return exact_weighted_dot(x.coords(), x.coords(), t.norm_diag);
  }
  S acc(0);
  for (int a = 0; a < kOctonionDim; ++a) acc += t.norm_diag[a] * x[a] * x[a];
  return acc;
}

/// Polar form b(x, y) = norm(x + y) - norm(x) - norm(y).
template <FieldScalar S>
S polar(const Octonion<S>& x, const Octonion<S>& y) {
  x.check_params(y);
  const auto& t = x.params().table();
  if constexpr (kIsExact<S>) {
    if (t.integral) return 2 * exact_weighted_dot(x.coords(), y.coords(), t.norm_diag);
  }
  S acc(0);
  for (int a = 0; a < kOctonionDim; ++a) acc += t.norm_diag[a] * x[a] * y[a];
  return acc + acc;
}

inline double abs(const Octonion<double>& x) { return std::sqrt(std::max(0.0, norm(x))); }

/// Largest coordinate magnitude; scale for approximate comparisons.
template <FieldScalar S>
double max_coord(const Octonion<S>& x) {
  double m = 0.0;
  for (int a = 0; a < kOctonionDim; ++a) m = std::max(m, ScalarTraits<S>::magnitude(x[a]));
  return m;
}

template <FieldScalar S>
Octonion<S> commutator(const Octonion<S>& x, const Octonion<S>& y) {
  return x * y - y * x;
}

template <FieldScalar S>
bool is_central(const Octonion<S>& x, double scale = 1.0) {
  for (int a = 1; a < kOctonionDim; ++a) {
    if (!is_zero(x[a], scale)) return false;
  }
  return true;
}

/// Zero within the real-mode tolerance (every coordinate), exactly zero in
/// exact mode.
template <FieldScalar S>
bool is_zero(const Octonion<S>& x, double scale = 1.0) {
  for (int a = 0; a < kOctonionDim; ++a) {
    if (!is_zero(x[a], scale)) return false;
  }
  return true;
}

template <FieldScalar S>
bool approx_equal(const Octonion<S>& x, const Octonion<S>& y, double scale = 1.0) {
  return is_zero(Octonion<S>(x - y), scale);
}

/// conj(x) / norm(x). Throws kNotInvertible when the norm vanishes.
template <FieldScalar S>
Octonion<S> inverse(const Octonion<S>& x) {
  S n = norm(x);
  if (n == S(0) || (!kIsExact<S> && is_zero(n, max_coord(x) * max_coord(x)))) {
    throw MathError(ErrorKind::kNotInvertible, "element has zero norm");
  }
  return conj(x) / n;
}

template <FieldScalar S>
Octonion<S> power(const Octonion<S>& x, int t) {
  Octonion<S> acc = Octonion<S>::scalar(x.params(), S(1));
  for (int k = 0; k < t; ++k) acc = acc * x;
  return acc;
}

/// Matrix of y -> x * y.
template <FieldScalar S>
LinearMap<S> left_mul_matrix(const Octonion<S>& x) {
  LinearMap<S> m;
  for (int b = 0; b < kOctonionDim; ++b) {
    m.col(b) = (x * Octonion<S>::basis(x.params(), b)).coords();
  }
  return m;
}

/// Matrix of y -> y * x.
template <FieldScalar S>
LinearMap<S> right_mul_matrix(const Octonion<S>& x) {
  LinearMap<S> m;
  for (int b = 0; b < kOctonionDim; ++b) {
    m.col(b) = (Octonion<S>::basis(x.params(), b) * x).coords();
  }
  return m;
}

/// Returns delta with trace(delta) = 0, norm(delta) != 0 and
/// delta * lambda = mu * delta. The candidate is the nullspace basis vector of
/// largest |norm|; random combinations (seeded) are tried if all are isotropic.
template <FieldScalar S>
Octonion<S> conjugating_element(const Octonion<S>& lambda, const Octonion<S>& mu,
                                std::uint64_t seed = 0xC0FFEE);

/// Quaternion subalgebra Q = span(1, u, v, uv) together with an element ell
/// orthogonal to Q, so that the algebra is the doubling Q + Q ell with
/// ell^2 = gamma_eff.
template <FieldScalar S>
struct QuatSubalgebra {
  std::array<Octonion<S>, 4> basis;  // 1, u, v, uv
  Octonion<S> ell;
  S gamma_eff;

  /// Element a0 + a1 u + a2 v + a3 uv.
  Octonion<S> element(const std::array<S, 4>& a) const {
    Octonion<S> x = basis[0] * a[0];
    for (int k = 1; k < 4; ++k) x += basis[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)];
    return x;
  }
  /// Orthogonal projection onto Q with respect to the polar form.
  Octonion<S> project(const Octonion<S>& x) const;
};

/// A quaternion subalgebra containing both e and g. Throws
/// kDegenerateCommutative when both are central.
template <FieldScalar S>
QuatSubalgebra<S> quat_subalgebra_containing(const Octonion<S>& e, const Octonion<S>& g);

template <FieldScalar S>
std::ostream& operator<<(std::ostream& os, const Octonion<S>& x);

}  // namespace octo
