#include "octo/octonion.hpp"

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "octo/linalg.hpp"

namespace octo {

namespace {

template <FieldScalar S>
using Flat = std::vector<S>;

template <FieldScalar S>
Flat<S> cd_conj(const Flat<S>& x) {
  Flat<S> out(x.size());
  out[0] = x[0];
  for (std::size_t k = 1; k < x.size(); ++k) out[k] = -x[k];
  return out;
}

// (q + r l)(s + t l) = qs + c t* r + (t q + r s*) l, recursively; `consts`
// holds the doubling constant of each level, innermost first.
template <FieldScalar S>
Flat<S> cd_mul(const Flat<S>& x, const Flat<S>& y, const std::array<S, 3>& consts) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t half = n / 2;
  const std::size_t level = (n == 2) ? 0 : (n == 4 ? 1 : 2);
  Flat<S> q(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(half));
  Flat<S> r(x.begin() + static_cast<std::ptrdiff_t>(half), x.end());
  Flat<S> s(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(half));
  Flat<S> t(y.begin() + static_cast<std::ptrdiff_t>(half), y.end());
  Flat<S> qs = cd_mul(q, s, consts);
  Flat<S> tr = cd_mul(cd_conj(t), r, consts);
  Flat<S> tq = cd_mul(t, q, consts);
  Flat<S> rs = cd_mul(r, cd_conj(s), consts);
  Flat<S> out(n);
  for (std::size_t k = 0; k < half; ++k) {
    out[k] = qs[k] + consts[level] * tr[k];
    out[half + k] = tq[k] + rs[k];
  }
  return out;
}

template <FieldScalar S>
typename AlgebraParams<S>::Table build_table(const S& alpha, const S& beta, const S& gamma) {
  typename AlgebraParams<S>::Table table;
  for (int a = 0; a < kOctonionDim; ++a) {
    for (int b = 0; b < kOctonionDim; ++b) {
      Coords<S> ea = Coords<S>::Zero(), eb = Coords<S>::Zero();
      ea[a] = S(1);
      eb[b] = S(1);
      Coords<S> prod = doubling_product<S>(ea, eb, alpha, beta, gamma);
      int nonzero = -1;
      for (int c = 0; c < kOctonionDim; ++c) {
        if (prod[c] == S(0)) continue;
        if (nonzero >= 0) throw MathError(ErrorKind::kInternal, "basis product is not monomial");
        nonzero = c;
      }
      if (nonzero < 0) throw MathError(ErrorKind::kInternal, "basis product vanished");
      table.index[a][b] = nonzero;
      table.coef[a][b] = prod[nonzero];
      if constexpr (kIsExact<S>) {
        table.integral = table.integral && boost::multiprecision::denominator(prod[nonzero]) == 1;
      }
    }
  }
  for (int a = 0; a < kOctonionDim; ++a) {
    // e_a * conj(e_a): conj(e_a) = +-e_a, so the product sits on index 0.
    S sign = a == 0 ? S(1) : S(-1);
    table.norm_diag[a] = sign * table.coef[a][a];
  }
  return table;
}

template <FieldScalar S>
double scale_of(const Octonion<S>& x) {
  return 1.0 + max_coord(x);
}

template <FieldScalar S>
bool norm_is_zero(const Octonion<S>& x) {
  double s = max_coord(x);
  return is_zero(norm(x), s * s);
}

template <FieldScalar S>
bool magnitude_less(const S& a, const S& b) {
  if constexpr (kIsExact<S>) {
    return boost::multiprecision::abs(a) < boost::multiprecision::abs(b);
  } else {
    return std::abs(a) < std::abs(b);
  }
}

// Normalization is only available with square roots.
template <FieldScalar S>
Octonion<S> normalized(const Octonion<S>& x) {
  if constexpr (kIsExact<S>) {
    return x;
  } else {
    return x / std::sqrt(std::abs(norm(x)));
  }
}

// x minus its polar-form projections onto each (mutually orthogonal) element.
template <FieldScalar S>
Octonion<S> orthogonal_part(Octonion<S> x, std::span<const Octonion<S>> against) {
  for (const auto& e : against) {
    S bee = polar(e, e);
    x -= e * (polar(x, e) / bee);
  }
  return x;
}

// Candidate (from `candidates` after orthogonalization) with the largest
// |norm|; exact mode returns the first anisotropic one.
template <FieldScalar S>
std::optional<Octonion<S>> best_orthogonal(const std::vector<Octonion<S>>& candidates,
                                           std::span<const Octonion<S>> against) {
  std::optional<Octonion<S>> best;
  S best_norm(0);
  for (const auto& c : candidates) {
    Octonion<S> w = orthogonal_part(c, against);
    if (is_zero(w) || norm_is_zero(w)) continue;
    S n = norm(w);
    if (kIsExact<S>) return w;
    if (!best || magnitude_less(best_norm, n)) {
      best = w;
      best_norm = n;
    }
  }
  return best;
}

}  // namespace

namespace {

// Reusable GMP integers; avoids an allocation per arithmetic step.
struct ProductScratch {
  std::array<mpz_t, kOctonionDim> x, y, acc;
  mpz_t dx, dy, q;
  ProductScratch() {
    for (int a = 0; a < kOctonionDim; ++a) {
      mpz_init(x[a]);
      mpz_init(y[a]);
      mpz_init(acc[a]);
    }
    mpz_init(dx);
    mpz_init(dy);
    mpz_init(q);
  }
  ~ProductScratch() {
    for (int a = 0; a < kOctonionDim; ++a) {
      mpz_clear(x[a]);
      mpz_clear(y[a]);
      mpz_clear(acc[a]);
    }
    mpz_clear(dx);
    mpz_clear(dy);
    mpz_clear(q);
  }
  ProductScratch(const ProductScratch&) = delete;
  ProductScratch& operator=(const ProductScratch&) = delete;

  // Writes v * d into ints with d the lcm of the denominators.
  void clear_denominators(const Coords<Rational>& v, std::array<mpz_t, kOctonionDim>& ints, mpz_t d) {
    mpz_set_ui(d, 1);
    for (int a = 0; a < kOctonionDim; ++a) {
      const mpz_srcptr den = mpq_denref(v[a].backend().data());
      if (mpz_cmp_ui(den, 1) != 0) mpz_lcm(d, d, den);
    }
    for (int a = 0; a < kOctonionDim; ++a) {
      const mpq_srcptr r = v[a].backend().data();
      if (mpz_cmp_ui(mpq_denref(r), 1) == 0) {
        mpz_mul(ints[a], mpq_numref(r), d);
      } else {
        mpz_divexact(q, d, mpq_denref(r));
        mpz_mul(ints[a], mpq_numref(r), q);
      }
    }
  }
};

}  // namespace

Coords<Rational> exact_table_product(const Coords<Rational>& x, const Coords<Rational>& y,
                                     const AlgebraParams<Rational>::Table& table) {
  thread_local ProductScratch s;
  s.clear_denominators(x, s.x, s.dx);
  s.clear_denominators(y, s.y, s.dy);
  for (auto& a : s.acc) mpz_set_ui(a, 0);
  for (int a = 0; a < kOctonionDim; ++a) {
    if (mpz_sgn(s.x[a]) == 0) continue;
    for (int b = 0; b < kOctonionDim; ++b) {
      if (mpz_sgn(s.y[b]) == 0) continue;
      mpz_ptr acc = s.acc[table.index[a][b]];
      const mpz_srcptr c = mpq_numref(table.coef[a][b].backend().data());
      if (mpz_cmp_si(c, 1) == 0) {
        mpz_addmul(acc, s.x[a], s.y[b]);
      } else if (mpz_cmp_si(c, -1) == 0) {
        mpz_submul(acc, s.x[a], s.y[b]);
      } else {
        mpz_mul(s.q, s.x[a], s.y[b]);
        mpz_addmul(acc, s.q, c);
      }
    }
  }
  mpz_mul(s.dx, s.dx, s.dy);
  Coords<Rational> out;
  for (int k = 0; k < kOctonionDim; ++k) {
    mpq_ptr r = out[k].backend().data();
    mpz_swap(mpq_numref(r), s.acc[k]);
    mpz_set(mpq_denref(r), s.dx);
    mpq_canonicalize(r);
  }
  return out;
}

Rational exact_weighted_dot(const Coords<Rational>& x, const Coords<Rational>& y,
                            const std::array<Rational, kOctonionDim>& weights) {
  thread_local ProductScratch s;
  s.clear_denominators(x, s.x, s.dx);
  s.clear_denominators(y, s.y, s.dy);
  mpz_ptr acc = s.acc[0];
  mpz_set_ui(acc, 0);
  for (int a = 0; a < kOctonionDim; ++a) {
    mpz_mul(s.q, s.x[a], s.y[a]);
    mpz_addmul(acc, s.q, mpq_numref(weights[a].backend().data()));
  }
  mpz_mul(s.dx, s.dx, s.dy);
  Rational out;
  mpq_ptr r = out.backend().data();
  mpz_swap(mpq_numref(r), acc);
  mpq_set_den(r, s.dx);
  mpq_canonicalize(r);
  return out;
}

template <FieldScalar S>
Coords<S> doubling_product(const Coords<S>& x, const Coords<S>& y, const S& alpha, const S& beta,
                           const S& gamma) {
  Flat<S> fx(x.data(), x.data() + kOctonionDim), fy(y.data(), y.data() + kOctonionDim);
  Flat<S> p = cd_mul<S>(fx, fy, {alpha, beta, gamma});
  Coords<S> out;
  for (int k = 0; k < kOctonionDim; ++k) out[k] = p[static_cast<std::size_t>(k)];
  return out;
}

template <FieldScalar S>
AlgebraParams<S> AlgebraParams<S>::make(S alpha, S beta, S gamma) {
  if (alpha == S(0) || beta == S(0) || gamma == S(0)) {
    throw MathError(ErrorKind::kInvalidInput, "structure constants must be nonzero");
  }
  auto impl = std::make_shared<Impl>();
  impl->table = build_table<S>(alpha, beta, gamma);
  impl->alpha = std::move(alpha);
  impl->beta = std::move(beta);
  impl->gamma = std::move(gamma);
  return AlgebraParams(std::move(impl));
}

template <FieldScalar S>
const AlgebraParams<S>& AlgebraParams<S>::standard() {
  static const AlgebraParams params = make(S(-1), S(-1), S(-1));
  return params;
}

template <FieldScalar S>
Octonion<S> conjugating_element(const Octonion<S>& lambda, const Octonion<S>& mu, std::uint64_t seed) {
  lambda.check_params(mu);
  const auto& params = lambda.params();
  const double scale = scale_of(lambda) * scale_of(mu);
  if (!approx_equal(trace(lambda), trace(mu), scale) || !approx_equal(norm(lambda), norm(mu), scale)) {
    throw MathError(ErrorKind::kNotConjugate, "trace or norm differ");
  }
  if (is_central(lambda, scale)) {
    if (!approx_equal(lambda, mu, scale)) {
      throw MathError(ErrorKind::kNotConjugate, "central element is conjugate only to itself");
    }
    for (int a = 1; a < kOctonionDim; ++a) {
      auto e = Octonion<S>::basis(params, a);
      if (!norm_is_zero(e)) return e;
    }
    throw MathError(ErrorKind::kWitnessFailure, "no anisotropic basis element");
  }

  // delta * lambda - mu * delta = 0 and delta_0 = 0.
  DynMatrix<S> system(kOctonionDim + 1, kOctonionDim);
  system.topRows(kOctonionDim) = right_mul_matrix(lambda) - left_mul_matrix(mu);
  system.row(kOctonionDim).setZero();
  system(kOctonionDim, 0) = S(1);
  auto kernel = nullspace<S>(system);
  if (kernel.empty()) throw MathError(ErrorKind::kWitnessFailure, "conjugation system has no solution");

  auto to_octonion = [&](const DynVector<S>& v) {
    Coords<S> c;
    for (int k = 0; k < kOctonionDim; ++k) c[k] = v(k);
    return Octonion<S>(params, c);
  };
  auto accept = [&](const Octonion<S>& delta) {
    if (is_zero(delta) || norm_is_zero(delta)) return false;
    return approx_equal(Octonion<S>(delta * lambda), Octonion<S>(mu * delta), scale * scale_of(delta));
  };

  std::optional<Octonion<S>> best;
  S best_norm(0);
  for (const auto& v : kernel) {
    Octonion<S> d = to_octonion(v);
    S n = norm(d);
    if (!best || magnitude_less(best_norm, n)) {
      best = d;
      best_norm = n;
    }
  }
  if (best && accept(*best)) return *best;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    DynVector<S> v = DynVector<S>::Zero(kOctonionDim);
    for (const auto& k : kernel) v += k * S(coef(rng));
    Octonion<S> d = to_octonion(v);
    if (accept(d)) return d;
  }
  throw MathError(ErrorKind::kWitnessFailure,
                  "no anisotropic trace-zero conjugator found (isotropic algebra?)");
}

template <FieldScalar S>
Octonion<S> QuatSubalgebra<S>::project(const Octonion<S>& x) const {
  Octonion<S> out(x.params());
  for (const auto& e : basis) out += e * (polar(x, e) / polar(e, e));
  return out;
}

template <FieldScalar S>
QuatSubalgebra<S> quat_subalgebra_containing(const Octonion<S>& e, const Octonion<S>& g) {
  e.check_params(g);
  const auto& params = e.params();
  const double scale = scale_of(e) + scale_of(g);
  Octonion<S> ie = im(e), ig = im(g);
  const bool e_central = is_zero(ie, scale);
  const bool g_central = is_zero(ig, scale);
  if (e_central && g_central) {
    throw MathError(ErrorKind::kDegenerateCommutative, "both elements are central");
  }
  const Octonion<S> one = Octonion<S>::scalar(params, S(1));
  Octonion<S> u = e_central ? ig : ie;
  if (norm_is_zero(u)) throw MathError(ErrorKind::kNotInvertible, "isotropic imaginary part");
  u = normalized(u);

  std::array<Octonion<S>, 1> span_u{u};
  std::optional<Octonion<S>> v;
  if (!e_central && !g_central) {
    Octonion<S> w = orthogonal_part<S>(ig, span_u);
    if (!is_zero(w, scale) && !norm_is_zero(w)) v = w;
  }
  if (!v) {
    std::vector<Octonion<S>> imaginary_units;
    for (int a = 1; a < kOctonionDim; ++a) imaginary_units.push_back(Octonion<S>::basis(params, a));
    v = best_orthogonal<S>(imaginary_units, span_u);
    if (!v) throw MathError(ErrorKind::kNotInvertible, "no anisotropic element orthogonal to u");
  }
  QuatSubalgebra<S> q{{one, u, normalized(*v), Octonion<S>(params)}, Octonion<S>(params), S(0)};
  q.basis[3] = q.basis[1] * q.basis[2];

  std::vector<Octonion<S>> all_units;
  for (int a = 0; a < kOctonionDim; ++a) all_units.push_back(Octonion<S>::basis(params, a));
  auto ell = best_orthogonal<S>(all_units, std::span<const Octonion<S>>(q.basis));
  if (!ell) throw MathError(ErrorKind::kNotInvertible, "no anisotropic element orthogonal to Q");
  q.ell = normalized(*ell);
  q.gamma_eff = (q.ell * q.ell)[0];
  return q;
}

#define OCTO_INSTANTIATE(S)                                                                      \
  template class AlgebraParams<S>;                                                               \
  template Coords<S> doubling_product<S>(const Coords<S>&, const Coords<S>&, const S&, const S&, \
                                         const S&);                                              \
  template Octonion<S> conjugating_element<S>(const Octonion<S>&, const Octonion<S>&,            \
                                              std::uint64_t);                                    \
  template struct QuatSubalgebra<S>;                                                             \
  template QuatSubalgebra<S> quat_subalgebra_containing<S>(const Octonion<S>&, const Octonion<S>&);

OCTO_INSTANTIATE(double)
OCTO_INSTANTIATE(Rational)

#undef OCTO_INSTANTIATE

}  // namespace octo
