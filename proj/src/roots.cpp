#include "octo/roots.hpp"

#include <random>

namespace octo {

namespace {

template <FieldScalar S>
double mag(const S& x) {
  return ScalarTraits<S>::magnitude(x);
}

template <FieldScalar S>
Octonion<S> one(const AlgebraParams<S>& params) {
  return Octonion<S>::scalar(params, S(1));
}

// Magnitude bound on E and G, used to decide whether they vanish.
template <FieldScalar S>
double reduction_scale(const OPolynomial<S>& f, const ConjClass<S>& cls) {
  double p = 0.0, q = 1.0, acc = 1.0;
  const double t = mag(cls.trace), n = mag(cls.norm);
  for (int k = 0; k <= f.degree(); ++k) {
    acc += max_coord(f.coeff(k)) * (p + q);
    double next_p = t * p + q;
    q = n * p;
    p = next_p;
  }
  return acc;
}

template <FieldScalar S>
double residual_tolerance_scale(const OPolynomial<S>& f, const Octonion<S>& lambda) {
  if constexpr (kIsExact<S>) {
    return 1.0;
  } else {
    return 1.0 + eval_magnitude(f, lambda);
  }
}

template <FieldScalar S>
bool is_root(const OPolynomial<S>& f, const Octonion<S>& lambda) {
  return is_zero(eval(f, lambda), residual_tolerance_scale(f, lambda));
}

// Definite algebras have no elements in classes with T^2 - 4N >= 0 other than
// central ones.
template <FieldScalar S>
bool class_is_populated(const AlgebraParams<S>& params, const ConjClass<S>& cls) {
  if (cls.central || !params.is_definite()) return true;
  return cls.trace * cls.trace - S(4) * cls.norm < S(0);
}

template <FieldScalar S>
S random_scalar(std::mt19937_64& rng) {
  if constexpr (kIsExact<S>) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return Rational(num(rng), den(rng));
  } else {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return u(rng);
  }
}

template <FieldScalar S>
std::array<S, 4> random_quad(std::mt19937_64& rng) {
  return {random_scalar<S>(rng), random_scalar<S>(rng), random_scalar<S>(rng), random_scalar<S>(rng)};
}

template <FieldScalar S>
bool in_unit_interval(const S& x) {
  if constexpr (kIsExact<S>) {
    return x >= 0 && x <= 1;
  } else {
    return x >= -real_epsilon() && x <= 1.0 + real_epsilon();
  }
}

}  // namespace

template <FieldScalar S>
bool in_class(const ConjClass<S>& cls, const Octonion<S>& x) {
  if (!approx_equal(trace(x), cls.trace, 1.0 + mag(cls.trace)) ||
      !approx_equal(norm(x), cls.norm, 1.0 + mag(cls.norm))) {
    return false;
  }
  return !cls.central || is_central(x, 1.0 + max_coord(x));
}

template <FieldScalar S>
LinearReduction<S> reduce_linear(const OPolynomial<S>& f, const ConjClass<S>& cls) {
  if (f.is_zero()) throw MathError(ErrorKind::kInvalidInput, "reduction of the zero polynomial");
  Octonion<S> e(f.params()), g(f.params());
  S p(0), q(1);
  for (int t = 0; t <= f.degree(); ++t) {
    e += f.coeff(t) * p;
    g += f.coeff(t) * q;
    S next_p = cls.trace * p + q;
    q = -cls.norm * p;
    p = next_p;
  }
  return {e, g, cls};
}

template <FieldScalar S>
std::vector<ConjClass<S>> companion_classes(const OPolynomial<S>& f) {
  std::vector<ConjClass<S>> out;
  for (const auto& cand : central_roots(companion(f))) {
    auto cls = ConjClass<S>::from_candidate(cand);
    if (class_is_populated(f.params(), cls)) out.push_back(cls);
  }
  return out;
}

template <FieldScalar S>
RootSet<S> roots(const OPolynomial<S>& f) {
  if (f.degree() < 1) throw MathError(ErrorKind::kInvalidInput, "roots need degree >= 1");
  RootSet<S> out;
  for (const auto& cls : companion_classes(f)) {
    if (cls.central) {
      auto r = Octonion<S>::scalar(f.params(), cls.central_value());
      if (is_root(f, r)) {
        out.isolated.push_back({r, cls});
      } else {
        out.anomalies.push_back({cls, "central companion root is not a root of f"});
      }
      continue;
    }
    auto red = reduce_linear(f, cls);
    const double scale = reduction_scale(f, cls);
    if (is_zero(red.E, scale)) {
      if (is_zero(red.G, scale)) {
        out.spherical.push_back(cls);
      } else {
        out.anomalies.push_back({cls, "E vanishes but G does not"});
      }
      continue;
    }
    Octonion<S> lambda = -(inverse(red.E) * red.G);
    if (in_class(cls, lambda) && is_root(f, lambda)) {
      out.isolated.push_back({lambda, cls});
    } else {
      out.anomalies.push_back({cls, "candidate -E^-1 G failed verification"});
    }
  }
  return out;
}

template <FieldScalar S>
std::vector<ConjClass<S>> rmr_classes(const OPolynomial<S>& f) {
  return companion_classes(f);
}

template <FieldScalar S>
bool rmr_contains(const OPolynomial<S>& f, const Octonion<S>& mu) {
  for (const auto& cls : rmr_classes(f)) {
    if (in_class(cls, mu)) return true;
  }
  return false;
}

template <FieldScalar S>
Octonion<S> rmr_witness(const OPolynomial<S>& f, const Octonion<S>& mu, std::uint64_t seed) {
  const auto& params = f.params();
  auto rs = roots(f);
  for (const auto& cls : rs.spherical) {
    if (in_class(cls, mu)) return one(params);
  }
  for (const auto& iso : rs.isolated) {
    if (!in_class(iso.cls, mu)) continue;
    if (approx_equal(iso.root, mu, 1.0 + max_coord(mu))) return one(params);
    Octonion<S> delta = conjugating_element(iso.root, mu, seed);
    Octonion<S> c = inverse(delta);
    auto g = scale_right(f, c);
    if (!is_root(g, mu)) {
      throw MathError(ErrorKind::kWitnessFailure, "conjugator does not yield a root of f c");
    }
    return c;
  }
  for (const auto& an : rs.anomalies) {
    if (in_class(an.cls, mu)) {
      throw MathError(ErrorKind::kWitnessFailure, "class of mu has no verified root: " + an.reason);
    }
  }
  throw MathError(ErrorKind::kNotInRmr, "element lies in no companion root class");
}

template <FieldScalar S>
Octonion<S> multiple_root(const OPolynomial<S>& f, const ConjClass<S>& cls, const Octonion<S>& c,
                          Side side) {
  auto red = reduce_linear(f, cls);
  if (is_zero(red.E, reduction_scale(f, cls))) {
    throw MathError(ErrorKind::kWholeClass, "E = 0: every member of the class is a root");
  }
  Octonion<S> e_inv = inverse(red.E);
  Octonion<S> c_inv = inverse(c);
  Octonion<S> root = side == Side::kRight ? -((c_inv * e_inv) * (red.G * c))
                                          : -((e_inv * c_inv) * (c * red.G));
  auto multiple = side == Side::kRight ? scale_right(f, c) : scale_left(c, f);
  if (!is_root(multiple, root)) {
    throw MathError(ErrorKind::kInternal, "multiple-root formula failed its postcondition");
  }
  return root;
}

template <FieldScalar S>
std::vector<LMRClassDescription<S>> lmr_describe(const OPolynomial<S>& f) {
  std::vector<LMRClassDescription<S>> out;
  for (const auto& cls : companion_classes(f)) {
    LMRClassDescription<S> d;
    d.cls = cls;
    if (cls.central) {
      d.kind = LmrKind::kSinglePoint;
      d.point = Octonion<S>::scalar(f.params(), cls.central_value());
      out.push_back(std::move(d));
      continue;
    }
    auto red = reduce_linear(f, cls);
    const double scale = reduction_scale(f, cls);
    d.E = red.E;
    d.G = red.G;
    if (is_zero(red.E, scale)) {
      d.kind = LmrKind::kWholeClass;
      out.push_back(std::move(d));
      continue;
    }
    Octonion<S> e_inv = inverse(red.E);
    d.EinvG = e_inv * red.G;
    d.GEinv = red.G * e_inv;
    d.comm = commutator(conj(red.G), e_inv);
    d.comm_norm = norm(*d.comm);
    if (is_zero(*d.comm, scale * (1.0 + max_coord(e_inv)))) {
      d.kind = LmrKind::kSinglePoint;
      d.point = -*d.EinvG;
    } else {
      d.kind = LmrKind::kParametrized;
      d.Q = quat_subalgebra_containing(red.E, red.G);
    }
    out.push_back(std::move(d));
  }
  return out;
}

template <FieldScalar S>
std::vector<LmrSample<S>> lmr_sample_pairs(const LMRClassDescription<S>& desc, int count,
                                           std::uint64_t seed) {
  if (count < 0) throw MathError(ErrorKind::kInvalidInput, "negative sample count");
  std::mt19937_64 rng(seed);
  std::vector<LmrSample<S>> out;
  switch (desc.kind) {
    case LmrKind::kSinglePoint: {
      const auto& params = desc.point->params();
      for (int k = 0; k < count; ++k) {
        Octonion<S> c(params);
        while (is_zero(c) || is_zero(norm(c), max_coord(c) * max_coord(c))) {
          Coords<S> v;
          for (int a = 0; a < kOctonionDim; ++a) v[a] = random_scalar<S>(rng);
          c = Octonion<S>(params, v);
        }
        out.push_back({c, *desc.point});
      }
      return out;
    }
    case LmrKind::kWholeClass: {
      if constexpr (kIsExact<S>) {
        throw MathError(ErrorKind::kUnsupported, "whole-class sampling needs real mode");
      } else {
        const auto& params = desc.E->params();
        if (!params.is_definite()) {
          throw MathError(ErrorKind::kUnsupported, "whole-class sampling needs a definite algebra");
        }
        const double t = desc.cls.trace;
        const double radius = std::sqrt(std::max(0.0, desc.cls.norm - t * t / 4.0));
        for (int k = 0; k < count; ++k) {
          Coords<double> v = Coords<double>::Zero();
          for (int a = 1; a < kOctonionDim; ++a) v[a] = random_scalar<double>(rng);
          Octonion<double> u(params, v);
          if (is_zero(u)) u = Octonion<double>::basis(params, 1);
          Octonion<double> member = u * (radius / abs(u)) + t / 2.0;
          out.push_back({one(params), member});
        }
        return out;
      }
    }
    case LmrKind::kParametrized: {
      const auto& q = *desc.Q;
      const auto& ell = q.ell;
      for (int k = 0; k < count; ++k) {
        Octonion<S> a(ell.params()), b(ell.params()), c(ell.params());
        S nc(0);
        while (nc == S(0)) {
          a = q.element(random_quad<S>(rng));
          b = q.element(random_quad<S>(rng));
          c = a + b * ell;
          nc = norm(c);
        }
        Octonion<S> inner = *desc.EinvG * norm(a) - *desc.GEinv * (q.gamma_eff * norm(b)) +
                            (b * (*desc.comm * conj(a))) * ell;
        out.push_back({c, inner * (S(-1) / nc)});
      }
      return out;
    }
  }
  return out;
}

template <FieldScalar S>
bool lmr_contains(const LMRClassDescription<S>& desc, const Octonion<S>& mu) {
  if (!mu.params().is_definite()) {
    throw MathError(ErrorKind::kUnsupported, "membership test needs a positive-definite algebra");
  }
  switch (desc.kind) {
    case LmrKind::kWholeClass:
      return in_class(desc.cls, mu);
    case LmrKind::kSinglePoint:
      return approx_equal(*desc.point, mu, 1.0 + max_coord(mu));
    case LmrKind::kParametrized:
      break;
  }
  const auto& p = *desc.EinvG;
  const auto& r = *desc.GEinv;
  Octonion<S> u = desc.Q->project(mu);
  Octonion<S> w = mu - u;
  // u = -r + x (r - p), solved by least squares in the polar form.
  Octonion<S> dir = r - p;
  Octonion<S> rhs = u + r;
  S x = polar(rhs, dir) / polar(dir, dir);
  const double scale = 1.0 + max_coord(mu) + max_coord(p) + max_coord(r);
  if (!is_zero(Octonion<S>(rhs - dir * x), scale)) return false;
  if (!in_unit_interval(x)) return false;
  S expected = x * (S(1) - x) * desc.comm_norm;
  return approx_equal(norm(w), expected, 1.0 + mag(desc.comm_norm));
}

#define OCTO_INSTANTIATE(S)                                                                          \
  template bool in_class<S>(const ConjClass<S>&, const Octonion<S>&);                                \
  template LinearReduction<S> reduce_linear<S>(const OPolynomial<S>&, const ConjClass<S>&);          \
  template std::vector<ConjClass<S>> companion_classes<S>(const OPolynomial<S>&);                    \
  template RootSet<S> roots<S>(const OPolynomial<S>&);                                               \
  template std::vector<ConjClass<S>> rmr_classes<S>(const OPolynomial<S>&);                          \
  template bool rmr_contains<S>(const OPolynomial<S>&, const Octonion<S>&);                          \
  template Octonion<S> rmr_witness<S>(const OPolynomial<S>&, const Octonion<S>&, std::uint64_t);     \
  template Octonion<S> multiple_root<S>(const OPolynomial<S>&, const ConjClass<S>&,                  \
                                        const Octonion<S>&, Side);                                   \
  template std::vector<LMRClassDescription<S>> lmr_describe<S>(const OPolynomial<S>&);               \
  template std::vector<LmrSample<S>> lmr_sample_pairs<S>(const LMRClassDescription<S>&, int,         \
                                                         std::uint64_t);                             \
  template bool lmr_contains<S>(const LMRClassDescription<S>&, const Octonion<S>&);

OCTO_INSTANTIATE(double)
OCTO_INSTANTIATE(Rational)

#undef OCTO_INSTANTIATE

}  // namespace octo
