#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octo/opoly.hpp"

namespace octo {

/// Conjugacy class, identified by the common trace T and norm N of its
/// members. A central class is the singleton {T/2}.
template <FieldScalar S>
struct ConjClass {
  S trace{0};
  S norm{0};
  bool central = false;

  static ConjClass of(const Octonion<S>& x) { return {octo::trace(x), octo::norm(x), false}; }
  static ConjClass from_candidate(const ClassCandidate<S>& c) {
    return {c.trace, c.norm, c.is_central()};
  }
  S central_value() const { return trace / S(2); }
};

/// Whether x has the class's trace and norm (and, for a central class, is
/// central).
template <FieldScalar S>
bool in_class(const ConjClass<S>& cls, const Octonion<S>& x);

/// f(lambda) = E lambda + G for every lambda in the class.
template <FieldScalar S>
struct LinearReduction {
  Octonion<S> E;
  Octonion<S> G;
  ConjClass<S> cls;
};

template <FieldScalar S>
struct IsolatedRoot {
  Octonion<S> root;
  ConjClass<S> cls;
};

template <FieldScalar S>
struct Anomaly {
  ConjClass<S> cls;
  std::string reason;
};

template <FieldScalar S>
struct RootSet {
  std::vector<IsolatedRoot<S>> isolated;
  std::vector<ConjClass<S>> spherical;
  std::vector<Anomaly<S>> anomalies;
};

/// Reduces f on a class using lambda^{t+1} = (T p_t + q_t) lambda - N p_t.
template <FieldScalar S>
LinearReduction<S> reduce_linear(const OPolynomial<S>& f, const ConjClass<S>& cls);

/// Root classes of f's companion polynomial that contain algebra elements.
template <FieldScalar S>
std::vector<ConjClass<S>> companion_classes(const OPolynomial<S>& f);

/// All roots of f, class by class. Candidates that fail verification, and
/// classes with E = 0 but G != 0, are reported in `anomalies`.
template <FieldScalar S>
RootSet<S> roots(const OPolynomial<S>& f);

/// Classes whose union is the set of roots of all right multiples f c.
template <FieldScalar S>
std::vector<ConjClass<S>> rmr_classes(const OPolynomial<S>& f);

template <FieldScalar S>
bool rmr_contains(const OPolynomial<S>& f, const Octonion<S>& mu);

/// A scalar c with eval(f c, mu) = 0. Throws kNotInRmr when mu lies in no
/// companion class.
template <FieldScalar S>
Octonion<S> rmr_witness(const OPolynomial<S>& f, const Octonion<S>& mu,
                        std::uint64_t seed = 0xC0FFEE);

enum class Side { kLeft, kRight };

/// Root in `cls` of c f (left) or f c (right):
///   right: -(c^-1 E^-1)(G c),   left: -(E^-1 c^-1)(c G).
/// Throws kWholeClass when E = 0.
template <FieldScalar S>
Octonion<S> multiple_root(const OPolynomial<S>& f, const ConjClass<S>& cls, const Octonion<S>& c,
                          Side side);

enum class LmrKind { kWholeClass, kSinglePoint, kParametrized };

template <FieldScalar S>
struct LMRClassDescription {
  ConjClass<S> cls;
  LmrKind kind = LmrKind::kWholeClass;
  std::optional<Octonion<S>> point;     // single-point
  std::optional<QuatSubalgebra<S>> Q;  // parametrized
  std::optional<Octonion<S>> E, G;
  std::optional<Octonion<S>> EinvG, GEinv;
  std::optional<Octonion<S>> comm;  // [conj(G), E^-1]
  S comm_norm{0};
};

/// Intersection of the left-multiple root set with each companion class.
template <FieldScalar S>
std::vector<LMRClassDescription<S>> lmr_describe(const OPolynomial<S>& f);

template <FieldScalar S>
struct LmrSample {
  Octonion<S> multiplier;  // c = a + b ell
  Octonion<S> point;
};

/// Draws seeded (a, b) in Q x Q and evaluates
///   -1/norm(a + b ell) (norm(a) E^-1 G - gamma norm(b) G E^-1 + (b [conj G, E^-1] conj a) ell).
/// Whole-class descriptions sample random class members (real mode only).
template <FieldScalar S>
std::vector<LmrSample<S>> lmr_sample_pairs(const LMRClassDescription<S>& desc, int count,
                                           std::uint64_t seed);

template <FieldScalar S>
std::vector<Octonion<S>> lmr_sample(const LMRClassDescription<S>& desc, int count,
                                    std::uint64_t seed) {
  std::vector<Octonion<S>> out;
  for (auto& s : lmr_sample_pairs(desc, count, seed)) out.push_back(std::move(s.point));
  return out;
}

/// Membership in the simplified parametrization
///   { -x E^-1 G + (x - 1) G E^-1 + w : 0 <= x <= 1, w orthogonal to Q,
///     norm(w) = x (1 - x) norm([conj G, E^-1]) },
/// valid for positive-definite algebras; other parameters raise kUnsupported.
template <FieldScalar S>
bool lmr_contains(const LMRClassDescription<S>& desc, const Octonion<S>& mu);

}  // namespace octo
