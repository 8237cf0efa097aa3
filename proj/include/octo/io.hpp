#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "octo/dynamics.hpp"

namespace octo {

/// Insertion-ordered so that emitted keys are stable.
using Json = nlohmann::ordered_json;

/// "a,b,c" or "[a,b,c]".
template <FieldScalar S>
AlgebraParams<S> parse_params(std::string_view text);

/// Text form "c0 + c1 i + c2 j + c3 k + c4 l + c5 il + c6 jl + c7 kl" (any
/// subset of terms, any order, signs allowed) or a JSON array of 8 scalars.
/// Throws ParseError with the 1-based line and column of the failure.
template <FieldScalar S>
Octonion<S> parse_octonion(std::string_view text,
                           const AlgebraParams<S>& params = AlgebraParams<S>::standard());

/// JSON {"params": [a, b, c], "coeffs": [[8 scalars], ...]} (params optional)
/// or text "(1)x^2 + (i)x + (j - k)". Text input uses `params`.
template <FieldScalar S>
OPolynomial<S> parse_polynomial(std::string_view text,
                                const AlgebraParams<S>& params = AlgebraParams<S>::standard());

template <FieldScalar S>
std::string format_octonion(const Octonion<S>& x);
template <FieldScalar S>
std::string format_polynomial(const OPolynomial<S>& f);

/// Exact values that are integers become JSON numbers, other rationals "p/q"
/// strings. Non-finite reals become null.
Json scalar_json(double x);
Json scalar_json(const Rational& x);

template <FieldScalar S>
Json to_json(const Octonion<S>& x);
template <FieldScalar S>
Json to_json(const OPolynomial<S>& f);
template <FieldScalar S>
Json to_json(const CentralPoly<S>& p);
template <FieldScalar S>
Json to_json(const ConjClass<S>& cls);
template <FieldScalar S>
Json to_json(const RootSet<S>& rs);
template <FieldScalar S>
Json to_json(const LMRClassDescription<S>& d);
Json to_json(const FixedPointReport& r);
Json to_json(const PseudoPeriodReport& r);
Json to_json(const OrbitRecord& r);

/// Header "step,c0,...,c7,abs", one row per iterate.
void write_orbit_csv(std::ostream& os, const OrbitRecord& r);

}  // namespace octo
