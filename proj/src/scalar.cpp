#include "octo/scalar.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace octo {

namespace {
std::atomic<double> g_real_epsilon{1e-9};
}  // namespace

double real_epsilon() { return g_real_epsilon.load(std::memory_order_relaxed); }

void set_real_epsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw MathError(ErrorKind::kInvalidInput, "epsilon must be a positive finite number");
  }
  g_real_epsilon.store(eps, std::memory_order_relaxed);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kUnsupportedDegree: return "unsupported-degree";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kNoConvergence: return "no-convergence";
    case ErrorKind::kNotInvertible: return "not-invertible";
    case ErrorKind::kNotConjugate: return "not-conjugate";
    case ErrorKind::kWitnessFailure: return "witness-failure";
    case ErrorKind::kDegenerateCommutative: return "degenerate-commutative";
    case ErrorKind::kNotInRmr: return "not-in-rmr";
    case ErrorKind::kWholeClass: return "whole-class";
    case ErrorKind::kNotAFixedPoint: return "not-a-fixed-point";
    case ErrorKind::kOrderMismatch: return "order-mismatch";
    case ErrorKind::kResourceLimit: return "resource-limit";
    case ErrorKind::kInternal: return "internal-error";
  }
  return "unknown";
}

std::string format_scalar(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
  return std::string(buf, end);
}

std::string format_scalar(const Rational& x) { return x.str(); }

namespace {

[[noreturn]] void bad_scalar(std::string_view text) {
  throw MathError(ErrorKind::kParse, "malformed scalar '" + std::string(text) + "'");
}

// Decimal with optional fraction and exponent, converted exactly.
Rational parse_decimal_exact(std::string_view s, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  std::string digits;
  long long frac_digits = 0;
  bool seen_dot = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any_digit) bad_scalar(whole);
  long long exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    auto [ptr, ec] = std::from_chars(s.data() + pos + (pos < s.size() && s[pos] == '+'),
                                     s.data() + s.size(), exponent);
    if (ec != std::errc() || ptr != s.data() + s.size()) bad_scalar(whole);
    pos = s.size();
  }
  if (pos != s.size()) bad_scalar(whole);
  // A leading zero would make the string constructor read octal.
  const auto first = digits.find_first_not_of('0');
  BigInt mantissa(first == std::string::npos ? std::string("0") : digits.substr(first));
  long long shift = exponent - frac_digits;
  BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(shift)));
  Rational value = shift >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
  return negative ? Rational(-value) : value;
}

double parse_double_strict(std::string_view s, std::string_view whole) {
  std::string buf(s);
  if (buf.empty()) bad_scalar(whole);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) bad_scalar(whole);
  return v;
}

}  // namespace

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal_exact(text, text);
  Rational num = parse_decimal_exact(text.substr(0, slash), text);
  Rational den = parse_decimal_exact(text.substr(slash + 1), text);
  if (den == 0) throw MathError(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  return num / den;
}

template <>
double parse_scalar<double>(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_double_strict(text, text);
  double num = parse_double_strict(text.substr(0, slash), text);
  double den = parse_double_strict(text.substr(slash + 1), text);
  if (den == 0.0) throw MathError(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  return num / den;
}

}  // namespace octo
