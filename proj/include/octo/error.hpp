#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace octo {

enum class ErrorKind {
  kInvalidInput,
  kParse,
  kUnsupportedDegree,
  kUnsupported,
  kNoConvergence,
  kNotInvertible,
  kNotConjugate,
  kWitnessFailure,
  kDegenerateCommutative,
  kNotInRmr,
  kWholeClass,
  kNotAFixedPoint,
  kOrderMismatch,
  kResourceLimit,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` drives the
// CLI exit code.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based source position.
class ParseError : public MathError {
 public:
  ParseError(const std::string& what, int line, int column)
      : MathError(ErrorKind::kParse, what + " at line " + std::to_string(line) +
                                         ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace octo
