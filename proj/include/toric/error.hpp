#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorKind {
  NotDivisible,
  Singular,
  IndexOutOfRange,
  NotPolynomial,
  InvalidPolytope,
  ParameterOutOfRange,
  NonSimpleVertex,
  Unbounded,
  EmptyOrLowerDimensional,
  NonGenericDirection,
  TruncationTooLow,
  SyntaxError,
  NestedIntegral,
  MalformedExpression,
  InhomogeneousClass,
  MixedDegrees,
  DimensionMismatch,
  FileFormat,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it
// onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error(ErrorKind::SyntaxError,
              "at position " + std::to_string(position) + ", expected " +
                  expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace toric
