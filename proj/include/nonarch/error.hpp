#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nonarch {

/// Stable error identifiers. The CLI prints these names verbatim, so never
/// renumber or rename an existing entry.
enum class ErrorCode {
  kRepresentation,
  kDivisionByZero,
  kFieldMismatch,
  kTruncationExceeded,
  kTruncationUnderflow,
  kEmptyDomain,
  kInsufficientPrecision,
  kZeroSeries,
  kUnsupportedField,
  kExponentNotDivisible,
  kNoPthRoot,
  kNonUnit,
  kNeedsCompactWindow,
  kNormalization,
  kDomain,
  kContradiction,
  kDimensionMismatch,
  kNonGenericPoint,
  kNontrivialAuxSupport,
  kSyntax,
  kSemantic,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a coefficient polynomial vanishes at the sampled point without
/// being identically zero.
class NonGenericPointError : public Error {
 public:
  explicit NonGenericPointError(long exponent);
  long exponent() const noexcept { return exponent_; }

 private:
  long exponent_;
};

class NontrivialAuxSupportError : public Error {
 public:
  NontrivialAuxSupportError(long exponent, std::vector<long> multi_index);
  long exponent() const noexcept { return exponent_; }
  const std::vector<long>& multi_index() const noexcept { return multi_index_; }

 private:
  long exponent_;
  std::vector<long> multi_index_;
};

/// Parse failure carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace nonarch
