#include "nonarch/error.hpp"

namespace nonarch {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRepresentation: return "representation";
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kFieldMismatch: return "field_mismatch";
    case ErrorCode::kTruncationExceeded: return "truncation_exceeded";
    case ErrorCode::kTruncationUnderflow: return "truncation_underflow";
    case ErrorCode::kEmptyDomain: return "empty_domain";
    case ErrorCode::kInsufficientPrecision: return "insufficient_precision";
    case ErrorCode::kZeroSeries: return "zero_series";
    case ErrorCode::kUnsupportedField: return "unsupported_field";
    case ErrorCode::kExponentNotDivisible: return "exponent_not_divisible";
    case ErrorCode::kNoPthRoot: return "no_pth_root";
    case ErrorCode::kNonUnit: return "non_unit";
    case ErrorCode::kNeedsCompactWindow: return "needs_compact_window";
    case ErrorCode::kNormalization: return "normalization";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kContradiction: return "contradiction";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNonGenericPoint: return "non_generic_point";
    case ErrorCode::kNontrivialAuxSupport: return "nontrivial_aux_support";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kSemantic: return "semantic";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

NonGenericPointError::NonGenericPointError(long exponent)
    : Error(ErrorCode::kNonGenericPoint,
            "coefficient at exponent " + std::to_string(exponent) +
                " is not identically zero but vanishes at the chosen point"),
      exponent_(exponent) {}

namespace {
std::string describe_multi_index(const std::vector<long>& index) {
  std::string out = "(";
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(index[k]);
  }
  return out + ")";
}
}  // namespace

NontrivialAuxSupportError::NontrivialAuxSupportError(long exponent,
                                                     std::vector<long> multi_index)
    : Error(ErrorCode::kNontrivialAuxSupport,
            "coefficient at exponent " + std::to_string(exponent) +
                " has auxiliary monomial " + describe_multi_index(multi_index)),
      exponent_(exponent),
      multi_index_(std::move(multi_index)) {}

ParseError::ParseError(ErrorCode code, int line, int column, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                      ": " + message),
      line_(line),
      column_(column) {}

}  // namespace nonarch
