#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bicentrality {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kDuplicateLabel,
  kNegativeWeight,
  kNonFiniteWeight,
  kTransformDomain,
  kNotIrreducible,
  kPreconditionFailed,
  kNoConvergence,
  kZeroVector,
  kNonPositiveEigenvalue,
  kOracleFailure,
  kDistinctnessViolation,
  kParseError,
  kDuplicateEdge,
  kNonPositiveWeight,
  kEmptyRelation,
};

// Stable upper-snake identifier, e.g. "NOT_IRREDUCIBLE".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason,
             ErrorCode code = ErrorCode::kParseError);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(std::size_t iterations, double final_residual);

  std::size_t iterations() const noexcept { return iterations_; }
  double final_residual() const noexcept { return final_residual_; }

 private:
  std::size_t iterations_;
  double final_residual_;
};

}  // namespace bicentrality
