#include "bicentrality/errors.hpp"

#include <cstdio>

namespace bicentrality {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kDuplicateLabel: return "DUPLICATE_LABEL";
    case ErrorCode::kNegativeWeight: return "NEGATIVE_WEIGHT";
    case ErrorCode::kNonFiniteWeight: return "NON_FINITE_WEIGHT";
    case ErrorCode::kTransformDomain: return "TRANSFORM_DOMAIN";
    case ErrorCode::kNotIrreducible: return "NOT_IRREDUCIBLE";
    case ErrorCode::kPreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::kNoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::kZeroVector: return "ZERO_VECTOR";
    case ErrorCode::kNonPositiveEigenvalue: return "NON_POSITIVE_EIGENVALUE";
    case ErrorCode::kOracleFailure: return "ORACLE_FAILURE";
    case ErrorCode::kDistinctnessViolation: return "DISTINCTNESS_VIOLATION";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kDuplicateEdge: return "DUPLICATE_EDGE";
    case ErrorCode::kNonPositiveWeight: return "NON_POSITIVE_WEIGHT";
    case ErrorCode::kEmptyRelation: return "EMPTY_RELATION";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& reason, ErrorCode code)
    : Error(code, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + reason),
      line_(line),
      column_(column),
      reason_(reason) {}

namespace {

std::string no_convergence_message(std::size_t iterations, double residual) {
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "power iteration did not converge after %zu iterations "
                "(final residual %.3e)",
                iterations, residual);
  return buf;
}

}  // namespace

NoConvergenceError::NoConvergenceError(std::size_t iterations,
                                       double final_residual)
    : Error(ErrorCode::kNoConvergence,
            no_convergence_message(iterations, final_residual)),
      iterations_(iterations),
      final_residual_(final_residual) {}

}  // namespace bicentrality
