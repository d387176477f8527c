#include <algorithm>
#include <cmath>

#include "bicentrality/centrality.hpp"
#include "bicentrality/errors.hpp"
#include "bicentrality/validation.hpp"

namespace bicentrality::centrality {
namespace {

Vector normalized_or_throw(Vector v, const char* what) {
  const double length = normalize(v);
  if (length == 0.0) {
    throw Error(ErrorCode::kZeroVector,
                std::string(what) + " collapsed to the zero vector");
  }
  if (!std::isfinite(length)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " overflowed; rescale the weights");
  }
  return v;
}

bool run_alternating(const Matrix& w, const Matrix& w_rev, double shift,
                     std::size_t budget, double tolerance, Vector& a,
                     ConvergenceReport& report) {
  for (std::size_t step = 0; step < budget; ++step) {
    Vector next;
    if (shift == 0.0) {
      const Vector b = normalized_or_throw(multiply(w, a), "W a");
      next = multiply(w_rev, b);
    } else {
      next = multiply(w_rev, multiply(w, a));
      for (std::size_t j = 0; j < next.size(); ++j) next[j] += shift * a[j];
    }
    next = normalized_or_throw(std::move(next), "W' b");
    const double residual = distance2(next, a);
    a = std::move(next);
    ++report.iterations;
    report.residual_trace.push_back(residual);
    report.final_residual = residual;
    if (residual <= tolerance) return true;
  }
  return false;
}

bool is_constant(const Vector& sums, double relative_tol) {
  const auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
  return *hi - *lo <= relative_tol * std::max(std::abs(*hi), std::abs(*lo));
}

void add_near_ties(const Vector& scores, Side side, double tie_tol,
                   std::vector<Warning>& warnings) {
  for (const auto& w : warnings) {
    if (w.side == side) return;
  }
  Vector sorted = scores;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] <= tie_tol) {
      warnings.push_back({WarningCode::kNearTie, side,
                          std::string("two ") + std::string(side_name(side)) +
                              "-items have ratings within the tie tolerance"});
      return;
    }
  }
}

}  // namespace

std::string_view side_name(Side side) noexcept {
  switch (side) {
    case Side::kA: return "a";
    case Side::kB: return "b";
    case Side::kC: return "c";
  }
  return "?";
}

std::string_view warning_code_name(WarningCode code) noexcept {
  switch (code) {
    case WarningCode::kConstantAVector: return "CONSTANT_A_VECTOR";
    case WarningCode::kConstantBVector: return "CONSTANT_B_VECTOR";
    case WarningCode::kNearTie: return "NEAR_TIE";
  }
  return "UNKNOWN";
}

AlternatingResult alternating_iterate(const Matrix& w, const Matrix& w_rev,
                                      const PowerSettings& settings) {
  if (w.empty() || w_rev.rows() != w.cols() || w_rev.cols() != w.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "W must be m x n and W' n x m");
  }
  settings.validate(w.cols());

  AlternatingResult result;
  result.convergence.tolerance = settings.tolerance;
  Vector a = settings.initial_vector.value_or(Vector(w.cols(), 1.0));
  normalize(a);

  const std::size_t plain_budget = (settings.max_iterations + 1) / 2;
  bool converged = run_alternating(w, w_rev, 0.0, plain_budget,
                                   settings.tolerance, a, result.convergence);
  if (!converged) {
    // Largest row sum of W' W bounds its spectral radius.
    const Vector sums = multiply(w_rev, row_sums(w));
    const double shift = *std::max_element(sums.begin(), sums.end());
    result.convergence.shifted = true;
    converged = run_alternating(w, w_rev, shift,
                                settings.max_iterations - plain_budget,
                                settings.tolerance, a, result.convergence);
  }
  if (!converged) {
    throw NoConvergenceError(result.convergence.iterations,
                             result.convergence.final_residual);
  }
  result.convergence.rate_estimate =
      spectral::estimate_rate(result.convergence.residual_trace);
  result.b = normalized_or_throw(multiply(w, a), "W a");
  result.a = std::move(a);
  return result;
}

std::vector<Warning> detect_degeneracy(const Matrix& w, const Matrix& w_rev,
                                       double relative_tol) {
  if (w_rev.rows() != w.cols() || w_rev.cols() != w.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "W must be m x n and W' n x m");
  }
  std::vector<Warning> warnings;
  // Row sums of W W' are W (W' 1); those of W' W are W' (W 1).
  const Vector product_sums = multiply(w, row_sums(w_rev));
  const Vector reverse_sums = multiply(w_rev, row_sums(w));
  if (is_constant(reverse_sums, relative_tol)) {
    warnings.push_back({WarningCode::kConstantAVector, Side::kA,
                        "W' W has equal row sums; all A-items receive the "
                        "same rating"});
  }
  if (is_constant(product_sums, relative_tol)) {
    warnings.push_back({WarningCode::kConstantBVector, Side::kB,
                        "W W' has equal row sums; all B-items receive the "
                        "same rating"});
  }
  return warnings;
}

NebsResult compute_nebs(const WeightRelation& rel, const ReverseTransform& phi,
                        const PowerSettings& settings,
                        const NebsOptions& options) {
  const ValidationReport check = validate(rel, phi);
  if (!check.ok()) {
    const bool domain = std::any_of(
        check.violations.begin(), check.violations.end(),
        [](const Violation& v) {
          return v.code == ViolationCode::kTransformDomain;
        });
    throw Error(domain ? ErrorCode::kTransformDomain
                       : ErrorCode::kPreconditionFailed,
                check.summary());
  }

  const Matrix& w = rel.weights();
  const Matrix w_rev = reverse_matrix(w, phi);

  NebsResult result;
  switch (options.engine) {
    case NebsEngine::kAlternating: {
      AlternatingResult alt = alternating_iterate(w, w_rev, settings);
      result.a = std::move(alt.a);
      result.b = std::move(alt.b);
      result.convergence = std::move(alt.convergence);
      break;
    }
    case NebsEngine::kProduct: {
      spectral::PowerResult a_side = spectral::power_iterate(w_rev * w, settings);
      PowerSettings b_settings = settings;
      b_settings.initial_vector.reset();
      spectral::PowerResult b_side =
          spectral::power_iterate(w * w_rev, b_settings);
      result.a = std::move(a_side.vector);
      result.b = std::move(b_side.vector);
      result.convergence = std::move(a_side.report);
      result.convergence.iterations =
          std::max(result.convergence.iterations, b_side.report.iterations);
      result.convergence.final_residual = std::max(
          result.convergence.final_residual, b_side.report.final_residual);
      result.convergence.shifted =
          result.convergence.shifted || b_side.report.shifted;
      break;
    }
  }

  const auto positive = [](const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
  };
  if (!positive(result.a) || !positive(result.b)) {
    throw Error(ErrorCode::kPreconditionFailed,
                "converged ratings are not strictly positive");
  }

  const double wa = norm2(multiply(w, result.a));
  const double wb = norm2(multiply(w_rev, result.b));
  result.lambda = 1.0 / wa;
  result.mu = 1.0 / wb;
  result.alpha = wa;
  result.beta = wb;
  result.rho = wa * wb;

  result.warnings = detect_degeneracy(w, w_rev, options.degeneracy_tolerance);
  add_near_ties(result.a, Side::kA, options.tie_tolerance, result.warnings);
  add_near_ties(result.b, Side::kB, options.tie_tolerance, result.warnings);
  return result;
}

}  // namespace bicentrality::centrality
