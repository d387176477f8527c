#include <algorithm>
#include <cmath>

#include "bicentrality/errors.hpp"
#include "bicentrality/spectral.hpp"

namespace bicentrality::spectral {
namespace {

void require_nonnegative_square(const Matrix& m) {
  if (m.empty() || !m.square()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "power iteration needs a non-empty square matrix");
  }
  if (!all_finite(m) || !all_nonnegative(m)) {
    throw Error(ErrorCode::kInvalidArgument,
                "power iteration needs a finite nonnegative matrix");
  }
}

// Runs up to `budget` steps of v <- normalize(M v + shift v) starting from v.
// Returns true on convergence.
bool run_iterations(const Matrix& m, double shift, std::size_t budget,
                    double tolerance, Vector& v, ConvergenceReport& report) {
  for (std::size_t step = 0; step < budget; ++step) {
    Vector next = multiply(m, v);
    if (shift != 0.0) {
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += shift * v[i];
    }
    const double length = normalize(next);
    if (!std::isfinite(length)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "power iteration overflowed; rescale the matrix");
    }
    if (length == 0.0) {
      throw Error(ErrorCode::kZeroVector,
                  "power iterate collapsed to the zero vector after " +
                      std::to_string(report.iterations + 1) + " iterations");
    }
    const double residual = distance2(next, v);
    v = std::move(next);
    ++report.iterations;
    report.residual_trace.push_back(residual);
    report.final_residual = residual;
    if (residual <= tolerance) return true;
  }
  return false;
}

}  // namespace

void PowerSettings::validate(std::size_t dimension) const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_iterations must be at least 1");
  }
  if (initial_vector) {
    if (initial_vector->size() != dimension) {
      throw Error(ErrorCode::kInvalidArgument,
                  "initial vector has length " +
                      std::to_string(initial_vector->size()) + ", expected " +
                      std::to_string(dimension));
    }
    for (double x : *initial_vector) {
      if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "initial vector must be strictly positive");
      }
    }
  }
}

std::optional<double> estimate_rate(const std::vector<double>& trace) {
  constexpr std::size_t kWindow = 10;
  if (trace.size() < 2) return std::nullopt;
  const std::size_t ratios = std::min(kWindow, trace.size() - 1);
  const double last = trace.back();
  const double first = trace[trace.size() - 1 - ratios];
  if (!(first > 0.0) || !(last > 0.0)) return std::nullopt;
  const double rate = std::pow(last / first, 1.0 / static_cast<double>(ratios));
  if (!(rate > 0.0 && rate < 1.0)) return std::nullopt;
  return rate;
}

PowerResult power_iterate(const Matrix& m, const PowerSettings& settings) {
  require_nonnegative_square(m);
  const std::size_t k = m.rows();
  settings.validate(k);

  PowerResult result;
  result.report.tolerance = settings.tolerance;
  Vector v = settings.initial_vector.value_or(Vector(k, 1.0));
  normalize(v);

  const std::size_t plain_budget = (settings.max_iterations + 1) / 2;
  bool converged = run_iterations(m, 0.0, plain_budget, settings.tolerance, v,
                                  result.report);
  if (!converged) {
    const Vector sums = row_sums(m);
    const double shift = *std::max_element(sums.begin(), sums.end());
    result.report.shifted = true;
    converged = run_iterations(m, shift,
                               settings.max_iterations - plain_budget,
                               settings.tolerance, v, result.report);
  }
  if (!converged) {
    throw NoConvergenceError(result.report.iterations,
                             result.report.final_residual);
  }

  result.eigenvalue = norm2(multiply(m, v));
  result.report.rate_estimate = estimate_rate(result.report.residual_trace);
  result.vector = std::move(v);
  return result;
}

}  // namespace bicentrality::spectral
