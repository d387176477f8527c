#include "bicentrality/centrality.hpp"
#include "bicentrality/errors.hpp"

namespace bicentrality::centrality {

NecsResult compute_necs(const Matrix& adjacency,
                        const PowerSettings& settings) {
  if (adjacency.empty() || !adjacency.square()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "adjacency matrix must be non-empty and square");
  }
  if (!all_finite(adjacency) || !all_nonnegative(adjacency)) {
    throw Error(ErrorCode::kInvalidArgument,
                "adjacency matrix must be finite and nonnegative");
  }
  if (!spectral::is_irreducible(adjacency)) {
    throw Error(ErrorCode::kNotIrreducible,
                "adjacency matrix is reducible; its dominant eigenvector is "
                "not guaranteed to be positive or unique");
  }
  bool any_positive = false;
  for (double x : adjacency.data()) any_positive = any_positive || x > 0.0;
  if (!any_positive) {
    throw Error(ErrorCode::kNonPositiveEigenvalue,
                "zero adjacency matrix has spectral radius 0");
  }

  spectral::PowerResult power = spectral::power_iterate(adjacency, settings);
  if (!(power.eigenvalue > 0.0)) {
    throw Error(ErrorCode::kNonPositiveEigenvalue,
                "dominant eigenvalue is not positive");
  }
  for (double x : power.vector) {
    if (!(x > 0.0)) {
      throw Error(ErrorCode::kNotIrreducible,
                  "converged eigenvector has a zero component");
    }
  }

  NecsResult result;
  result.c = std::move(power.vector);
  result.eigenvalue = power.eigenvalue;
  result.lambda = 1.0 / power.eigenvalue;
  result.convergence = std::move(power.report);
  return result;
}

}  // namespace bicentrality::centrality
