#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bicentrality/matrix.hpp"

namespace bicentrality::spectral {

struct PowerSettings {
  /// Convergence when successive normalized iterates differ by at most this
  /// much in Euclidean norm.
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
  /// Strictly positive starting vector; all-ones when empty.
  std::optional<Vector> initial_vector;

  /// Throws Error(kInvalidArgument) for a bad tolerance, iteration cap or
  /// initial vector. `dimension` is the expected initial vector length.
  void validate(std::size_t dimension) const;
};

struct ConvergenceReport {
  std::size_t iterations = 0;
  double final_residual = 0.0;
  std::vector<double> residual_trace;
  /// Geometric mean of successive residual ratios over the last ten
  /// iterations; only set when it falls in (0, 1).
  std::optional<double> rate_estimate;
  double tolerance = 0.0;
  /// Set when plain iteration stalled and the iteration was restarted on a
  /// diagonally shifted matrix to break periodicity.
  bool shifted = false;
};

/// Computes the rate estimate from a residual trace, or nullopt when there
/// are too few positive residuals or the estimate is not in (0, 1).
std::optional<double> estimate_rate(const std::vector<double>& trace);

struct Eigenpair {
  Vector vector;  // unit Euclidean norm, nonnegative
  double eigenvalue = 0.0;
};

struct PowerResult {
  Vector vector;
  /// ||M v||, which equals the dominant eigenvalue at the fixed point.
  double eigenvalue = 0.0;
  ConvergenceReport report;
};

/// Power iteration c_r = M (c_{r-1} / ||c_{r-1}||) for a nonnegative square
/// matrix. If the iteration has not converged after half of the iteration
/// budget, it restarts on M + sI with s the largest row sum of M, which has
/// the same eigenvectors but no other eigenvalue of the same modulus.
///
/// Throws NoConvergenceError when the budget runs out and Error(kZeroVector)
/// when an iterate vanishes.
PowerResult power_iterate(const Matrix& m, const PowerSettings& settings = {});

/// Dominant eigenpair of a small (k <= 6) nonnegative matrix via the roots
/// of its characteristic polynomial and a null-space solve. Shares no code
/// with power_iterate; meant as a test oracle. Throws Error(kOracleFailure)
/// if no positive real dominant root exists, Error(kInvalidArgument) for
/// k > 6.
Eigenpair dominant_eigenpair_oracle(const Matrix& m);

/// Coefficients c_0..c_k of det(tI - M) = sum c_i t^i (c_k = 1).
std::vector<double> characteristic_polynomial(const Matrix& m);

/// True iff the digraph with an edge j -> i for every M(i, j) > 0 is
/// strongly connected. Linear in the number of nonzeros.
bool is_irreducible(const Matrix& m);

/// max row sum - min row sum <= tol.
bool has_equal_row_sums(const Matrix& m, double tol);

}  // namespace bicentrality::spectral
