#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bicentrality/matrix.hpp"
#include "bicentrality/relation.hpp"
#include "bicentrality/spectral.hpp"
#include "bicentrality/transform.hpp"

namespace bicentrality::centrality {

using spectral::ConvergenceReport;
using spectral::PowerSettings;

enum class Side { kA, kB, kC };
std::string_view side_name(Side side) noexcept;

enum class WarningCode {
  kConstantAVector,  // W' W has equal row sums: every A-item ties
  kConstantBVector,  // W W' has equal row sums: every B-item ties
  kNearTie,          // two items on one side score within the tie tolerance
};
std::string_view warning_code_name(WarningCode code) noexcept;

struct Warning {
  WarningCode code;
  Side side;
  std::string message;
};

/// Unit positive eigenvector of a nonnegative irreducible adjacency matrix.
struct NecsResult {
  Vector c;
  /// Dominant eigenvalue: A c = eigenvalue * c.
  double eigenvalue = 0.0;
  /// The reciprocal form c = lambda * A c.
  double lambda = 0.0;
  ConvergenceReport convergence;
};

/// The bicentrality pair: b = lambda W a, a = mu W' b, ||a|| = ||b|| = 1.
struct NebsResult {
  Vector a;
  Vector b;
  double lambda = 0.0;  // 1 / ||W a||
  double mu = 0.0;      // 1 / ||W' b||
  double rho = 0.0;     // dominant eigenvalue of W W' (and W' W)
  double alpha = 0.0;   // W a = alpha b
  double beta = 0.0;    // W' b = beta a
  ConvergenceReport convergence;
  std::vector<Warning> warnings;
};

enum class NebsEngine {
  /// b <- normalize(W a), a <- normalize(W' b); never forms W W'.
  kAlternating,
  /// Separate power iterations on W' W and W W'.
  kProduct,
};

struct NebsOptions {
  NebsEngine engine = NebsEngine::kAlternating;
  /// Relative tolerance for the equal-row-sum degeneracy check.
  double degeneracy_tolerance = 1e-9;
  /// Absolute score gap under which two items are reported as near-tied.
  double tie_tolerance = 1e-9;
};

/// Throws Error(kNotIrreducible | kNonPositiveEigenvalue) or
/// NoConvergenceError.
NecsResult compute_necs(const Matrix& adjacency,
                        const PowerSettings& settings = {});

/// Solves for the bicentrality pair of (rel, phi). Requires W positive, or
/// W W' and W' W both nonnegative irreducible; otherwise throws
/// Error(kPreconditionFailed), or Error(kTransformDomain) if phi cannot be
/// applied. Throws NoConvergenceError when the iteration budget runs out.
NebsResult compute_nebs(const WeightRelation& rel, const ReverseTransform& phi,
                        const PowerSettings& settings = {},
                        const NebsOptions& options = {});

struct AlternatingResult {
  Vector a;
  Vector b;
  ConvergenceReport convergence;
};

/// The alternating engine on its own. `settings.initial_vector` seeds a.
/// On return b = W a / ||W a|| exactly.
AlternatingResult alternating_iterate(const Matrix& w, const Matrix& w_rev,
                                      const PowerSettings& settings = {});

struct BaselineAverages {
  Vector a_bar;  // column means over the B-items
  Vector b_bar;  // row means over the A-items
};

BaselineAverages baseline_averages(const WeightRelation& rel);

/// Constant-vector warnings when W W' or W' W has equal row sums, up to
/// `relative_tol` times the largest row sum. Row sums are computed as
/// W (W' 1) and W' (W 1), without forming the products.
std::vector<Warning> detect_degeneracy(const Matrix& w, const Matrix& w_rev,
                                       double relative_tol = 1e-9);

struct ReverseConstruction {
  Matrix reverse;  // n x m, every row j constant at a_target[j] / s
  ReverseTransform phi;
  double lambda = 0.0;
  double mu = 0.0;
};

/// Builds W' with W' W a_target = a_target, and the lookup transform that
/// produces it from W. W must be entrywise positive with pairwise distinct
/// entries so that the lookup is a function; a_target must be positive with
/// unit norm.
///
/// Throws Error(kDistinctnessViolation | kDimensionMismatch |
/// kInvalidArgument).
ReverseConstruction construct_reverse_for_target(const Matrix& w,
                                                 const Vector& a_target);

struct RatingEntry {
  std::string label;
  double score = 0.0;
  std::size_t rank = 0;
  bool tied = false;
  std::size_t index = 0;  // position in the input
};

struct RatingTable {
  std::vector<RatingEntry> entries;
};

/// Competition ranking by descending score. Scores within tie_tol of their
/// neighbour in sorted order form a tie group that shares the group's best
/// rank and keeps input order.
RatingTable rank(const Vector& scores, const std::vector<std::string>& labels,
                 double tie_tol = 1e-9);

}  // namespace bicentrality::centrality
