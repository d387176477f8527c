#include <cmath>
#include <map>

#include "bicentrality/centrality.hpp"
#include "bicentrality/errors.hpp"

namespace bicentrality::centrality {

ReverseConstruction construct_reverse_for_target(const Matrix& w,
                                                 const Vector& a_target) {
  if (w.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "W must be non-empty");
  }
  if (a_target.size() != w.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "target has length " + std::to_string(a_target.size()) +
                    " but W has " + std::to_string(w.cols()) + " columns");
  }
  if (!all_finite(w) || !all_positive(w)) {
    throw Error(ErrorCode::kInvalidArgument, "W must be entrywise positive");
  }
  for (double x : a_target) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "target vector must be strictly positive");
    }
  }
  if (std::abs(norm2(a_target) - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument,
                "target vector must have unit Euclidean norm");
  }

  const std::size_t m = w.rows();
  const std::size_t n = w.cols();

  // d = W a; s sums the m entries of d; row j of W' is a_j / s.
  const Vector d = multiply(w, a_target);
  double s = 0.0;
  for (double x : d) s += x;

  Matrix reverse(n, m);
  std::map<double, double> table;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = a_target[j] / s;
    for (std::size_t i = 0; i < m; ++i) {
      reverse(j, i) = t;
      if (!table.emplace(w(i, j), t).second) {
        throw Error(ErrorCode::kDistinctnessViolation,
                    "W has repeated entries, so no transform can map them to "
                    "different reverse weights");
      }
    }
  }

  const double wa = norm2(d);
  return {std::move(reverse), ReverseTransform::table(std::move(table)),
          1.0 / wa, wa};
}

}  // namespace bicentrality::centrality
