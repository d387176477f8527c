#include <algorithm>
#include <vector>

#include "bicentrality/errors.hpp"
#include "bicentrality/spectral.hpp"

namespace bicentrality::spectral {
namespace {

// Marks every vertex reachable from vertex 0. With `forward`, vertex j
// reaches i through M(i, j) > 0; otherwise edges are reversed.
std::size_t reach_from_origin(const Matrix& m, bool forward) {
  const std::size_t k = m.rows();
  std::vector<char> seen(k, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < k; ++w) {
      const double entry = forward ? m(w, u) : m(u, w);
      if (entry > 0.0 && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

bool is_irreducible(const Matrix& m) {
  if (!m.square()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "irreducibility is defined for square matrices");
  }
  if (m.empty()) return false;
  const std::size_t k = m.rows();
  return reach_from_origin(m, true) == k && reach_from_origin(m, false) == k;
}

bool has_equal_row_sums(const Matrix& m, double tol) {
  if (!m.square()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "row-sum check expects a square matrix");
  }
  if (m.empty()) return true;
  const Vector sums = row_sums(m);
  const auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
  return *hi - *lo <= tol;
}

}  // namespace bicentrality::spectral
