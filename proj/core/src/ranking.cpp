#include <algorithm>
#include <numeric>

#include "bicentrality/centrality.hpp"
#include "bicentrality/errors.hpp"

namespace bicentrality::centrality {

RatingTable rank(const Vector& scores, const std::vector<std::string>& labels,
                 double tie_tol) {
  if (scores.size() != labels.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "scores and labels differ in length");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return scores[x] > scores[y];
                   });

  RatingTable table;
  table.entries.reserve(order.size());
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() &&
           scores[order[end - 1]] - scores[order[end]] <= tie_tol) {
      ++end;
    }
    std::sort(order.begin() + start, order.begin() + end);
    const bool tied = end - start > 1;
    for (std::size_t p = start; p < end; ++p) {
      const std::size_t idx = order[p];
      table.entries.push_back({labels[idx], scores[idx], start + 1, tied, idx});
    }
    start = end;
  }
  return table;
}

}  // namespace bicentrality::centrality
