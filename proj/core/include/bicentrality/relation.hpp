#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bicentrality/matrix.hpp"

namespace bicentrality {

/// A positive weight relation between item sets A and B, stored as its
/// m x n weight matrix W: rows are B-items, columns are A-items, and
/// W(i, j) is the weight of the pair (a_j, b_i). A zero entry means the
/// pair is not related.
class WeightRelation {
 public:
  /// Throws Error(kDimensionMismatch | kDuplicateLabel | kNegativeWeight |
  /// kNonFiniteWeight | kEmptyRelation) if the invariants do not hold.
  WeightRelation(std::vector<std::string> a_labels,
                 std::vector<std::string> b_labels, Matrix weights);

  /// Labels a1..an and b1..bm.
  static WeightRelation with_default_labels(Matrix weights);

  const std::vector<std::string>& a_labels() const noexcept {
    return a_labels_;
  }
  const std::vector<std::string>& b_labels() const noexcept {
    return b_labels_;
  }
  const Matrix& weights() const noexcept { return weights_; }

  std::size_t a_count() const noexcept { return a_labels_.size(); }
  std::size_t b_count() const noexcept { return b_labels_.size(); }

  friend bool operator==(const WeightRelation&,
                         const WeightRelation&) = default;

 private:
  std::vector<std::string> a_labels_;
  std::vector<std::string> b_labels_;
  Matrix weights_;
};

}  // namespace bicentrality
