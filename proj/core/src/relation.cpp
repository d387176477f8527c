#include "bicentrality/relation.hpp"

#include <cmath>
#include <unordered_set>

#include "bicentrality/errors.hpp"

namespace bicentrality {
namespace {

void require_distinct(const std::vector<std::string>& labels,
                      const char* side) {
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  std::string("duplicate ") + side + "-label '" + label + "'");
    }
  }
}

std::vector<std::string> numbered(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

}  // namespace

WeightRelation::WeightRelation(std::vector<std::string> a_labels,
                               std::vector<std::string> b_labels,
                               Matrix weights)
    : a_labels_(std::move(a_labels)),
      b_labels_(std::move(b_labels)),
      weights_(std::move(weights)) {
  if (a_labels_.empty() || b_labels_.empty()) {
    throw Error(ErrorCode::kEmptyRelation,
                "a weight relation needs at least one item on each side");
  }
  if (weights_.rows() != b_labels_.size() ||
      weights_.cols() != a_labels_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "weight matrix must be |B| x |A| (" +
                    std::to_string(b_labels_.size()) + " x " +
                    std::to_string(a_labels_.size()) + "), got " +
                    std::to_string(weights_.rows()) + " x " +
                    std::to_string(weights_.cols()));
  }
  require_distinct(a_labels_, "A");
  require_distinct(b_labels_, "B");
  for (std::size_t i = 0; i < weights_.rows(); ++i) {
    for (std::size_t j = 0; j < weights_.cols(); ++j) {
      const double w = weights_(i, j);
      if (!std::isfinite(w)) {
        throw Error(ErrorCode::kNonFiniteWeight,
                    "weight of (" + a_labels_[j] + ", " + b_labels_[i] +
                        ") is not finite");
      }
      if (w < 0.0) {
        throw Error(ErrorCode::kNegativeWeight,
                    "weight of (" + a_labels_[j] + ", " + b_labels_[i] +
                        ") is negative");
      }
    }
  }
}

WeightRelation WeightRelation::with_default_labels(Matrix weights) {
  auto a = numbered("a", weights.cols());
  auto b = numbered("b", weights.rows());
  return WeightRelation(std::move(a), std::move(b), std::move(weights));
}

}  // namespace bicentrality
