#include "bicentrality/centrality.hpp"

namespace bicentrality::centrality {

BaselineAverages baseline_averages(const WeightRelation& rel) {
  const Matrix& w = rel.weights();
  const double m = static_cast<double>(w.rows());
  const double n = static_cast<double>(w.cols());
  BaselineAverages out{Vector(w.cols(), 0.0), Vector(w.rows(), 0.0)};
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      out.a_bar[j] += w(i, j);
      out.b_bar[i] += w(i, j);
    }
  }
  for (double& x : out.a_bar) x /= m;
  for (double& x : out.b_bar) x /= n;
  return out;
}

}  // namespace bicentrality::centrality
