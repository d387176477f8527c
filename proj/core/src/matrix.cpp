#include "bicentrality/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "bicentrality/errors.hpp"

namespace bicentrality {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
  }
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t l = 0; l < lhs.cols(); ++l) {
      const double x = lhs(i, l);
      if (x == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += x * rhs(l, j);
    }
  }
  return out;
}

Matrix operator*(double scalar, const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= scalar;
  }
  return out;
}

Vector multiply(const Matrix& m, std::span<const double> x) {
  if (m.cols() != x.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix-vector product shape mismatch");
  }
  Vector y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

Vector row_sums(const Matrix& m) {
  Vector s(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (double v : m.row(i)) s[i] += v;
  }
  return s;
}

double norm2(std::span<const double> v) {
  // Scaled accumulation avoids overflow for large weights.
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (double x : v) {
    const double y = x / scale;
    sum += y * y;
  }
  return scale * std::sqrt(sum);
}

double distance2(std::span<const double> x, std::span<const double> y) {
  Vector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return norm2(d);
}

double normalize(Vector& v) {
  const double n = norm2(v);
  if (n > 0.0) {
    for (double& x : v) x /= n;
  }
  return n;
}

bool all_positive(const Matrix& m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](double x) { return x > 0.0; });
}

bool all_nonnegative(const Matrix& m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](double x) { return x >= 0.0; });
}

bool all_finite(const Matrix& m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](double x) { return std::isfinite(x); });
}

}  // namespace bicentrality
