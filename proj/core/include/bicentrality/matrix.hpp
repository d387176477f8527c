#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bicentrality {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Row-wise literal; every row must have the same length.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t k);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(double scalar, const Matrix& m);

/// y = M x. Accumulates each row left to right, so results are
/// deterministic for a given input.
Vector multiply(const Matrix& m, std::span<const double> x);

/// Row sums, i.e. M * [1 ... 1]^T.
Vector row_sums(const Matrix& m);

double norm2(std::span<const double> v);
double distance2(std::span<const double> x, std::span<const double> y);

/// Scales v to unit Euclidean norm in place; returns the original norm.
/// Leaves v untouched when its norm is zero.
double normalize(Vector& v);

bool all_positive(const Matrix& m);
bool all_nonnegative(const Matrix& m);
bool all_finite(const Matrix& m);

}  // namespace bicentrality
