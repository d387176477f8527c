// Small dense eigen-oracle used to cross-check power iteration. Deliberately
// self-contained: it works on plain nested arrays and never calls the
// matrix-vector helpers the iterative solvers use.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "bicentrality/errors.hpp"
#include "bicentrality/spectral.hpp"

namespace bicentrality::spectral {
namespace {

constexpr std::size_t kMaxOracleDimension = 6;

using Square = std::vector<std::vector<double>>;

Square to_square(const Matrix& m) {
  Square a(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  }
  return a;
}

// Faddeev-LeVerrier: N_1 = I, c_{k-j} = -tr(A N_j) / j,
// N_{j+1} = A N_j + c_{k-j} I.
std::vector<double> faddeev_leverrier(const Square& a) {
  const std::size_t k = a.size();
  std::vector<double> c(k + 1, 0.0);
  c[k] = 1.0;
  Square n(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) n[i][i] = 1.0;
  for (std::size_t j = 1; j <= k; ++j) {
    Square an(k, std::vector<double>(k, 0.0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t s = 0; s < k; ++s) an[r][s] += a[r][l] * n[l][s];
      }
    }
    double trace = 0.0;
    for (std::size_t r = 0; r < k; ++r) trace += an[r][r];
    c[k - j] = -trace / static_cast<double>(j);
    n = std::move(an);
    for (std::size_t r = 0; r < k; ++r) n[r][r] += c[k - j];
  }
  return c;
}

double evaluate(const std::vector<double>& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Magnitude of the terms of p at x; used to judge whether p(x) is zero to
// working precision.
double evaluation_scale(const std::vector<double>& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * std::abs(x) + std::abs(p[i]);
  }
  return acc;
}

std::vector<double> derivative(const std::vector<double>& p) {
  std::vector<double> d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * static_cast<double>(i));
  }
  return d;
}

double bisect(const std::vector<double>& p, double lo, double hi) {
  double flo = evaluate(p, lo);
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = evaluate(p, mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// All real roots of p inside [-bound, bound]. Critical points (roots of p')
// split the line into monotone pieces, each holding at most one simple root;
// a critical point where p vanishes to working precision is a multiple root.
std::vector<double> real_roots(const std::vector<double>& p, double bound) {
  std::size_t degree = p.size() - 1;
  while (degree > 0 && p[degree] == 0.0) --degree;
  if (degree == 0) return {};
  std::vector<double> poly(p.begin(), p.begin() + degree + 1);
  if (degree == 1) return {-poly[0] / poly[1]};

  std::vector<double> knots{-bound};
  std::vector<double> roots;
  for (double x : real_roots(derivative(poly), bound)) {
    const double eps = 64.0 * std::numeric_limits<double>::epsilon();
    if (std::abs(evaluate(poly, x)) <= eps * evaluation_scale(poly, x)) {
      roots.push_back(x);
    }
    knots.push_back(x);
  }
  knots.push_back(bound);
  std::sort(knots.begin(), knots.end());
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double lo = knots[i];
    const double hi = knots[i + 1];
    const double flo = evaluate(poly, lo);
    const double fhi = evaluate(poly, hi);
    if (flo == 0.0) roots.push_back(lo);
    if ((flo < 0.0 && fhi > 0.0) || (flo > 0.0 && fhi < 0.0)) {
      roots.push_back(bisect(poly, lo, hi));
    }
  }
  if (evaluate(poly, knots.back()) == 0.0) roots.push_back(knots.back());
  return roots;
}

// Null vector of the singular k x k matrix a by Gaussian elimination with
// complete pivoting; the last pivot is treated as zero.
std::vector<double> null_vector(Square a) {
  const std::size_t k = a.size();
  std::vector<std::size_t> col(k);
  for (std::size_t j = 0; j < k; ++j) col[j] = j;

  for (std::size_t step = 0; step + 1 < k; ++step) {
    std::size_t pr = step;
    std::size_t pc = step;
    double best = -1.0;
    for (std::size_t r = step; r < k; ++r) {
      for (std::size_t c = step; c < k; ++c) {
        if (std::abs(a[r][col[c]]) > best) {
          best = std::abs(a[r][col[c]]);
          pr = r;
          pc = c;
        }
      }
    }
    if (best == 0.0) {
      throw Error(ErrorCode::kOracleFailure,
                  "dominant eigenvalue has a multi-dimensional eigenspace");
    }
    std::swap(a[step], a[pr]);
    std::swap(col[step], col[pc]);
    const double pivot = a[step][col[step]];
    for (std::size_t r = step + 1; r < k; ++r) {
      const double factor = a[r][col[step]] / pivot;
      if (factor == 0.0) continue;
      for (std::size_t c = step; c < k; ++c) {
        a[r][col[c]] -= factor * a[step][col[c]];
      }
    }
  }

  std::vector<double> permuted(k, 0.0);
  permuted[k - 1] = 1.0;
  for (std::size_t r = k - 1; r-- > 0;) {
    double acc = 0.0;
    for (std::size_t c = r + 1; c < k; ++c) acc += a[r][col[c]] * permuted[c];
    permuted[r] = -acc / a[r][col[r]];
  }
  std::vector<double> x(k, 0.0);
  for (std::size_t c = 0; c < k; ++c) x[col[c]] = permuted[c];
  return x;
}

}  // namespace

std::vector<double> characteristic_polynomial(const Matrix& m) {
  if (!m.square() || m.empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "characteristic polynomial needs a non-empty square matrix");
  }
  const Square a = to_square(m);
  switch (a.size()) {
    case 1:
      return {-a[0][0], 1.0};
    case 2: {
      const double trace = a[0][0] + a[1][1];
      const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
      return {det, -trace, 1.0};
    }
    case 3: {
      const double trace = a[0][0] + a[1][1] + a[2][2];
      const double minors = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) +
                            (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
                            (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
      const double det =
          a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
          a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
          a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
      return {-det, minors, -trace, 1.0};
    }
    default:
      return faddeev_leverrier(a);
  }
}

Eigenpair dominant_eigenpair_oracle(const Matrix& m) {
  if (!m.square() || m.empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "oracle needs a non-empty square matrix");
  }
  const std::size_t k = m.rows();
  if (k > kMaxOracleDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle supports matrices up to 6 x 6");
  }

  const std::vector<double> poly = characteristic_polynomial(m);
  double bound = 0.0;
  for (std::size_t i = 0; i < k; ++i) bound = std::max(bound, std::abs(poly[i]));
  bound += 1.0;

  const std::vector<double> roots = real_roots(poly, bound);
  if (roots.empty()) {
    throw Error(ErrorCode::kOracleFailure, "no real eigenvalue found");
  }
  const double rho = *std::max_element(roots.begin(), roots.end());
  if (!(rho > 0.0)) {
    throw Error(ErrorCode::kOracleFailure,
                "largest real eigenvalue is not positive");
  }

  Square shifted = to_square(m);
  for (std::size_t i = 0; i < k; ++i) shifted[i][i] -= rho;
  std::vector<double> v = k == 1 ? std::vector<double>{1.0} : null_vector(shifted);

  double sum = 0.0;
  for (double x : v) sum += x;
  if (sum < 0.0) {
    for (double& x : v) x = -x;
  }
  double length = 0.0;
  for (double x : v) length += x * x;
  length = std::sqrt(length);
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw Error(ErrorCode::kOracleFailure, "degenerate eigenvector");
  }
  for (double& x : v) {
    x /= length;
    if (x < -1e-9) {
      throw Error(ErrorCode::kOracleFailure,
                  "dominant eigenvector is not nonnegative");
    }
    x = std::max(x, 0.0);
  }
  return {std::move(v), rho};
}

}  // namespace bicentrality::spectral
