#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "sp2eig/errors.hpp"

namespace sp2eig {

/// Relative pivot threshold for rank decisions: a pivot at or below
/// kPivotRel times the largest row norm counts as zero.
inline constexpr double kPivotRel = 1e-10;

/// Dense real matrix, row-major.
class RealMatrix {
 public:
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static RealMatrix identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double row_norm(std::size_t r) const {
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * (*this)(r, c);
    return std::sqrt(s);
  }

  double max_row_norm() const {
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) m = std::max(m, row_norm(r));
    return m;
  }

  std::vector<double> apply(const std::vector<double>& v) const {
    std::vector<double> out(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

inline double euclidean_norm(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

/// Numerical rank plus an orthonormal kernel basis.
struct RankKernel {
  int rank = 0;
  // Basis vectors of length cols(), ordered by ascending free column,
  // orthonormalized in that order, each with its first largest-magnitude
  // coordinate made positive. Deterministic for a given input.
  std::vector<std::vector<double>> kernel;
};

/// Row reduction with partial pivoting; pivots at or below tol count as
/// zero. Works for rectangular matrices.
inline RankKernel rank_and_kernel(const RealMatrix& m, double tol) {
  if (!(tol >= 0.0))
    throw std::invalid_argument("rank_and_kernel: tol must be >= 0");
  RealMatrix r = m;
  const std::size_t rows = r.rows(), cols = r.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    for (std::size_t i = row + 1; i < rows; ++i)
      if (std::abs(r(i, col)) > std::abs(r(p, col))) p = i;
    if (std::abs(r(p, col)) <= tol) continue;  // free column
    if (p != row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(r(p, c), r(row, c));
    const double inv = 1.0 / r(row, col);
    for (std::size_t c = 0; c < cols; ++c) r(row, c) *= inv;
    r(row, col) = 1.0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row) continue;
      const double f = r(i, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols; ++c) r(i, c) -= f * r(row, c);
      r(i, col) = 0.0;
    }
    pivot_cols.push_back(col);
    ++row;
  }

  RankKernel out;
  out.rank = static_cast<int>(pivot_cols.size());

  std::vector<bool> is_pivot(cols, false);
  for (const std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<double> v(cols, 0.0);
    v[free] = 1.0;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v[pivot_cols[k]] = -r(k, free);
    out.kernel.push_back(std::move(v));
  }

  // Modified Gram-Schmidt keeps the ascending free-column order.
  for (std::size_t i = 0; i < out.kernel.size(); ++i) {
    auto& v = out.kernel[i];
    for (std::size_t j = 0; j < i; ++j) {
      const auto& u = out.kernel[j];
      const double d = std::inner_product(u.begin(), u.end(), v.begin(), 0.0);
      for (std::size_t c = 0; c < cols; ++c) v[c] -= d * u[c];
    }
    const double n = euclidean_norm(v);
    for (auto& e : v) e /= n;
    std::size_t imax = 0;
    for (std::size_t c = 1; c < cols; ++c)
      if (std::abs(v[c]) > std::abs(v[imax])) imax = c;
    if (v[imax] < 0.0)
      for (auto& e : v) e = -e;
  }
  return out;
}

inline RankKernel rank_and_kernel(const RealMatrix& m) {
  return rank_and_kernel(m, kPivotRel * m.max_row_norm());
}

namespace detail {

struct LuFactors {
  std::size_t n = 0;
  std::vector<double> lu;          // unit-lower L below, U on and above
  std::vector<std::size_t> perm;   // row permutation
};

inline LuFactors lu_factor(const RealMatrix& m, double pivot_tol) {
  const std::size_t n = m.rows();
  LuFactors f;
  f.n = n;
  f.lu.resize(n * n);
  f.perm.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    f.perm[r] = r;
    for (std::size_t c = 0; c < n; ++c) f.lu[r * n + c] = m(r, c);
  }
  auto at = [&f, n](std::size_t r, std::size_t c) -> double& {
    return f.lu[r * n + c];
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(at(r, col)) > std::abs(at(p, col))) p = r;
    if (std::abs(at(p, col)) <= pivot_tol)
      throw singular_system_error(
          "solve_linear: pivot " + std::to_string(std::abs(at(p, col))) +
          " in column " + std::to_string(col) + " is at or below the rank threshold");
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(p, c), at(col, c));
      std::swap(f.perm[p], f.perm[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      at(r, col) /= at(col, col);
      const double l = at(r, col);
      for (std::size_t c = col + 1; c < n; ++c) at(r, c) -= l * at(col, c);
    }
  }
  return f;
}

inline std::vector<double> lu_solve(const LuFactors& f,
                                    const std::vector<double>& b) {
  const std::size_t n = f.n;
  std::vector<double> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = b[f.perm[r]];
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) x[r] -= f.lu[r * n + c] * x[c];
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t c = r + 1; c < n; ++c) x[r] -= f.lu[r * n + c] * x[c];
    x[r] /= f.lu[r * n + r];
  }
  return x;
}

}  // namespace detail

/// Solve M x = b by Gaussian elimination with partial pivoting and one
/// step of iterative refinement. Throws singular_system_error when a
/// pivot falls at or below pivot_tol; callers that can handle the
/// rank-deficient case fall back to the kernel route.
inline std::vector<double> solve_linear(const RealMatrix& m,
                                        const std::vector<double>& b,
                                        double pivot_tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("solve_linear: matrix must be square");
  if (b.size() != m.rows())
    throw std::invalid_argument("solve_linear: right-hand side has wrong length");
  const detail::LuFactors f = detail::lu_factor(m, pivot_tol);
  std::vector<double> x = detail::lu_solve(f, b);
  std::vector<double> residual = m.apply(x);
  for (std::size_t i = 0; i < b.size(); ++i) residual[i] = b[i] - residual[i];
  const std::vector<double> dx = detail::lu_solve(f, residual);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
  return x;
}

inline std::vector<double> solve_linear(const RealMatrix& m,
                                        const std::vector<double>& b) {
  return solve_linear(m, b, kPivotRel * m.max_row_norm());
}

}  // namespace sp2eig
