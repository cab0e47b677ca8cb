#pragma once

// Test-only oracles, kept independent of the library's computation
// paths: a cofactor-expansion determinant and a complex-adjoint-based
// matrix inverse to cross-check the elimination determinant and the
// Schur-formula inverse.

#include <array>
#include <complex>
#include <stdexcept>

#include "sp2eig/matrix.hpp"
#include "sp2eig/random.hpp"

namespace sp2eig::test {

using Cx = std::complex<double>;

inline Cx det2_cof(Cx a, Cx b, Cx c, Cx d) { return a * d - b * c; }

inline Cx det3_cof(const std::array<std::array<Cx, 3>, 3>& m) {
  return m[0][0] * det2_cof(m[1][1], m[1][2], m[2][1], m[2][2]) -
         m[0][1] * det2_cof(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2_cof(m[1][0], m[1][1], m[2][0], m[2][1]);
}

// Laplace expansion along the first row; no pivoting, no elimination.
inline Cx det4_cofactor(const ComplexAdjoint& m) {
  Cx det{};
  double sign = 1.0;
  for (int skip = 0; skip < 4; ++skip) {
    std::array<std::array<Cx, 3>, 3> minor{};
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == skip) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    det += sign * m[0][skip] * det3_cof(minor);
    sign = -sign;
  }
  return det;
}

inline double adjoint_det_oracle(const MatH2& a) {
  return det4_cofactor(complex_adjoint(a)).real();
}

// Invert the 4x4 complex adjoint by Gauss-Jordan and map the blocks back
// to quaternions. Exercises none of the Schur-formula code.
inline MatH2 inverse_via_adjoint(const MatH2& a) {
  ComplexAdjoint m = complex_adjoint(a);
  std::array<std::array<Cx, 4>, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < 4; ++col) {
    int p = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[p][col])) p = r;
    if (std::abs(m[p][col]) < 1e-14)
      throw std::runtime_error("inverse_via_adjoint: singular");
    std::swap(m[p], m[col]);
    std::swap(inv[p], inv[col]);
    const Cx piv = m[col][col];
    for (int c = 0; c < 4; ++c) {
      m[col][c] /= piv;
      inv[col][c] /= piv;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const Cx f = m[r][col];
      if (f == Cx{}) continue;
      for (int c = 0; c < 4; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  const auto block = [&inv](int r, int c) {
    const Cx a2 = inv[2 * r][2 * c];
    const Cx b2 = inv[2 * r][2 * c + 1];
    return Quaternion{a2.real(), a2.imag(), b2.real(), b2.imag()};
  };
  return {block(0, 0), block(0, 1), block(1, 0), block(1, 1)};
}

inline Quaternion random_gauss_quat(Rng& rng) {
  std::normal_distribution<double> gauss;
  return {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
}

inline MatH2 random_gauss_mat(Rng& rng) {
  return {random_gauss_quat(rng), random_gauss_quat(rng),
          random_gauss_quat(rng), random_gauss_quat(rng)};
}

inline double entry_distance(const MatH2& a, const MatH2& b) {
  const MatH2 d = a - b;
  return std::sqrt(std::max({norm_sq(d.a11), norm_sq(d.a12), norm_sq(d.a21),
                             norm_sq(d.a22)}));
}

// The two golden matrices with 1, i, j, k as left eigenvalues:
// (1/4) [[u, -sqrt(3) u], [sqrt(3) u, u]] and its sign mirror, u = 1+i+j+k.
inline MatH2 golden_matrix_first() {
  const Quaternion u{1.0, 1.0, 1.0, 1.0};
  const double r3 = std::sqrt(3.0);
  return {0.25 * u, -0.25 * r3 * u, 0.25 * r3 * u, 0.25 * u};
}

inline MatH2 golden_matrix_second() {
  const Quaternion u{1.0, 1.0, 1.0, 1.0};
  const double r3 = std::sqrt(3.0);
  return {0.25 * u, 0.25 * r3 * u, -0.25 * r3 * u, 0.25 * u};
}

}  // namespace sp2eig::test
