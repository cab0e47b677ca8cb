#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>

#include "sp2eig/errors.hpp"
#include "sp2eig/quaternion.hpp"
#include "sp2eig/random.hpp"

namespace sp2eig {

/// Threshold on the complex-adjoint determinant below which a matrix
/// counts as singular, i.e. sigma counts as a left eigenvalue of A when
/// adjoint_det(A - sigma*I) falls at or below it. Shared with the
/// Omega-membership default so the two predicates are complementary.
inline constexpr double kEigenvalueTol = 1e-8;

/// Default tolerance for the rotation-form classifier: entry matching
/// and the imaginary part of a11 * conj(a21).
inline constexpr double kDetectTol = 1e-9;

/// 2x2 matrix over the quaternions. H^2 is always treated as a right
/// quaternionic vector space, so left multiplication by a matrix is
/// H-linear and entries multiply in row-by-column order without
/// commuting.
struct MatH2 {
  Quaternion a11, a12, a21, a22;

  friend constexpr bool operator==(const MatH2&, const MatH2&) = default;
};

/// Composition L_q . R_theta of a planar rotation by theta with left
/// translation by a unit quaternion q. For sin(theta) != 0 these are
/// exactly the symplectic 2x2 matrices with infinitely many left
/// eigenvalues; every other symplectic matrix has one or two.
struct RotationForm {
  Quaternion q;
  double theta = 0.0;
};

constexpr MatH2 identity_mat() { return {kOne, {}, {}, kOne}; }

/// sigma * I: the scalar diagonal matrix.
constexpr MatH2 scalar_mat(const Quaternion& sigma) {
  return {sigma, {}, {}, sigma};
}

constexpr MatH2 operator+(const MatH2& a, const MatH2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

constexpr MatH2 operator-(const MatH2& a, const MatH2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

constexpr MatH2 operator*(double s, const MatH2& a) {
  return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
}

/// Row-by-column product with Hamilton products, in that order.
constexpr MatH2 operator*(const MatH2& a, const MatH2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

/// Conjugate transpose A*.
constexpr MatH2 dagger(const MatH2& a) {
  return {conj(a.a11), conj(a.a21), conj(a.a12), conj(a.a22)};
}

/// Largest entry norm of A A* - I.
inline double symplectic_residual(const MatH2& a) {
  const MatH2 r = a * dagger(a) - identity_mat();
  return std::sqrt(std::max({norm_sq(r.a11), norm_sq(r.a12), norm_sq(r.a21),
                             norm_sq(r.a22)}));
}

inline bool is_symplectic(const MatH2& a, double tol = kDefaultTol) {
  if (tol < 0.0) throw std::invalid_argument("is_symplectic: tol must be >= 0");
  return symplectic_residual(a) <= tol;
}

/// 4x4 complex image of a 2x2 quaternionic matrix: each entry a + b*j
/// (a, b complex) becomes the block [[a, b], [-conj(b), conj(a)]]. The
/// map is a ring homomorphism, so the quaternionic matrix is invertible
/// exactly when this complex matrix is.
using ComplexAdjoint = std::array<std::array<std::complex<double>, 4>, 4>;

inline ComplexAdjoint complex_adjoint(const MatH2& m) {
  ComplexAdjoint out{};
  const std::array<std::array<const Quaternion*, 2>, 2> q{
      {{&m.a11, &m.a12}, {&m.a21, &m.a22}}};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Quaternion& e = *q[r][c];
      const std::complex<double> a{e.t, e.x};
      const std::complex<double> b{e.y, e.z};
      out[2 * r][2 * c] = a;
      out[2 * r][2 * c + 1] = b;
      out[2 * r + 1][2 * c] = -std::conj(b);
      out[2 * r + 1][2 * c + 1] = std::conj(a);
    }
  }
  return out;
}

namespace detail {

// Determinant of a 4x4 complex matrix by elimination with partial
// pivoting; consumes its argument.
inline std::complex<double> det4(ComplexAdjoint m) {
  std::complex<double> det{1.0, 0.0};
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    if (m[c][c] == std::complex<double>{}) return {};
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const std::complex<double> f = m[r][c] / m[c][c];
      for (int k = c + 1; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace detail

/// Determinant of the complex adjoint. Real and nonnegative (up to
/// rounding) for every quaternionic matrix; zero exactly when the matrix
/// is singular. An imaginary residue above 1e-8 cannot come from any
/// input and signals a fault in the adjoint construction itself.
inline double adjoint_det(const MatH2& a) {
  const std::complex<double> d = detail::det4(complex_adjoint(a));
  if (std::abs(d.imag()) > 1e-8)
    throw numeric_fault("adjoint_det: imaginary residue " +
                        std::to_string(d.imag()) + " exceeds 1e-8");
  return d.real();
}

/// True iff A - sigma*I is singular at the determinant tolerance; the
/// tolerance is absolute because every use is at unit scale.
inline bool is_left_eigenvalue(const MatH2& a, const Quaternion& sigma,
                               double tol = kEigenvalueTol) {
  return adjoint_det(a - scalar_mat(sigma)) <= tol;
}

/// [[q cos, -q sin], [q sin, q cos]] for unit q. Symplectic by
/// construction: A A* = |q|^2 (cos^2 + sin^2) I.
inline MatH2 rotation_matrix(const RotationForm& f) {
  if (!is_unit(f.q))
    throw std::invalid_argument("rotation_matrix: q is not unit norm");
  const double c = std::cos(f.theta);
  const double s = std::sin(f.theta);
  return {f.q * c, f.q * -s, f.q * s, f.q * c};
}

/// Point sigma = q (cos(theta) + sin(theta) * omega) of the eigenvalue
/// sphere of L_q . R_theta, for a unit imaginary omega. Every such sigma
/// is a unit quaternion with Re(conj(q) sigma) = cos(theta).
inline Quaternion eigen_sphere_point(const RotationForm& f,
                                     const Quaternion& omega) {
  if (std::abs(omega.t) > kDefaultTol)
    throw std::invalid_argument("eigen_sphere_point: omega is not imaginary");
  if (!is_unit(omega))
    throw std::invalid_argument("eigen_sphere_point: omega is not unit norm");
  if (!is_unit(f.q))
    throw std::invalid_argument("eigen_sphere_point: q is not unit norm");
  return f.q * (Quaternion{std::cos(f.theta), 0.0, 0.0, 0.0} +
                std::sin(f.theta) * omega);
}

/// Recover (q, theta) when A lies in the rotation family with
/// sin(theta) != 0, canonicalized to theta in (0, pi) with q carrying
/// the sign. Matrices outside the family (including sin(theta) = 0,
/// which has a finite spectrum) yield an empty result. Only meaningful
/// for exact family members and golden vectors; the tolerance is tight
/// on purpose.
inline std::optional<RotationForm> detect_rotation_form(
    const MatH2& a, double tol = kDetectTol) {
  if (!is_symplectic(a, tol))
    throw std::invalid_argument("detect_rotation_form: matrix is not symplectic");
  if (norm(a.a11 - a.a22) > tol || norm(a.a12 + a.a21) > tol)
    return std::nullopt;
  const double s_norm = norm(a.a21);
  if (s_norm <= tol) return std::nullopt;
  // Diagonal and off-diagonal must be real multiples of one unit
  // quaternion: a11 * conj(a21) has to be real.
  if (imag_norm(a.a11 * conj(a.a21)) > tol) return std::nullopt;
  Quaternion q;
  if (norm(a.a11) >= s_norm) {
    q = a.a11 / norm(a.a11);
    if (re_dot(q, a.a21) < 0.0) q = -q;  // orient so sin(theta) > 0
  } else {
    q = a.a21 / s_norm;
  }
  const double c = re_dot(q, a.a11);
  const double s = re_dot(q, a.a21);
  return RotationForm{q, std::atan2(s, c)};
}

/// Inverse via the Schur-style block formula, pivoting on the
/// larger-norm first-column entry. Cheap enough for hot paths; the
/// complex-adjoint route stays available as an independent check.
inline MatH2 inverse(const MatH2& d) {
  const bool swapped = norm_sq(d.a21) > norm_sq(d.a11);
  const Quaternion& p = swapped ? d.a21 : d.a11;
  const Quaternion& b = swapped ? d.a22 : d.a12;
  const Quaternion& c = swapped ? d.a11 : d.a21;
  const Quaternion& e = swapped ? d.a12 : d.a22;
  if (!(norm_sq(p) > kInverseFloor * kInverseFloor))
    throw singular_system_error("matrix inverse: first column vanishes");
  const Quaternion pinv = conj(p) / norm_sq(p);
  const Quaternion schur = e - c * (pinv * b);
  if (!(norm_sq(schur) > kInverseFloor * kInverseFloor))
    throw singular_system_error("matrix inverse: Schur complement vanishes");
  const Quaternion sinv = conj(schur) / norm_sq(schur);
  const Quaternion b12 = -((pinv * b) * sinv);
  const Quaternion b21 = -(sinv * (c * pinv));
  const Quaternion b11 = pinv + (pinv * b) * (sinv * (c * pinv));
  const Quaternion b22 = sinv;
  // Pivoting inverted P*D; undo with D^-1 = (P*D)^-1 * P, a column swap.
  return swapped ? MatH2{b12, b11, b22, b21} : MatH2{b11, b12, b21, b22};
}

/// Haar-style sample of a symplectic matrix: Gaussian quaternionic
/// entries orthonormalized column by column with right-side scalar
/// coefficients. Near-dependent draws are redrawn, so the result is
/// always symplectic to ~1e-15.
inline MatH2 random_symplectic(Rng& rng) {
  std::normal_distribution<double> gauss;
  const auto draw = [&rng, &gauss] {
    return Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  };
  for (;;) {
    const Quaternion c1a = draw(), c1b = draw();
    const Quaternion c2a = draw(), c2b = draw();
    const double n1 = std::sqrt(norm_sq(c1a) + norm_sq(c1b));
    if (n1 < 1e-8) continue;
    const Quaternion u1a = c1a / n1;
    const Quaternion u1b = c1b / n1;
    // <u1, c2> = conj(u1a) c2a + conj(u1b) c2b, removed as a right
    // coefficient.
    const Quaternion proj = conj(u1a) * c2a + conj(u1b) * c2b;
    const Quaternion v2a = c2a - u1a * proj;
    const Quaternion v2b = c2b - u1b * proj;
    const double n2 = std::sqrt(norm_sq(v2a) + norm_sq(v2b));
    if (n2 < 1e-8) continue;
    return {u1a, v2a / n2, u1b, v2b / n2};
  }
}

}  // namespace sp2eig
