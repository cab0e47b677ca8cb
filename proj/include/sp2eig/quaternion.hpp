#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "sp2eig/errors.hpp"

namespace sp2eig {

/// Absolute comparison tolerance for unit-scale quantities. Every
/// predicate that compares norms or real parts takes an explicit
/// tolerance defaulting to this.
inline constexpr double kDefaultTol = 1e-9;

/// Norm floor below which a quaternion is treated as non-invertible.
inline constexpr double kInverseFloor = 1e-12;

/// Element t + x*i + y*j + z*k of the real quaternion algebra.
/// Coordinate storage order is fixed as (t, x, y, z); the JSON encoding
/// is the array [t, x, y, z] in the same order.
struct Quaternion {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kImI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kImJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kImK{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.t + q.t, p.x + q.x, p.y + q.y, p.z + q.z};
}

constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.t - q.t, p.x - q.x, p.y - q.y, p.z - q.z};
}

constexpr Quaternion operator-(const Quaternion& q) {
  return {-q.t, -q.x, -q.y, -q.z};
}

constexpr Quaternion operator*(const Quaternion& q, double s) {
  return {q.t * s, q.x * s, q.y * s, q.z * s};
}

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

constexpr Quaternion operator/(const Quaternion& q, double s) {
  return {q.t / s, q.x / s, q.y / s, q.z / s};
}

/// Hamilton product. Non-commutative: ij = k, jk = i, ki = j.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.t * q.t - p.x * q.x - p.y * q.y - p.z * q.z,
          p.t * q.x + p.x * q.t + p.y * q.z - p.z * q.y,
          p.t * q.y - p.x * q.z + p.y * q.t + p.z * q.x,
          p.t * q.z + p.x * q.y - p.y * q.x + p.z * q.t};
}

/// Conjugation: negates exactly the i, j, k coefficients.
constexpr Quaternion conj(const Quaternion& q) { return {q.t, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
  return q.t * q.t + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr double re(const Quaternion& q) { return q.t; }

/// Norm of the imaginary part alone.
inline double imag_norm(const Quaternion& q) {
  return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

/// Re(conj(p) * q). Equals the Euclidean dot product of the coordinate
/// vectors, which is how it is computed.
constexpr double re_dot(const Quaternion& p, const Quaternion& q) {
  return p.t * q.t + p.x * q.x + p.y * q.y + p.z * q.z;
}

inline bool is_unit(const Quaternion& q, double tol = kDefaultTol) {
  return std::abs(norm(q) - 1.0) <= tol;
}

/// True iff p and q lie in the same conjugation orbit: two quaternions
/// are conjugate exactly when they share norm and real part.
inline bool similar(const Quaternion& p, const Quaternion& q,
                    double tol = kDefaultTol) {
  if (tol < 0.0) throw std::invalid_argument("similar: tol must be >= 0");
  return std::abs(norm(p) - norm(q)) <= tol && std::abs(p.t - q.t) <= tol;
}

/// Multiplicative inverse conj(q)/|q|^2. Defined only for norm(q) above
/// the inverse floor; below that the input is treated as zero.
inline Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (!(n2 > kInverseFloor * kInverseFloor))
    throw std::invalid_argument(
        "quaternion inverse: norm " + std::to_string(std::sqrt(n2)) +
        " is below the invertibility floor 1e-12");
  return conj(q) / n2;
}

inline Quaternion normalized(const Quaternion& q) {
  const double n = norm(q);
  if (!(n > kInverseFloor))
    throw std::invalid_argument("normalized: quaternion norm is below 1e-12");
  return q / n;
}

}  // namespace sp2eig
