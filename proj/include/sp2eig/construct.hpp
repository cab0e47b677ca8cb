#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "sp2eig/linalg.hpp"
#include "sp2eig/matrix.hpp"

namespace sp2eig {

/// Coordinates (t, x, y, z) of sigma: one row of the construction system.
constexpr std::array<double, 4> coords(const Quaternion& s) {
  return {s.t, s.x, s.y, s.z};
}

enum class ConstructionBranch { kRankDeficient, kFullRank };

struct SigmaResidual {
  // |Re(conj(q) sigma_m) - cos_theta|
  double re_residual = 0.0;
  // adjoint_det(matrices[k] - sigma_m I) for k = 0, 1
  std::array<double, 2> det_margins{};
};

/// Output of the prescribed-eigenvalue construction.
struct ConstructionResult {
  ConstructionBranch branch = ConstructionBranch::kRankDeficient;
  int rank = 0;
  Quaternion q;
  double cos_theta = 0.0;
  double theta = 0.0;
  // The two sin(theta)-sign realizations. matrices[1] is the negative-
  // sin realization re-canonicalized as rotation_matrix(-q, pi - theta);
  // it is the same matrix. The (-q, -cos_theta) solution generates this
  // same pair, so it is not separately emitted.
  std::array<MatH2, 2> matrices{};
  std::vector<SigmaResidual> residuals;  // keyed by input index
};

/// Build a symplectic 2x2 matrix having the given unit quaternions as
/// left eigenvalues.
///
/// The target has to be of the form L_q . R_theta, whose eigenvalue
/// sphere is { sigma : |sigma| = 1, Re(conj(q) sigma) = cos(theta) }.
/// Stacking the coordinate rows of the inputs into M turns that into
/// the linear system M q = cos(theta) * u with u the all-ones vector:
///   - rank(M) < 4: take cos(theta) = 0; the homogeneous system has a
///     nontrivial solution space containing a unit q, and theta = pi/2
///     realizes it.
///   - rank(M) = 4: the unique direction is v = M^-1 u. Because M has
///     unit rows, ||M w|| < sqrt(4) ||w|| for any nonzero w, which
///     forces ||v|| > ||u||/2 = 1, so cos(theta) = 1/||v|| lands in
///     (0, 1) and q = cos(theta) * v is exactly unit.
///
/// Up to four values are accepted; fewer than four simply leave the
/// system underdetermined and always take the rank-deficient branch
/// (an extension beyond the four-value statement, same machinery).
inline ConstructionResult construct(std::span<const Quaternion> sigmas) {
  if (sigmas.empty() || sigmas.size() > 4)
    throw std::invalid_argument("construct: expected 1 to 4 unit quaternions, got " +
                                std::to_string(sigmas.size()));
  for (std::size_t m = 0; m < sigmas.size(); ++m)
    if (!is_unit(sigmas[m]))
      throw std::invalid_argument("construct: sigma[" + std::to_string(m) +
                                  "] is not unit norm (|sigma| = " +
                                  std::to_string(norm(sigmas[m])) + ")");

  RealMatrix mat(sigmas.size(), 4);
  for (std::size_t m = 0; m < sigmas.size(); ++m) {
    const std::array<double, 4> row = coords(sigmas[m]);
    for (std::size_t c = 0; c < 4; ++c) mat(m, c) = row[c];
  }

  const RankKernel rk = rank_and_kernel(mat);

  ConstructionResult res;
  res.rank = rk.rank;
  if (rk.rank < 4) {
    res.branch = ConstructionBranch::kRankDeficient;
    res.cos_theta = 0.0;
    res.theta = std::numbers::pi / 2.0;
    const std::vector<double>& k = rk.kernel.front();
    res.q = Quaternion{k[0], k[1], k[2], k[3]};
  } else {
    res.branch = ConstructionBranch::kFullRank;
    const std::vector<double> v = solve_linear(mat, std::vector<double>(4, 1.0));
    const double vn = euclidean_norm(v);
    if (!(vn > 1.0 + 1e-12))
      throw numeric_fault(
          "construct: |M^-1 u| = " + std::to_string(vn) +
          " <= 1, contradicting the unit-row bound; the inputs defeated "
          "the rank test");
    res.cos_theta = 1.0 / vn;
    res.theta = std::acos(res.cos_theta);
    res.q = Quaternion{v[0], v[1], v[2], v[3]} * res.cos_theta;
  }
  res.matrices[0] = rotation_matrix({res.q, res.theta});
  res.matrices[1] = rotation_matrix({-res.q, std::numbers::pi - res.theta});
  res.residuals.reserve(sigmas.size());
  for (const Quaternion& s : sigmas) {
    SigmaResidual r;
    r.re_residual = std::abs(re_dot(res.q, s) - res.cos_theta);
    r.det_margins = {adjoint_det(res.matrices[0] - scalar_mat(s)),
                     adjoint_det(res.matrices[1] - scalar_mat(s))};
    res.residuals.push_back(r);
  }
  return res;
}

struct BoundCheck {
  double lhs = 0.0;    // ||M w||
  double rhs = 0.0;    // sqrt(rows) * ||w||
  bool strict = false; // lhs < rhs
};

/// The row-norm bound: a square matrix of full rank whose rows all have
/// Euclidean norm 1 satisfies ||M w|| < sqrt(rows) * ||w|| strictly for
/// every nonzero w. Preconditions are enforced, not assumed; when they
/// fail the bound is not asserted and the call errors instead.
inline BoundCheck bound_check(const RealMatrix& m, const std::vector<double>& w) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("bound_check: matrix must be square");
  if (w.size() != m.cols())
    throw std::invalid_argument("bound_check: w has length " +
                                std::to_string(w.size()) + ", expected " +
                                std::to_string(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (std::abs(m.row_norm(r) - 1.0) > kDefaultTol)
      throw std::invalid_argument("bound_check: row " + std::to_string(r) +
                                  " is not unit norm");
  if (rank_and_kernel(m).rank != static_cast<int>(m.rows()))
    throw std::invalid_argument("bound_check: matrix is rank deficient");
  const double wn = euclidean_norm(w);
  if (wn == 0.0) throw std::invalid_argument("bound_check: w must be nonzero");
  BoundCheck out;
  out.lhs = euclidean_norm(m.apply(w));
  out.rhs = std::sqrt(static_cast<double>(m.rows())) * wn;
  out.strict = out.lhs < out.rhs;
  return out;
}

}  // namespace sp2eig
