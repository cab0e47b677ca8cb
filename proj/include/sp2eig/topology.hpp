#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sp2eig/construct.hpp"
#include "sp2eig/matrix.hpp"
#include "sp2eig/random.hpp"

namespace sp2eig {

/// Membership of A in Omega(sigma) = { A symplectic : A - sigma I
/// invertible }, with the determinant as a margin. The membership
/// threshold defaults to the left-eigenvalue tolerance so "sigma is a
/// left eigenvalue" and "A is outside Omega(sigma)" are complementary
/// by construction.
struct OmegaMargin {
  Quaternion sigma;
  double margin = 0.0;  // adjoint_det(A - sigma I)
  bool member = false;  // margin > threshold
};

inline OmegaMargin omega_margin(const MatH2& a, const Quaternion& sigma,
                                double threshold = kEigenvalueTol) {
  if (!is_symplectic(a, 1e-8))
    throw std::invalid_argument("omega_margin: matrix is not symplectic");
  if (!is_unit(sigma))
    throw std::invalid_argument("omega_margin: sigma is not unit norm");
  const double margin = adjoint_det(a - scalar_mat(sigma));
  return {sigma, margin, margin > threshold};
}

/// Point of the contraction A_t = ((1+t)A - (1-t) sigma I) *
/// ((1+t)I - (1-t) conj(sigma) A)^-1 that deforms Omega(sigma) onto the
/// constant -sigma I as t runs from 1 to 0.
///
/// For t in (0, 1] the denominator is invertible outright: it equals
/// (1+t)(I - ((1-t)/(1+t)) conj(sigma) A) and conj(sigma) A is
/// symplectic, so the scaled subtrahend has operator norm below 1.
/// t = 0 is special-cased to the analytic endpoint -sigma I, defined
/// exactly when A is in Omega(sigma); conditions outside Omega at t = 0
/// are an error, not an extrapolation.
inline MatH2 cayley_path(const MatH2& a, const Quaternion& sigma, double t) {
  if (!is_symplectic(a, 1e-8))
    throw std::invalid_argument("cayley_path: matrix is not symplectic");
  if (!is_unit(sigma))
    throw std::invalid_argument("cayley_path: sigma is not unit norm");
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("cayley_path: t must lie in [0, 1]");
  if (t == 0.0) {
    // For unit sigma, adjoint_det(I - conj(sigma) A) equals
    // adjoint_det(A - sigma I): the denominator is singular in the
    // limit exactly when sigma is a left eigenvalue of A.
    if (adjoint_det(a - scalar_mat(sigma)) <= 1e-12)
      throw path_undefined_error(
          "cayley_path: t = 0 with A outside Omega(sigma); the endpoint "
          "is undefined there");
    return scalar_mat(-sigma);
  }
  const MatH2 numer = (1.0 + t) * a - (1.0 - t) * scalar_mat(sigma);
  const MatH2 denom =
      (1.0 + t) * identity_mat() - (1.0 - t) * (scalar_mat(conj(sigma)) * a);
  if (adjoint_det(denom) <= 1e-12)
    throw path_undefined_error("cayley_path: denominator is singular");
  return numer * inverse(denom);
}

struct UncoveredSample {
  std::size_t index = 0;  // injected matrices first, then random draws
  bool injected = false;
  MatH2 matrix;
  std::vector<double> margins;  // per sigma, in CoverReport::sigmas order
};

struct CoverReport {
  std::vector<Quaternion> sigmas;
  std::size_t samples = 0;  // total matrices evaluated, injected included
  std::uint64_t seed = 0;
  double threshold = kEigenvalueTol;
  // Smallest over samples of the largest per-sigma margin. A sample is
  // covered when some sigma gives a margin above the threshold, so this
  // is the experiment's worst case.
  double min_best_margin = 0.0;
  std::vector<UncoveredSample> uncovered;
};

/// Monte-Carlo covering experiment over the symplectic group: draw
/// random symplectic matrices and record every sample that no
/// Omega(sigma) covers. Randomness for draw k derives from (seed, k)
/// alone, so the report is identical under any evaluation order, and
/// injected matrices never shift the random stream.
inline CoverReport cover_experiment(std::vector<Quaternion> sigmas,
                                    std::size_t samples, std::uint64_t seed,
                                    double threshold = kEigenvalueTol,
                                    const std::vector<MatH2>& injected = {}) {
  if (sigmas.empty())
    throw std::invalid_argument("cover_experiment: need at least one sigma");
  if (samples < 1)
    throw std::invalid_argument("cover_experiment: need at least one sample");
  for (std::size_t i = 0; i < sigmas.size(); ++i)
    if (!is_unit(sigmas[i]))
      throw std::invalid_argument("cover_experiment: sigma[" +
                                  std::to_string(i) + "] is not unit norm");

  CoverReport report;
  report.sigmas = std::move(sigmas);
  report.samples = samples + injected.size();
  report.seed = seed;
  report.threshold = threshold;

  double min_best = std::numeric_limits<double>::infinity();
  const auto evaluate = [&report, &min_best](std::size_t index, bool was_injected,
                                             const MatH2& m) {
    std::vector<double> margins(report.sigmas.size());
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < report.sigmas.size(); ++s) {
      margins[s] = adjoint_det(m - scalar_mat(report.sigmas[s]));
      best = std::max(best, margins[s]);
    }
    min_best = std::min(min_best, best);
    if (!(best > report.threshold))
      report.uncovered.push_back({index, was_injected, m, std::move(margins)});
  };

  std::size_t index = 0;
  for (const MatH2& m : injected) evaluate(index++, true, m);
  for (std::size_t k = 0; k < samples; ++k) {
    Rng rng = substream(seed, k);
    evaluate(index++, false, random_symplectic(rng));
  }
  report.min_best_margin = min_best;
  return report;
}

/// A symplectic matrix outside all four Omega(sigma_m): the constructed
/// matrix with the four values as left eigenvalues. Its existence is
/// what keeps four such sets from ever covering the group.
inline MatH2 never_cover_witness(const std::array<Quaternion, 4>& sigmas) {
  return construct(std::span<const Quaternion>{sigmas}).matrices[0];
}

}  // namespace sp2eig
