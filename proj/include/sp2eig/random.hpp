#pragma once

#include <cstdint>
#include <random>

#include "sp2eig/quaternion.hpp"

namespace sp2eig {

/// All random draws use an explicit caller-owned engine; there is no
/// hidden global state anywhere in the library.
using Rng = std::mt19937_64;

namespace detail {

// splitmix64 finalizer; decorrelates nearby seed values.
constexpr std::uint64_t mix64(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

}  // namespace detail

/// Independent engine for sample `index` of the stream named by `seed`.
/// The draw for a given (seed, index) never depends on evaluation order,
/// so batch experiments are reproducible under any schedule.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
  return Rng{detail::mix64(detail::mix64(seed) ^ index)};
}

/// Uniform draw from the unit sphere of quaternions: four standard
/// normals, normalized. A degenerate all-zero draw is retried and never
/// returned.
inline Quaternion random_unit(Rng& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const double n = norm(q);
    if (n > 1e-8) return q / n;
  }
}

/// Uniform draw from the sphere of unit imaginary quaternions.
inline Quaternion random_unit_imaginary(Rng& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const Quaternion q{0.0, gauss(rng), gauss(rng), gauss(rng)};
    const double n = norm(q);
    if (n > 1e-8) return q / n;
  }
}

}  // namespace sp2eig
