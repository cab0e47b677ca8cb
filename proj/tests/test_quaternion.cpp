#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "sp2eig/quaternion.hpp"
#include "sp2eig/random.hpp"

using namespace sp2eig;

namespace {
double quat_distance(const Quaternion& a, const Quaternion& b) {
  return norm(a - b);
}
}  // namespace

TEST_CASE("hamilton product basis relations") {
  CHECK(kImI * kImJ == kImK);
  CHECK(kImJ * kImK == kImI);
  CHECK(kImK * kImI == kImJ);
  CHECK(kImI * kImI == -kOne);
  CHECK(kImJ * kImJ == -kOne);
  CHECK(kImK * kImK == -kOne);
}

TEST_CASE("(1+i)(1+j) expands to 1+i+j+k") {
  const Quaternion p{1.0, 1.0, 0.0, 0.0};
  const Quaternion q{1.0, 0.0, 1.0, 0.0};
  CHECK(p * q == Quaternion{1.0, 1.0, 1.0, 1.0});
}

TEST_CASE("q conj(q) is the squared norm") {
  const Quaternion q = Quaternion{1.0, 2.0, 3.0, 4.0} / std::sqrt(30.0);
  const Quaternion r = q * conj(q);
  CHECK(std::abs(r.t - 1.0) < 1e-15);
  CHECK(imag_norm(r) < 1e-15);
}

TEST_CASE("norm is multiplicative") {
  Rng rng{11};
  std::normal_distribution<double> gauss;
  for (int it = 0; it < 1000; ++it) {
    const Quaternion p{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const double lhs = norm(p * q);
    const double rhs = norm(p) * norm(q);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
}

TEST_CASE("conjugation is an anti-automorphism") {
  Rng rng{12};
  for (int it = 0; it < 1000; ++it) {
    const Quaternion p = random_unit(rng);
    const Quaternion q = random_unit(rng);
    CHECK(quat_distance(conj(p * q), conj(q) * conj(p)) <= 1e-15);
  }
}

TEST_CASE("re_dot agrees with Re(conj(p) q)") {
  Rng rng{13};
  for (int it = 0; it < 1000; ++it) {
    const Quaternion p = random_unit(rng);
    const Quaternion q = random_unit(rng);
    CHECK(std::abs(re_dot(p, q) - re(conj(p) * q)) <= 1e-13);
  }
}

TEST_CASE("re_dot known values") {
  const Quaternion half_u = Quaternion{1.0, 1.0, 1.0, 1.0} / 2.0;
  const Quaternion sigma5 = Quaternion{0.0, 1.0, 1.0, 0.0} / std::sqrt(2.0);
  CHECK(std::abs(re_dot(half_u, sigma5) - 1.0 / std::sqrt(2.0)) <= 1e-15);
  CHECK(re_dot(kOne, kImI) == 0.0);

  Rng rng{14};
  for (int it = 0; it < 100; ++it) {
    const Quaternion q = random_unit(rng);
    CHECK(std::abs(re_dot(q, q) - 1.0) <= 1e-12);
  }
}

TEST_CASE("similar compares conjugation orbits") {
  CHECK(similar(kImI, kImJ));
  CHECK_FALSE(similar(kOne, -kOne));

  const double theta = std::numbers::pi / 3.0;
  const Quaternion omega = Quaternion{0.0, 0.0, 1.0, 1.0} / std::sqrt(2.0);
  const Quaternion p =
      Quaternion{std::cos(theta), 0.0, 0.0, 0.0} + std::sin(theta) * omega;
  const Quaternion q{std::cos(theta), std::sin(theta), 0.0, 0.0};
  CHECK(similar(p, q));

  CHECK_THROWS_AS(similar(kImI, kImJ, -1.0), std::invalid_argument);
}

TEST_CASE("similar is invariant under inner conjugation") {
  Rng rng{15};
  for (int it = 0; it < 500; ++it) {
    const Quaternion q = random_unit(rng);
    const Quaternion w = random_unit(rng);
    CHECK(similar(q, w * q * inverse(w), 1e-12));
  }
}

TEST_CASE("quaternion inverse") {
  Rng rng{16};
  for (int it = 0; it < 100; ++it) {
    const Quaternion q = 3.7 * random_unit(rng);
    CHECK(quat_distance(q * inverse(q), kOne) <= 1e-14);
    CHECK(quat_distance(inverse(q) * q, kOne) <= 1e-14);
  }
  CHECK_THROWS_AS(inverse(Quaternion{1e-13, 0.0, 0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(normalized(Quaternion{}), std::invalid_argument);
}

TEST_CASE("random_unit draws unit quaternions deterministically") {
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    Rng rng{seed};
    CHECK(std::abs(norm(random_unit(rng)) - 1.0) <= 1e-12);
  }
  Rng a{42}, b{42};
  CHECK(random_unit(a) == random_unit(b));
  CHECK(random_unit(a) == random_unit(b));
}

TEST_CASE("random_unit scalar part has zero mean") {
  // Uniform measure on the sphere is symmetric in t; a Monte-Carlo mean
  // over N draws stays within 3/sqrt(N) with overwhelming probability.
  const int n = 100000;
  Rng rng{17};
  double sum = 0.0;
  for (int it = 0; it < n; ++it) sum += random_unit(rng).t;
  const double mean = sum / n;
  CHECK(std::abs(mean) <= 3.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(mean) <= 0.02);
}

TEST_CASE("random_unit_imaginary draws unit imaginary quaternions") {
  Rng rng{18};
  for (int it = 0; it < 100; ++it) {
    const Quaternion w = random_unit_imaginary(rng);
    CHECK(w.t == 0.0);
    CHECK(std::abs(norm(w) - 1.0) <= 1e-12);
  }
}
