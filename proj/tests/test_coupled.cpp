#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "squeezelab/coupled.hpp"
#include "test_util.hpp"

using namespace squeezelab;

TEST_CASE("normal coordinates: rotation and involution") {
  auto [z1, z2] = coupled::normal_coordinates(1.0, 0.0);
  CHECK(z1 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(z2 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  auto [s1, s2] = coupled::normal_coordinates(0.8, 0.8);
  CHECK(s1 == doctest::Approx(0.8 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s2 == 0.0);

  auto [d1, d2] = coupled::normal_coordinates(0.3, -0.7);
  CHECK(d1 == doctest::Approx(-0.28284271247461901).epsilon(1e-14));
  CHECK(d2 == doctest::Approx(0.70710678118654752).epsilon(1e-14));

  // applying the same map twice returns the original pair
  test_util::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const double x1 = rng.uniform(-10, 10);
    const double x2 = rng.uniform(-10, 10);
    auto [w1, w2] = coupled::normal_coordinates(x1, x2);
    auto [r1, r2] = coupled::normal_coordinates(w1, w2);
    CHECK(r1 == doctest::Approx(x1).epsilon(1e-14));
    CHECK(r2 == doctest::Approx(x2).epsilon(1e-14));
  }
}

TEST_CASE("diagonalize: decoupled oscillators") {
  const auto modes = coupled::diagonalize({1.0, 1.0, 0.0});
  CHECK(modes.spring_k == doctest::Approx(1.0));
  CHECK(modes.eta == 0.0);
  CHECK(modes.omega == doctest::Approx(1.0));
  CHECK(modes.omega_fast == doctest::Approx(1.0));
  CHECK(modes.omega_slow == doctest::Approx(1.0));
}

TEST_CASE("diagonalize: coupled case from the 2x2 potential matrix") {
  // potential [[A, C], [C, A]] with A = 1.25, C = 0.75 has eigenvalues
  // A + C = 2 and A - C = 0.5
  const auto modes = coupled::diagonalize({1.0, 1.25, 0.75});
  CHECK(modes.spring_k == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::exp(2.0 * modes.eta) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(modes.eta == doctest::Approx(-0.34657359027997265).epsilon(1e-14));
  CHECK(modes.omega_fast == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(modes.omega_slow == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

  // quadrupling the mass halves every frequency, K and eta unchanged
  const auto heavy = coupled::diagonalize({4.0, 1.25, 0.75});
  CHECK(heavy.spring_k == doctest::Approx(modes.spring_k));
  CHECK(heavy.eta == doctest::Approx(modes.eta));
  CHECK(heavy.omega_fast == doctest::Approx(0.5 * modes.omega_fast).epsilon(1e-14));
  CHECK(heavy.omega_slow == doctest::Approx(0.5 * modes.omega_slow).epsilon(1e-14));
}

TEST_CASE("diagonalize: rejects non-confining potentials") {
  CHECK_THROWS_AS(coupled::OscillatorParams(1.0, 1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(coupled::OscillatorParams(1.0, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(coupled::OscillatorParams(0.0, 2.0, 0.5), std::invalid_argument);
  CHECK_THROWS_WITH(coupled::OscillatorParams(1.0, 1.0, 1.5),
                    doctest::Contains("A must exceed |C|"));
}

TEST_CASE("hamiltonian energy: point values") {
  CHECK(coupled::hamiltonian_energy({1, 1, 0}, 1, 0, 0, 0) == doctest::Approx(0.5));
  CHECK(coupled::hamiltonian_energy({1, 1.25, 0.75}, 1, 1, 0, 0) ==
        doctest::Approx(2.0));
  CHECK(coupled::hamiltonian_energy({3, 2, 0.5}, 0, 0, 0, 0) == 0.0);
}

TEST_CASE("property: energy equals the normal-mode quadratic form") {
  test_util::Rng rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    const double mass = rng.uniform(0.1, 5.0);
    const double a = rng.uniform(0.2, 4.0);
    const double c = rng.uniform(-0.99, 0.99) * a;
    const coupled::OscillatorParams params(mass, a, c);
    const auto modes = coupled::diagonalize(params);

    const double x1 = rng.uniform(-3, 3), x2 = rng.uniform(-3, 3);
    const double p1 = rng.uniform(-3, 3), p2 = rng.uniform(-3, 3);
    auto [z1, z2] = coupled::normal_coordinates(x1, x2);
    auto [q1, q2] = coupled::normal_coordinates(p1, p2);

    const double direct = coupled::hamiltonian_energy(params, x1, x2, p1, p2);
    const double normal_form =
        (q1 * q1 + q2 * q2) / (2.0 * mass) +
        0.5 * modes.spring_k *
            (std::exp(-2.0 * modes.eta) * z1 * z1 +
             std::exp(2.0 * modes.eta) * z2 * z2);
    CHECK(direct == doctest::Approx(normal_form).epsilon(1e-12));
  }
}

TEST_CASE("property: (K, eta) satisfy the defining pair and the sign rule") {
  test_util::Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(0.2, 4.0);
    const double c = rng.uniform(-0.99, 0.99) * a;
    const auto modes = coupled::diagonalize({1.0, a, c});
    CHECK(modes.spring_k * std::exp(-2.0 * modes.eta) ==
          doctest::Approx(a + c).epsilon(1e-12));
    CHECK(modes.spring_k * std::exp(2.0 * modes.eta) ==
          doctest::Approx(a - c).epsilon(1e-12));
    CHECK(modes.omega_fast * modes.omega_slow ==
          doctest::Approx(modes.omega * modes.omega).epsilon(1e-12));
    CHECK(modes.omega_fast >= modes.omega_slow);
    if (c > 0.0) CHECK(modes.eta < 0.0);
    if (c < 0.0) CHECK(modes.eta > 0.0);
  }
  CHECK(coupled::diagonalize({1.0, 2.0, 0.0}).eta == 0.0);
}
