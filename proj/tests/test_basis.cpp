#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "squeezelab/basis.hpp"

using namespace squeezelab;

TEST_CASE("hermite polynomials: low orders against closed forms") {
  CHECK(basis::hermite_poly(0, 3.7) == 1.0);
  CHECK(basis::hermite_poly(1, 0.5) == 1.0);
  // H_2(x) = 4x^2 - 2
  CHECK(basis::hermite_poly(2, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(basis::hermite_poly(3, 0.5) ==
        doctest::Approx(8 * 0.125 - 12 * 0.5).epsilon(1e-14));
}

TEST_CASE("hermite polynomials: overflow raises instead of returning inf") {
  CHECK_THROWS_AS(basis::hermite_poly(400, 1.0), std::range_error);
  CHECK_THROWS_AS(basis::hermite_poly(-1, 0.0), std::invalid_argument);
}

TEST_CASE("phi: normalized eigenfunction point values") {
  // phi_0(0) = pi^(-1/4)
  CHECK(basis::phi(0, 0.0) == doctest::Approx(0.75112554446494248).epsilon(1e-15));
  CHECK(basis::phi(1, 0.0) == 0.0);
  // phi_2(1) = (4 - 2) e^(-1/2) / sqrt(8 sqrt(pi)), evaluated directly
  CHECK(basis::phi(2, 1.0) == doctest::Approx(0.32214418255673759).epsilon(1e-14));
}

TEST_CASE("phi: stable far beyond the factorial-overflow regime") {
  const double v = basis::phi(400, 3.0);
  CHECK(std::isfinite(v));
  CHECK(std::abs(v) < 1.0);
  CHECK(std::isfinite(basis::phi(1000, 0.5)));
  CHECK_THROWS_AS(basis::phi(1001, 0.0), std::out_of_range);

  // phi_all agrees with single-mode evaluation
  const auto all = basis::phi_all(50, 1.3);
  for (int k : {0, 7, 31, 50}) {
    CHECK(all[k] == doctest::Approx(basis::phi(k, 1.3)).epsilon(1e-14));
  }
}

TEST_CASE("gauss_hermite: classical two-point rule") {
  const auto rule = basis::gauss_hermite(2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double half_sqrt_pi = 0.88622692545275801;
  CHECK(rule.nodes[0] == doctest::Approx(-inv_sqrt2).epsilon(1e-15));
  CHECK(rule.nodes[1] == doctest::Approx(inv_sqrt2).epsilon(1e-15));
  CHECK(rule.weights[0] == doctest::Approx(half_sqrt_pi).epsilon(1e-14));
  CHECK(rule.weights[1] == doctest::Approx(half_sqrt_pi).epsilon(1e-14));
}

TEST_CASE("gauss_hermite: domain of validity") {
  CHECK_THROWS_AS(basis::gauss_hermite(1), std::out_of_range);
  CHECK_THROWS_AS(basis::gauss_hermite(513), std::out_of_range);
}

TEST_CASE("gauss_hermite: nodes ascend, weights positive, up to order 512") {
  for (int order : {32, 129, 512}) {
    const auto rule = basis::gauss_hermite(order);
    REQUIRE(rule.nodes.size() == order);
    for (int i = 1; i < order; ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    for (int i = 0; i < order; ++i) {
      CHECK(rule.weights[i] > 0.0);
      CHECK(rule.total_weights[i] > 0.0);
    }
  }
}

TEST_CASE("gauss_hermite: orthonormality of the phi basis") {
  const auto rule32 = basis::gauss_hermite(32);
  const auto inner = [&](const basis::QuadratureRule& rule, int j, int k) {
    return basis::integrate(
        rule, [&](double x) { return basis::phi(j, x) * basis::phi(k, x); });
  };
  CHECK(inner(rule32, 3, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner(rule32, 2, 5)) < 1e-12);

  // norm 1 for k <= 50 and a sweep of off-diagonal pairs
  const auto rule64 = basis::gauss_hermite(64);
  for (int k = 0; k <= 50; ++k) {
    CHECK(inner(rule64, k, k) == doctest::Approx(1.0).epsilon(1e-10));
  }
  for (int j = 0; j <= 50; j += 7) {
    for (int k = j + 1; k <= 50; k += 5) {
      CHECK(std::abs(inner(rule64, j, k)) < 1e-10);
    }
  }
}

TEST_CASE("phi satisfies the oscillator eigenvalue relation (finite differences)") {
  const double h = 1e-3;
  for (int k : {0, 1, 2, 3}) {
    for (double x : {-2.1, -0.7, 0.0, 0.4, 1.9}) {
      const double second =
          (basis::phi(k, x + h) - 2.0 * basis::phi(k, x) + basis::phi(k, x - h)) /
          (h * h);
      const double lhs = 0.5 * (x * x * basis::phi(k, x) - second);
      const double rhs = (k + 0.5) * basis::phi(k, x);
      CHECK(std::abs(lhs - rhs) < 1e-6);
    }
  }
}
