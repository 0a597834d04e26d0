#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "squeezelab/oracle.hpp"
#include "squeezelab/parton.hpp"
#include "squeezelab/squeezed.hpp"
#include "test_util.hpp"

using namespace squeezelab;
using parton::FourMomentum;

TEST_CASE("momentum split: total and relative four-momenta") {
  const FourMomentum pa{2.0, 1.0}, pb{1.0, 0.0};
  const auto [total, relative] = parton::momentum_split(pa, pb);
  CHECK(total.e == doctest::Approx(3.0));
  CHECK(total.pz == doctest::Approx(1.0));
  CHECK(relative.e == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(relative.pz == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const auto [ts, rs] = parton::momentum_split(pa, pa);
  CHECK(rs.e == 0.0);
  CHECK(rs.pz == 0.0);
  CHECK(ts.e == doctest::Approx(4.0));

  // linearity
  test_util::Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const FourMomentum qa{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const FourMomentum qb{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const double lambda = rng.uniform(-3, 3);
    const auto [t1, r1] = parton::momentum_split(qa, qb);
    const auto [t2, r2] = parton::momentum_split({lambda * qa.e, lambda * qa.pz},
                                                 {lambda * qb.e, lambda * qb.pz});
    CHECK(t2.e == doctest::Approx(lambda * t1.e).epsilon(1e-13).scale(1.0));
    CHECK(r2.pz == doctest::Approx(lambda * r1.pz).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("momentum light-cone components and the boost invariant") {
  auto [qu, qv] = parton::momentum_lightcone({1.0, 1.0});
  CHECK(qu == 0.0);
  CHECK(qv == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  std::tie(qu, qv) = parton::momentum_lightcone({1.0, -1.0});
  CHECK(qu == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(qv == 0.0);

  test_util::Rng rng(72);
  for (int i = 0; i < 200; ++i) {
    const FourMomentum q{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const double eta = rng.uniform(-2, 2);
    const FourMomentum boosted{q.e * std::cosh(eta) + q.pz * std::sinh(eta),
                               q.pz * std::cosh(eta) + q.e * std::sinh(eta)};
    const auto [u1, v1] = parton::momentum_lightcone(q);
    const auto [u2, v2] = parton::momentum_lightcone(boosted);
    CHECK(u1 * v1 == doctest::Approx((q.e * q.e - q.pz * q.pz) / 2.0)
                         .epsilon(1e-13)
                         .scale(1.0));
    CHECK(u2 * v2 == doctest::Approx(u1 * v1).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("rapidity from lab energy") {
  CHECK(parton::rapidity_from_energy(0.938, 0.938) == 0.0);
  CHECK(parton::rapidity_from_energy(2.0 * std::cosh(1.0), 2.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // 900 GeV proton: frozen against ln(gamma + sqrt(gamma^2 - 1))
  CHECK(parton::rapidity_from_energy(900.0, 0.938) ==
        doctest::Approx(7.5595470023032677).epsilon(1e-14));
  CHECK_THROWS_AS(parton::rapidity_from_energy(0.5, 0.938), std::invalid_argument);
  CHECK_THROWS_AS(parton::rapidity_from_energy(1.0, 0.0), std::invalid_argument);

  // inverse of eta -> m cosh(eta) across the full rapidity range
  for (double eta = 0.0; eta <= 15.0; eta += 0.5) {
    const double mass = 0.938;
    CHECK(parton::rapidity_from_energy(mass * std::cosh(eta), mass) ==
          doctest::Approx(eta).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("decoherence ratio and its two factors") {
  CHECK(parton::decoherence_ratio(0.0) == 1.0);
  CHECK_THROWS_AS(parton::decoherence_ratio(-0.1), std::invalid_argument);

  // contraction over dilation, exactly
  for (double eta : {0.0, 0.5, 1.0, 4.0, 7.5}) {
    const auto factors = parton::decoherence_factors(eta);
    CHECK(factors.ratio ==
          doctest::Approx(factors.crossing_contraction / factors.period_dilation)
              .epsilon(1e-15));
    CHECK(parton::decoherence_ratio(eta) ==
          doctest::Approx(factors.ratio).epsilon(1e-15));
  }

  // strictly decreasing
  double last = 2.0;
  for (double eta : {0.0, 0.3, 1.0, 2.5, 6.0}) {
    const double r = parton::decoherence_ratio(eta);
    CHECK(r < last);
    last = r;
  }

  // 900 GeV proton: ratio ~ 2.7e-7, the order of 10^-6
  const auto kin = parton::parton_kinematics(900.0);
  CHECK(kin.ratio == doctest::Approx(2.7155693760973744e-7).epsilon(1e-12));
  CHECK(kin.ratio > 1e-7);
  CHECK(kin.ratio < 1e-5);
}

TEST_CASE("momentum width equals the spatial width and grows with eta") {
  CHECK(parton::momentum_width(0.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(parton::momentum_width(2.0) ==
        doctest::Approx(3.695147685547662).epsilon(1e-14));

  double last_w = 0.0, last_x = 0.0;
  for (double eta = 0.0; eta <= 3.0; eta += 0.25) {
    const double w = parton::momentum_width(eta);
    const double x = std::sqrt(squeezed::marginal_variance(std::min(eta, 20.0)));
    CHECK(w == doctest::Approx(x).epsilon(1e-15));  // identical kernels
    CHECK(w > last_w);
    CHECK(x > last_x);
    last_w = w;
    last_x = x;
  }

  // quadrature second moment of q_z under the momentum wave function
  const double eta = 2.0;
  const auto grid = oracle::plane_grid_for(-eta, 128);
  const double moment = oracle::plane_integral(grid, [&](double qz, double q0) {
    const double v = squeezed::eval_momentum(eta, qz, q0);
    return qz * qz * v * v;
  });
  CHECK(std::sqrt(moment) == doctest::Approx(parton::momentum_width(eta)).epsilon(1e-9));
}
