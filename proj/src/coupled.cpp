#include "squeezelab/coupled.hpp"

#include <cmath>
#include <stdexcept>

namespace squeezelab::coupled {

OscillatorParams::OscillatorParams(double mass_, double a_, double c_)
    : mass(mass_), a(a_), c(c_) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("OscillatorParams: mass must be positive");
  }
  if (!std::isfinite(a) || !std::isfinite(c) || !(a > std::abs(c))) {
    throw std::invalid_argument(
        "OscillatorParams: A must exceed |C| (potential not positive definite)");
  }
}

std::pair<double, double> normal_coordinates(double x1, double x2) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {(x1 + x2) * inv_sqrt2, (x1 - x2) * inv_sqrt2};
}

NormalModeData diagonalize(const OscillatorParams& params) {
  NormalModeData out;
  out.spring_k = std::sqrt((params.a - params.c) * (params.a + params.c));
  out.eta = 0.25 * std::log((params.a - params.c) / (params.a + params.c));
  out.omega = std::sqrt(out.spring_k / params.mass);
  const double omega_plus = std::sqrt((params.a + params.c) / params.mass);
  const double omega_minus = std::sqrt((params.a - params.c) / params.mass);
  out.omega_fast = std::max(omega_plus, omega_minus);
  out.omega_slow = std::min(omega_plus, omega_minus);
  return out;
}

double hamiltonian_energy(const OscillatorParams& params, double x1, double x2,
                          double p1, double p2) {
  return 0.5 * ((p1 * p1 + p2 * p2) / params.mass + params.a * x1 * x1 +
                params.a * x2 * x2 + 2.0 * params.c * x1 * x2);
}

}  // namespace squeezelab::coupled
