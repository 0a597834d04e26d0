#pragma once

#include <utility>

namespace squeezelab::coupled {

/// Two identical-mass oscillators with potential
///   V = (1/2)(A x1^2 + A x2^2 + 2 C x1 x2).
/// Construction enforces m > 0 and A > |C| (the potential must be
/// positive definite, otherwise there is no bound ground state).
struct OscillatorParams {
  OscillatorParams(double mass, double a, double c);

  double mass;
  double a;  // diagonal potential coefficient
  double c;  // coupling coefficient
};

/// Diagonalized form of the coupled Hamiltonian. The defining pair is
///   spring_k * e^(-2*eta) = A + C,   spring_k * e^(+2*eta) = A - C,
/// so spring_k = sqrt(A^2 - C^2) and eta = (1/4) ln((A-C)/(A+C)).
/// The normal-mode frequencies are omega * e^(-+eta), i.e.
/// sqrt((A+C)/m) and sqrt((A-C)/m); their geometric mean is
/// omega = sqrt(spring_k/m).
struct NormalModeData {
  double spring_k;
  double eta;
  double omega;
  double omega_fast;  // larger normal-mode frequency
  double omega_slow;  // smaller normal-mode frequency
};

/// Rotation to normal coordinates:
///   z1 = (x1 + x2)/sqrt(2),  z2 = (x1 - x2)/sqrt(2).
/// Applying the same map to (z1, z2) recovers (x1, x2).
std::pair<double, double> normal_coordinates(double x1, double x2);

NormalModeData diagonalize(const OscillatorParams& params);

/// H = (1/2) { p1^2/m + p2^2/m + A x1^2 + A x2^2 + 2 C x1 x2 }.
double hamiltonian_energy(const OscillatorParams& params, double x1, double x2,
                          double p1, double p2);

}  // namespace squeezelab::coupled
