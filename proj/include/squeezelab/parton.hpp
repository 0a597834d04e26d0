#pragma once

#include <utility>

namespace squeezelab::parton {

inline constexpr double kProtonMassGeV = 0.938;

/// Energy and longitudinal momentum in GeV; transverse components are
/// fixed at zero throughout. e^2 - pz^2 may have either sign (internal
/// relative momenta are allowed off shell).
struct FourMomentum {
  double e;
  double pz;
};

/// Total and relative four-momenta of a two-constituent system:
///   P = pa + pb,  q = sqrt(2) (pa - pb).
std::pair<FourMomentum, FourMomentum> momentum_split(FourMomentum pa,
                                                     FourMomentum pb);

/// Light-cone components of a relative four-momentum:
///   q_u = (q_0 - q_z)/sqrt(2),  q_v = (q_0 + q_z)/sqrt(2).
/// q_u q_v = (q_0^2 - q_z^2)/2 is boost-invariant.
std::pair<double, double> momentum_lightcone(FourMomentum q);

/// Boost rapidity that carries a hadron of the given mass from rest to the
/// given lab energy: eta = arccosh(E/m), evaluated as ln(gamma +
/// sqrt(gamma^2 - 1)). Requires E >= m > 0.
double rapidity_from_energy(double lab_energy_gev, double hadron_mass_gev);

/// Ratio of the external-signal crossing time to the internal oscillation
/// period, e^(-2 eta): the period dilates by e^(+eta) while the crossing
/// time contracts by e^(-eta). Requires eta >= 0.
double decoherence_ratio(double eta);

struct DecoherenceFactors {
  double period_dilation;       // e^(+eta)
  double crossing_contraction;  // e^(-eta)
  double ratio;                 // e^(-2 eta)
};

DecoherenceFactors decoherence_factors(double eta);

/// Standard deviation of the longitudinal momentum under |phi_eta|^2:
/// sqrt(cosh(2 eta)/2), identical to the spatial marginal width because
/// the two wave functions share one Gaussian kernel.
double momentum_width(double eta);

/// Kinematics of a hadron observed at lab energy E: the derived rapidity
/// and decoherence ratio.
struct PartonKinematics {
  double hadron_mass;
  double lab_energy;
  double eta;
  double ratio;
};

PartonKinematics parton_kinematics(double lab_energy_gev,
                                   double hadron_mass_gev = kProtonMassGeV);

}  // namespace squeezelab::parton
