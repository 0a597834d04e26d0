#include "squeezelab/parton.hpp"

#include <cmath>
#include <stdexcept>

namespace squeezelab::parton {

std::pair<FourMomentum, FourMomentum> momentum_split(FourMomentum pa,
                                                     FourMomentum pb) {
  const double sqrt2 = std::sqrt(2.0);
  FourMomentum total{pa.e + pb.e, pa.pz + pb.pz};
  FourMomentum relative{sqrt2 * (pa.e - pb.e), sqrt2 * (pa.pz - pb.pz)};
  return {total, relative};
}

std::pair<double, double> momentum_lightcone(FourMomentum q) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {(q.e - q.pz) * inv_sqrt2, (q.e + q.pz) * inv_sqrt2};
}

double rapidity_from_energy(double lab_energy_gev, double hadron_mass_gev) {
  if (!(hadron_mass_gev > 0.0)) {
    throw std::invalid_argument("rapidity_from_energy: mass must be positive");
  }
  if (lab_energy_gev < hadron_mass_gev) {
    throw std::invalid_argument(
        "rapidity_from_energy: lab energy below rest mass");
  }
  const double gamma = lab_energy_gev / hadron_mass_gev;
  return std::log(gamma + std::sqrt((gamma - 1.0) * (gamma + 1.0)));
}

double decoherence_ratio(double eta) {
  if (!(eta >= 0.0)) {
    throw std::invalid_argument("decoherence_ratio: eta must be >= 0");
  }
  return std::exp(-2.0 * eta);
}

DecoherenceFactors decoherence_factors(double eta) {
  if (!(eta >= 0.0)) {
    throw std::invalid_argument("decoherence_factors: eta must be >= 0");
  }
  const double dilation = std::exp(eta);
  const double contraction = std::exp(-eta);
  return {dilation, contraction, contraction / dilation};
}

double momentum_width(double eta) {
  return std::sqrt(0.5 * std::cosh(2.0 * eta));
}

PartonKinematics parton_kinematics(double lab_energy_gev,
                                   double hadron_mass_gev) {
  const double eta = rapidity_from_energy(lab_energy_gev, hadron_mass_gev);
  return {hadron_mass_gev, lab_energy_gev, eta, decoherence_ratio(eta)};
}

}  // namespace squeezelab::parton
