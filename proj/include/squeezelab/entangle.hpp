#pragma once

#include <Eigen/Core>

#include "squeezelab/squeeze_param.hpp"

namespace squeezelab::entangle {

/// Default Fock-space truncation for every series evaluation. The tail of
/// the Schmidt spectrum beyond N terms carries total weight tanh(eta)^(2N).
inline constexpr int kDefaultTruncation = 400;

/// Amplitude of the k-th paired mode in the Schmidt expansion
///   psi_eta(a, b) = sum_k [tanh(eta)^k / cosh(eta)] phi_k(a) phi_k(b).
double schmidt_coefficient(SqueezeParam eta, int k);

/// Feynman-style expansion coefficient C_k(y) = schmidt_coefficient * phi_k(y):
/// the weight of observable mode k as a function of the unobserved variable.
double expansion_coefficient_fn(SqueezeParam eta, int k, double y);

/// Eigenvalues p_k = (1 - tanh^2 eta) tanh(eta)^(2k) of the reduced density
/// matrix, truncated at `truncation` terms.
struct SchmidtSpectrum {
  SqueezeParam eta;
  int truncation;
  Eigen::VectorXd eigenvalues;  // p_0 .. p_{truncation-1}
  double tail_bound;            // 1 - sum p_k = tanh(eta)^(2 truncation)
};

SchmidtSpectrum schmidt_spectrum(SqueezeParam eta,
                                 int truncation = kDefaultTruncation);

/// Partial sum of the Schmidt expansion with n_terms terms; converges to
/// squeezed::eval_position(eta, a, b) as n_terms grows, with pointwise
/// error of order tanh(eta)^n_terms.
double reconstruct_wavefunction(SqueezeParam eta, double a, double b,
                                int n_terms);

/// Tr(rho^2) of the reduced state: 1/cosh(2 eta).
double purity(SqueezeParam eta);

/// von Neumann entropy of the reduced state, in units of Boltzmann's
/// constant:
///   S(eta) = 2 { cosh^2(eta) ln cosh(eta) - sinh^2(eta) ln sinh(eta) },
/// continued evenly to eta < 0 and to the limit value 0 at eta = 0.
double entropy(SqueezeParam eta);

/// -sum_k p_k ln p_k over the truncated spectrum, with 0 ln 0 := 0.
double entropy_from_spectrum(const SchmidtSpectrum& spectrum);

/// Convention relating the squeeze parameter to a temperature.
/// `tanh_squared` (default): tanh^2(eta) = exp(-omega/T), which makes the
/// reduced state exactly a Gibbs state of the oscillator, so the thermal
/// entropy formula reproduces entropy(eta) identically.
/// `tanh_linear`: tanh(eta) = exp(-omega/T), a convention that appears in
/// the literature; it does not satisfy that identity.
enum class ThermalMapping { tanh_squared, tanh_linear };

/// Temperature (k_B = 1) assigned to the reduced state at frequency omega.
/// Requires eta > 0 and omega > 0.
double effective_temperature(SqueezeParam eta, double omega,
                             ThermalMapping mapping = ThermalMapping::tanh_squared);

/// Entropy of a harmonic oscillator in thermal equilibrium as a function of
/// x = omega/T (k_B = hbar = 1):
///   S(x) = x/(e^x - 1) - ln(1 - e^(-x)),  x > 0.
double thermal_entropy(double x);

/// Pure-state density matrix rho(a,b; a',b') = psi(a,b) psi(a',b').
double pure_density_eval(SqueezeParam eta, double a, double b, double a_prime,
                         double b_prime);

/// Reduced density kernel rho(a, a') = int psi(a, b) psi(a', b) db in closed
/// Gaussian form: with c = cosh(2 eta), s = sinh(2 eta),
///   rho(a, a') = (pi c)^(-1/2)
///       exp{ -(A/2)(a^2 + a'^2) + B a a' },
///   A = c - s^2/(2c),  B = s^2/(2c).
/// Equals the Fock series sum_k p_k phi_k(a) phi_k(a').
double reduced_density_kernel(SqueezeParam eta, double a, double a_prime);

/// Reduced state after tracing out the unobserved variable: diagonal in the
/// Fock basis with the Schmidt eigenvalues, plus the position-space kernel.
struct ReducedDensityMatrix {
  SchmidtSpectrum spectrum;

  double kernel(double a, double a_prime) const;
  Eigen::MatrixXd kernel_matrix(const Eigen::VectorXd& grid) const;
};

ReducedDensityMatrix reduced_density_matrix(SqueezeParam eta,
                                            int truncation = kDefaultTruncation);

}  // namespace squeezelab::entangle
