#include "squeezelab/entangle.hpp"

#include <cmath>
#include <stdexcept>

#include "squeezelab/basis.hpp"
#include "squeezelab/squeezed.hpp"

namespace squeezelab::entangle {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_mode(int k) {
  if (k < 0) throw std::invalid_argument("mode index must be non-negative");
}

// ln tanh(x) for x > 0 without the tanh -> 1 rounding that loses the
// log for x beyond ~19: tanh x = (1 - e^(-2x))/(1 + e^(-2x)).
double log_tanh(double x) {
  const double t = std::exp(-2.0 * x);
  return std::log1p(-t) - std::log1p(t);
}
}  // namespace

double schmidt_coefficient(SqueezeParam eta, int k) {
  check_mode(k);
  const double lambda = std::tanh(eta.value());
  return std::pow(lambda, k) / std::cosh(eta.value());
}

double expansion_coefficient_fn(SqueezeParam eta, int k, double y) {
  return schmidt_coefficient(eta, k) * basis::phi(k, y);
}

SchmidtSpectrum schmidt_spectrum(SqueezeParam eta, int truncation) {
  if (truncation < 1) {
    throw std::invalid_argument("schmidt_spectrum: truncation must be >= 1");
  }
  const double lambda2 = std::tanh(eta.value()) * std::tanh(eta.value());
  // p_0 = 1 - tanh^2 = sech^2, taken directly so it survives the eta
  // range where tanh^2 rounds to 1
  const double ch = std::cosh(eta.value());
  Eigen::VectorXd p(truncation);
  double term = 1.0 / (ch * ch);
  for (int k = 0; k < truncation; ++k) {
    p[k] = term;
    term *= lambda2;
  }
  return SchmidtSpectrum{eta, truncation, std::move(p),
                         std::pow(lambda2, truncation)};
}

double reconstruct_wavefunction(SqueezeParam eta, double a, double b,
                                int n_terms) {
  if (n_terms < 1) {
    throw std::invalid_argument("reconstruct_wavefunction: need n_terms >= 1");
  }
  const double lambda = std::tanh(eta.value());
  const Eigen::VectorXd pa = basis::phi_all(n_terms - 1, a);
  const Eigen::VectorXd pb = basis::phi_all(n_terms - 1, b);
  double acc = 0.0;
  double lk = 1.0;  // lambda^k
  for (int k = 0; k < n_terms; ++k) {
    acc += lk * pa[k] * pb[k];
    lk *= lambda;
  }
  return acc / std::cosh(eta.value());
}

double purity(SqueezeParam eta) { return 1.0 / std::cosh(2.0 * eta.value()); }

double entropy(SqueezeParam eta) {
  const double ah = std::abs(eta.value());
  if (ah == 0.0) return 0.0;  // sinh^2 ln sinh -> 0
  // 2 { cosh^2 ln cosh - sinh^2 ln sinh }, rearranged to
  // 2 { ln cosh - sinh^2 ln tanh }: the direct form cancels
  // catastrophically once cosh and sinh agree to double precision.
  const double sh = std::sinh(ah);
  return 2.0 * (std::log(std::cosh(ah)) - sh * sh * log_tanh(ah));
}

double entropy_from_spectrum(const SchmidtSpectrum& spectrum) {
  double s = 0.0;
  for (int k = 0; k < spectrum.truncation; ++k) {
    const double p = spectrum.eigenvalues[k];
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double effective_temperature(SqueezeParam eta, double omega,
                             ThermalMapping mapping) {
  if (!(eta.value() > 0.0)) {
    throw std::domain_error(
        "effective_temperature: eta must be positive (no finite temperature)");
  }
  if (!(omega > 0.0)) {
    throw std::domain_error("effective_temperature: omega must be positive");
  }
  const double lt = log_tanh(eta.value());  // < 0, exact even at eta = 20
  const double factor = (mapping == ThermalMapping::tanh_squared) ? 2.0 : 1.0;
  return omega / (-factor * lt);
}

double thermal_entropy(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("thermal_entropy: x = omega/T must be positive");
  }
  const double t = std::exp(-x);
  const double one_minus_t = -std::expm1(-x);  // accurate down to x ~ 1e-300
  return x * t / one_minus_t - std::log(one_minus_t);
}

double pure_density_eval(SqueezeParam eta, double a, double b, double a_prime,
                         double b_prime) {
  return squeezed::eval_position(eta, a, b) *
         squeezed::eval_position(eta, a_prime, b_prime);
}

double reduced_density_kernel(SqueezeParam eta, double a, double a_prime) {
  const double c = std::cosh(2.0 * eta.value());
  const double s = std::sinh(2.0 * eta.value());
  const double coef_diag = c - s * s / (2.0 * c);
  const double coef_cross = s * s / (2.0 * c);
  return std::exp(-0.5 * coef_diag * (a * a + a_prime * a_prime) +
                  coef_cross * a * a_prime) /
         std::sqrt(kPi * c);
}

double ReducedDensityMatrix::kernel(double a, double a_prime) const {
  return reduced_density_kernel(spectrum.eta, a, a_prime);
}

Eigen::MatrixXd ReducedDensityMatrix::kernel_matrix(
    const Eigen::VectorXd& grid) const {
  const auto n = grid.size();
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      out(i, j) = out(j, i) = kernel(grid[i], grid[j]);
    }
  }
  return out;
}

ReducedDensityMatrix reduced_density_matrix(SqueezeParam eta, int truncation) {
  return ReducedDensityMatrix{schmidt_spectrum(eta, truncation)};
}

}  // namespace squeezelab::entangle
