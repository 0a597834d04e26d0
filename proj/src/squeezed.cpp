#include "squeezelab/squeezed.hpp"

#include <cmath>

namespace squeezelab::squeezed {

double eval_position(SqueezeParam eta, double a, double b) {
  const double em = std::exp(-2.0 * eta.value());
  const double ep = std::exp(2.0 * eta.value());
  const double plus = a + b;
  const double minus = a - b;
  return kPeak * std::exp(-0.25 * (em * plus * plus + ep * minus * minus));
}

double eval_lightcone(SqueezeParam eta, double u, double v) {
  const double em = std::exp(-2.0 * eta.value());
  const double ep = std::exp(2.0 * eta.value());
  return kPeak * std::exp(-0.5 * (em * u * u + ep * v * v));
}

double eval_momentum(SqueezeParam eta, double qz, double q0) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double qu = (q0 - qz) * inv_sqrt2;
  const double qv = (q0 + qz) * inv_sqrt2;
  return eval_lightcone(eta, qu, qv);
}

double marginal_variance(SqueezeParam eta) {
  return 0.5 * std::cosh(2.0 * eta.value());
}

TwoModeGaussian::TwoModeGaussian(SqueezeParam eta_, PairLabels labels_)
    : eta(eta_), labels(labels_) {}

Eigen::Matrix2d TwoModeGaussian::covariance() const {
  const double c = std::cosh(2.0 * eta.value());
  const double s = std::sinh(2.0 * eta.value());
  Eigen::Matrix2d sigma;
  sigma << c, s, s, c;
  return 0.5 * sigma;
}

double TwoModeGaussian::eval(double a, double b) const {
  // psi = pi^(-1/2) exp{ -(1/4) x^T Sigma^{-1} x }. Sigma^{-1} is formed
  // from the adjugate with det(Sigma) = 1/4 taken exactly; a numeric
  // inverse would cancel cosh^2 - sinh^2 catastrophically at large eta.
  const double c = std::cosh(2.0 * eta.value());
  const double s = std::sinh(2.0 * eta.value());
  Eigen::Matrix2d precision;
  precision << 2.0 * c, -2.0 * s, -2.0 * s, 2.0 * c;
  const Eigen::Vector2d x(a, b);
  return kPeak * std::exp(-0.25 * x.dot(precision * x));
}

}  // namespace squeezelab::squeezed
