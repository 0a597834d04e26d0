#pragma once

#include <Eigen/Core>

#include "squeezelab/squeeze_param.hpp"

namespace squeezelab::squeezed {

/// Which pair of variables the two-mode Gaussian is read as. The kernel is
/// one and the same in all four readings; the tag is output metadata only.
enum class PairLabels { x1x2, xy, zt, momentum };

/// peak value 1/sqrt(pi) of every normalized two-mode Gaussian
inline const double kPeak = 0.5641895835477563;  // pi^(-1/2)

/// Ground-state two-mode Gaussian over variables (a, b):
///   psi_eta(a, b) = pi^(-1/2)
///       exp{ -(1/4) [ e^(-2 eta) (a+b)^2 + e^(2 eta) (a-b)^2 ] }.
double eval_position(SqueezeParam eta, double a, double b);

/// Same state in light-cone variables u = (a+b)/sqrt(2), v = (a-b)/sqrt(2):
///   pi^(-1/2) exp{ -(1/2) ( e^(-2 eta) u^2 + e^(2 eta) v^2 ) }.
double eval_lightcone(SqueezeParam eta, double u, double v);

/// Momentum-energy reading over (q_z, q_0) with conjugate light-cone
/// variables q_u = (q_0 - q_z)/sqrt(2), q_v = (q_0 + q_z)/sqrt(2):
///   pi^(-1/2) exp{ -(1/2) [ e^(-2 eta) q_u^2 + e^(2 eta) q_v^2 ] }.
double eval_momentum(SqueezeParam eta, double qz, double q0);

/// Variance of one variable after the other is integrated out:
/// cosh(2 eta)/2. Even in eta.
double marginal_variance(SqueezeParam eta);

/// The state as a value: the internal representation is the covariance
/// matrix of |psi|^2 over (a, b),
///   Sigma = (1/2) [[cosh 2eta, sinh 2eta], [sinh 2eta, cosh 2eta]],
/// whose determinant 1/4 is squeeze-invariant. eval() reproduces the
/// explicit exponent from Sigma's inverse.
struct TwoModeGaussian {
  TwoModeGaussian(SqueezeParam eta, PairLabels labels);

  SqueezeParam eta;
  PairLabels labels;

  Eigen::Matrix2d covariance() const;
  double eval(double a, double b) const;
};

}  // namespace squeezelab::squeezed
