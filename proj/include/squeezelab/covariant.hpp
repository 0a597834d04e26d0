#pragma once

#include <Eigen/Core>

#include "squeezelab/squeeze_param.hpp"

namespace squeezelab::covariant {

/// Longitudinal and time-like separation between the two constituents,
/// natural units with c = 1.
struct SpacetimePoint {
  double z;
  double t;
};

/// u = (z + t)/sqrt(2), v = (z - t)/sqrt(2). A boost by rapidity eta acts
/// as the reciprocal scaling (u, v) -> (e^eta u, e^(-eta) v).
struct LightConePoint {
  double u;
  double v;
};

/// Boost by rapidity eta:
///   z' = z cosh(eta) + t sinh(eta),  t' = z sinh(eta) + t cosh(eta).
/// One-parameter group: boost(boost(p, a), b) = boost(p, a + b).
SpacetimePoint boost(SpacetimePoint p, SqueezeParam eta);

LightConePoint to_lightcone(SpacetimePoint p);
SpacetimePoint from_lightcone(LightConePoint q);

/// The boost in light-cone form; u v is invariant.
LightConePoint squeeze_lightcone(LightConePoint q, SqueezeParam eta);

/// Maximum longitudinal excitation supported by boosted_state_eval.
inline constexpr int kMaxExcitation = 50;

/// Oscillator state with n quanta along the longitudinal direction, none
/// along the time-like direction, boosted by rapidity eta. Normalized over
/// the (z, t) plane for every eta.
struct BoostedState {
  int n;
  SqueezeParam eta;
};

/// psi^n_eta(z, t) = phi_n(z') phi_0(t') with the rest-frame coordinates
///   z' = z cosh(eta) - t sinh(eta),  t' = t cosh(eta) - z sinh(eta)
/// (the inverse boost substituted into the rest-frame solution). At n = 0
/// this is the squeezed Gaussian of squeezed::eval_lightcone.
double boosted_state_eval(const BoostedState& state, double z, double t);

/// Uniform finite-difference grid over [-half_width, half_width]^2.
struct FdGrid {
  double half_width = 6.0;
  double step = 1e-2;
};

/// Residual of the Lorentz-invariant oscillator equation restricted to the
/// (z, t) plane:
///   (1/2) [ (z^2 - t^2) - (d^2/dz^2 - d^2/dt^2) ] psi = n psi,
/// with second derivatives by central differences. Returns the maximum of
/// |Op psi - n psi| over interior grid points; O(step^2), and independent
/// of eta because the operator is boost-invariant.
///
/// Requires half_width >= 6 and step <= 1e-2.
double fkr_operator_residual(const BoostedState& state, const FdGrid& grid = {});

/// Boundary ellipse of the squeezed ground state: the contour where psi
/// falls to e^(-1/2) of its peak, with semi-axes e^eta and e^(-eta) along
/// the light-cone directions. Product of the axes (and hence the enclosed
/// area) is invariant.
struct EllipseGeometry {
  double major;                // e^eta
  double minor;                // e^(-eta)
  Eigen::Vector2d major_axis;  // u direction, unit vector in the (z, t) plane
  Eigen::Vector2d minor_axis;  // v direction
};

EllipseGeometry ellipse_geometry(SqueezeParam eta);

}  // namespace squeezelab::covariant
