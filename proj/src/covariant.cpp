#include "squeezelab/covariant.hpp"

#include <cmath>
#include <stdexcept>

#include "squeezelab/basis.hpp"

namespace squeezelab::covariant {

SpacetimePoint boost(SpacetimePoint p, SqueezeParam eta) {
  const double ch = std::cosh(eta.value());
  const double sh = std::sinh(eta.value());
  return {p.z * ch + p.t * sh, p.z * sh + p.t * ch};
}

LightConePoint to_lightcone(SpacetimePoint p) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {(p.z + p.t) * inv_sqrt2, (p.z - p.t) * inv_sqrt2};
}

SpacetimePoint from_lightcone(LightConePoint q) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {(q.u + q.v) * inv_sqrt2, (q.u - q.v) * inv_sqrt2};
}

LightConePoint squeeze_lightcone(LightConePoint q, SqueezeParam eta) {
  return {std::exp(eta.value()) * q.u, std::exp(-eta.value()) * q.v};
}

namespace {

void check_excitation(int n) {
  if (n < 0) throw std::invalid_argument("excitation level must be >= 0");
  if (n > kMaxExcitation) {
    throw std::out_of_range("excitation level exceeds supported maximum 50");
  }
}

}  // namespace

double boosted_state_eval(const BoostedState& state, double z, double t) {
  check_excitation(state.n);
  const double ch = std::cosh(state.eta.value());
  const double sh = std::sinh(state.eta.value());
  const double zp = z * ch - t * sh;
  const double tp = t * ch - z * sh;
  return basis::phi(state.n, zp) * basis::phi(0, tp);
}

double fkr_operator_residual(const BoostedState& state, const FdGrid& grid) {
  check_excitation(state.n);
  if (grid.step > 1e-2 || !(grid.step > 0.0)) {
    throw std::invalid_argument(
        "fkr_operator_residual: grid too coarse (need step <= 1e-2)");
  }
  if (grid.half_width < 6.0) {
    throw std::invalid_argument(
        "fkr_operator_residual: grid must cover at least [-6, 6]");
  }

  const double h = grid.step;
  const int half = static_cast<int>(std::llround(grid.half_width / h));
  const int npts = 2 * half + 1;

  const double ch = std::cosh(state.eta.value());
  const double sh = std::sinh(state.eta.value());
  Eigen::MatrixXd psi(npts, npts);
  for (int i = 0; i < npts; ++i) {
    const double z = (i - half) * h;
    for (int j = 0; j < npts; ++j) {
      const double t = (j - half) * h;
      psi(i, j) = basis::phi(state.n, z * ch - t * sh) *
                  basis::phi(0, t * ch - z * sh);
    }
  }

  const double inv_h2 = 1.0 / (h * h);
  double worst = 0.0;
  for (int i = 1; i + 1 < npts; ++i) {
    const double z = (i - half) * h;
    for (int j = 1; j + 1 < npts; ++j) {
      const double t = (j - half) * h;
      const double d2z = (psi(i + 1, j) - 2.0 * psi(i, j) + psi(i - 1, j)) * inv_h2;
      const double d2t = (psi(i, j + 1) - 2.0 * psi(i, j) + psi(i, j - 1)) * inv_h2;
      const double op = 0.5 * ((z * z - t * t) * psi(i, j) - (d2z - d2t));
      worst = std::max(worst, std::abs(op - state.n * psi(i, j)));
    }
  }
  return worst;
}

EllipseGeometry ellipse_geometry(SqueezeParam eta) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  EllipseGeometry out;
  out.major = std::exp(eta.value());
  out.minor = std::exp(-eta.value());
  out.major_axis = Eigen::Vector2d(inv_sqrt2, inv_sqrt2);    // u
  out.minor_axis = Eigen::Vector2d(inv_sqrt2, -inv_sqrt2);   // v
  return out;
}

}  // namespace squeezelab::covariant
