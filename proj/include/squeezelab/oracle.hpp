#pragma once

#include <Eigen/Core>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "squeezelab/basis.hpp"
#include "squeezelab/squeeze_param.hpp"

namespace squeezelab::oracle {

/// Uniform 1-D grid for kernel discretization.
struct GridSpec {
  double half_width;
  int n_points;
};

/// Grid that keeps the truncated probability mass of the eta-squeezed
/// state below 1e-12 and resolves its narrow principal axis.
GridSpec default_grid(double eta);

/// Discretized two-point kernel K[i][j] = K(x_i, x_j) with quadrature
/// weights, so that traces and spectra of the underlying operator are
/// weighted matrix quantities. Assembly is independent per row; any
/// row-level parallel partition gives identical results.
struct GridKernel {
  Eigen::VectorXd grid;
  Eigen::MatrixXd values;
  Eigen::VectorXd weights;
};

/// K(a, a') = int psi_eta(a, b) psi_eta(a', b) db by brute-force
/// quadrature of the raw wave function on the grid (the b integral runs
/// over the same grid). Never touches the closed-form kernel it is used
/// to validate.
///
/// Preconditions: half_width >= 6 + 3|eta| and n_points >= 128
/// (std::invalid_argument). Throws std::runtime_error if the probability
/// mass outside the grid exceeds 1e-10.
GridKernel numeric_partial_trace(SqueezeParam eta, const GridSpec& spec);

/// Weighted trace sum_i w_i K_ii.
double kernel_trace(const GridKernel& k);

/// Weighted trace of K^2: sum_ij w_i w_j K_ij^2.
double kernel_purity(const GridKernel& k);

/// -sum lambda ln lambda over the spectrum of W^(1/2) K W^(1/2).
/// Eigenvalues in [-1e-6, 0) are discretization noise and are clamped to
/// 0 (as is anything above 1); below -1e-6 signals a failed
/// discretization and throws std::runtime_error.
double kernel_entropy(const GridKernel& k);

/// Tensor-product Gauss-Hermite grid for integrals over the (z, t) plane,
/// stretched by scale_u, scale_v along the two light-cone diagonals so
/// that squeezed integrands keep their Gaussian decay in grid coordinates.
struct PlaneGrid {
  basis::QuadratureRule rule;
  double scale_u = 1.0;
  double scale_v = 1.0;
};

PlaneGrid make_plane_grid(int order, double scale_u = 1.0, double scale_v = 1.0);

/// Grid matched to an eta-squeezed state: light-cone scales e^(+eta),
/// e^(-eta).
PlaneGrid plane_grid_for(double eta, int order = 128);

/// Integral of g over the plane. g must decay at least as fast as the
/// grid's stretched Gaussian; if the outermost node ring contributes more
/// than 1e-10 of the total in magnitude, the grid does not cover the
/// integrand and std::runtime_error is thrown.
template <class G>
double plane_integral(const PlaneGrid& grid, G&& g) {
  const auto& q = grid.rule;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double acc = 0.0;
  double edge = 0.0;
  double total_abs = 0.0;
  for (int i = 0; i < q.order; ++i) {
    const double su = grid.scale_u * q.nodes[i];
    for (int j = 0; j < q.order; ++j) {
      const double sv = grid.scale_v * q.nodes[j];
      const double z = (su + sv) * inv_sqrt2;
      const double t = (su - sv) * inv_sqrt2;
      const double term =
          q.total_weights[i] * q.total_weights[j] * g(z, t);
      acc += term;
      total_abs += std::abs(term);
      if (i == 0 || j == 0 || i == q.order - 1 || j == q.order - 1) {
        edge += std::abs(term);
      }
    }
  }
  if (total_abs > 0.0 && edge > 1e-10 * total_abs) {
    throw std::runtime_error(
        "plane_integral: integrand not covered by the grid");
  }
  return acc * grid.scale_u * grid.scale_v;
}

/// L2 norm-squared of a two-variable evaluator: int f(z, t)^2 dz dt.
double numeric_norm(const std::function<double(double, double)>& f,
                    const PlaneGrid& grid);

/// int f g over the plane.
double numeric_overlap(const std::function<double(double, double)>& f,
                       const std::function<double(double, double)>& g,
                       const PlaneGrid& grid);

}  // namespace squeezelab::oracle
