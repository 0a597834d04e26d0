#include "squeezelab/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "squeezelab/squeezed.hpp"

namespace squeezelab::oracle {

GridSpec default_grid(double eta) {
  const double ae = std::abs(eta);
  const double marginal_sd = std::sqrt(0.5 * std::cosh(2.0 * ae));
  const double transverse_sd = 1.0 / std::sqrt(2.0 * std::cosh(2.0 * ae));
  const double half_width = std::max(6.0 + 3.0 * ae, 7.5 * marginal_sd + 2.0);
  const double step = std::min(0.08, transverse_sd / 2.5);
  const int n = std::max(128, static_cast<int>(std::ceil(2.0 * half_width / step)) + 1);
  return {half_width, n};
}

GridKernel numeric_partial_trace(SqueezeParam eta, const GridSpec& spec) {
  const double ae = std::abs(eta.value());
  if (spec.half_width < 6.0 + 3.0 * ae) {
    throw std::invalid_argument(
        "numeric_partial_trace: grid must cover +/-(6 + 3|eta|)");
  }
  if (spec.n_points < 128) {
    throw std::invalid_argument("numeric_partial_trace: need >= 128 points");
  }
  // Probability mass of the marginal (variance cosh(2 eta)/2) outside the
  // grid; the kernel decays identically along its diagonal.
  const double c = std::cosh(2.0 * ae);
  if (std::erfc(spec.half_width / std::sqrt(c)) > 1e-10) {
    throw std::runtime_error(
        "numeric_partial_trace: insufficient grid coverage (mass outside "
        "grid above 1e-10)");
  }

  const int n = spec.n_points;
  GridKernel out;
  out.grid = Eigen::VectorXd::LinSpaced(n, -spec.half_width, spec.half_width);
  const double h = out.grid[1] - out.grid[0];
  out.weights = Eigen::VectorXd::Constant(n, h);
  out.weights[0] = out.weights[n - 1] = 0.5 * h;

  // E[i][q] = psi(a_i, b_q); K = E W E^T does the b integral for every
  // pair (a_i, a_j) at once.
  Eigen::MatrixXd evals(n, n);
  for (int i = 0; i < n; ++i) {
    for (int q = 0; q < n; ++q) {
      evals(i, q) = squeezed::eval_position(eta, out.grid[i], out.grid[q]);
    }
  }
  out.values.noalias() =
      evals * out.weights.asDiagonal() * evals.transpose();
  return out;
}

double kernel_trace(const GridKernel& k) {
  return k.weights.dot(k.values.diagonal());
}

double kernel_purity(const GridKernel& k) {
  // Tr(K^2) = sum_ij w_i K_ij w_j K_ji; K is symmetric.
  return (k.weights.asDiagonal() * k.values * k.weights.asDiagonal())
      .cwiseProduct(k.values)
      .sum();
}

double kernel_entropy(const GridKernel& k) {
  const Eigen::VectorXd sqrt_w = k.weights.cwiseSqrt();
  const Eigen::MatrixXd sym =
      sqrt_w.asDiagonal() * k.values * sqrt_w.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("kernel_entropy: eigensolve failed");
  }
  double s = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda < -1e-6) {
      throw std::runtime_error(
          "kernel_entropy: eigenvalue below -1e-6, discretization failed");
    }
    lambda = std::min(std::max(lambda, 0.0), 1.0);
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

PlaneGrid make_plane_grid(int order, double scale_u, double scale_v) {
  if (!(scale_u > 0.0) || !(scale_v > 0.0)) {
    throw std::invalid_argument("make_plane_grid: scales must be positive");
  }
  return {basis::gauss_hermite(order), scale_u, scale_v};
}

PlaneGrid plane_grid_for(double eta, int order) {
  return make_plane_grid(order, std::exp(eta), std::exp(-eta));
}

double numeric_norm(const std::function<double(double, double)>& f,
                    const PlaneGrid& grid) {
  return plane_integral(grid, [&](double z, double t) {
    const double v = f(z, t);
    return v * v;
  });
}

double numeric_overlap(const std::function<double(double, double)>& f,
                       const std::function<double(double, double)>& g,
                       const PlaneGrid& grid) {
  return plane_integral(grid, [&](double z, double t) { return f(z, t) * g(z, t); });
}

}  // namespace squeezelab::oracle
