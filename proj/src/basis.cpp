#include "squeezelab/basis.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace squeezelab::basis {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kPhi0Norm = std::pow(kPi, -0.25);

void check_mode(int k) {
  if (k < 0) throw std::invalid_argument("mode index must be non-negative");
  if (k > kMaxMode) {
    throw std::out_of_range("mode index " + std::to_string(k) +
                            " exceeds supported maximum " +
                            std::to_string(kMaxMode));
  }
}

}  // namespace

double hermite_poly(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_poly: n must be >= 0");
  if (!std::isfinite(x)) throw std::invalid_argument("hermite_poly: x must be finite");
  double hm = 1.0;  // H_0
  if (n == 0) return hm;
  double h = 2.0 * x;  // H_1
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = next;
  }
  if (!std::isfinite(h)) {
    throw std::range_error("hermite_poly: H_" + std::to_string(n) +
                           " overflows double range at x = " + std::to_string(x));
  }
  return h;
}

double phi(int k, double x) {
  check_mode(k);
  double pm = kPhi0Norm * std::exp(-0.5 * x * x);  // phi_0
  if (k == 0) return pm;
  double p = std::sqrt(2.0) * x * pm;  // phi_1
  for (int j = 1; j < k; ++j) {
    const double next =
        std::sqrt(2.0 / (j + 1)) * x * p - std::sqrt(j / (j + 1.0)) * pm;
    pm = p;
    p = next;
  }
  return p;
}

Eigen::VectorXd phi_all(int k_max, double x) {
  check_mode(k_max);
  Eigen::VectorXd out(k_max + 1);
  out[0] = kPhi0Norm * std::exp(-0.5 * x * x);
  if (k_max >= 1) out[1] = std::sqrt(2.0) * x * out[0];
  for (int j = 1; j < k_max; ++j) {
    out[j + 1] = std::sqrt(2.0 / (j + 1)) * x * out[j] -
                 std::sqrt(j / (j + 1.0)) * out[j - 1];
  }
  return out;
}

QuadratureRule gauss_hermite(int order) {
  if (order < 2 || order > 512) {
    throw std::out_of_range("gauss_hermite: order must be in [2, 512]");
  }

  // Jacobi matrix of the Hermite recurrence: zero diagonal,
  // off-diagonal beta_k = sqrt(k/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order - 1);
  for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(k / 2.0);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_hermite: tridiagonal eigensolve failed");
  }

  QuadratureRule rule;
  rule.order = order;
  rule.nodes = solver.eigenvalues();  // ascending

  // Enforce the exact +/- symmetry of the node set, then polish each node
  // with one Newton step on phi_order(x) = 0 (same zeros as H_order).
  for (int i = 0; i < order / 2; ++i) {
    const double x = 0.5 * (rule.nodes[order - 1 - i] - rule.nodes[i]);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;

  rule.weights.resize(order);
  rule.total_weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = rule.nodes[i];
    for (int it = 0; it < 2; ++it) {
      const Eigen::VectorXd ph = phi_all(order, x);
      const double dphi = std::sqrt(2.0 * order) * ph[order - 1] - x * ph[order];
      if (dphi == 0.0) break;
      x -= ph[order] / dphi;
    }
    rule.nodes[i] = x;

    // Christoffel weights: 1 / sum_{k<order} phi_k(x_i)^2 is the quadrature
    // weight with the Gaussian factored out.
    const Eigen::VectorXd ph = phi_all(order - 1, x);
    rule.total_weights[i] = 1.0 / ph.squaredNorm();
    const double w = rule.total_weights[i] * std::exp(-x * x);
    // Raw weights underflow near the extreme nodes of very large rules;
    // keep them positive as promised.
    rule.weights[i] = std::max(w, std::numeric_limits<double>::denorm_min());
  }

  // Construction self-test: the rule must reproduce the phi_0 norm.
  double norm0 = 0.0;
  for (int i = 0; i < order; ++i) {
    const double p0 = phi(0, rule.nodes[i]);
    norm0 += rule.total_weights[i] * p0 * p0;
  }
  if (std::abs(norm0 - 1.0) > 1e-12) {
    throw std::runtime_error("gauss_hermite: self-test failed at order " +
                             std::to_string(order));
  }
  return rule;
}

}  // namespace squeezelab::basis
