#pragma once

#include <Eigen/Core>

#include <utility>

namespace squeezelab::basis {

/// Highest supported mode index of the normalized eigenfunctions.
inline constexpr int kMaxMode = 1000;

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}.
///
/// Throws std::range_error if the recurrence overflows double range
/// (raw Hermite values grow like 2^(n/2) sqrt(n!)); use phi() for
/// large n instead.
double hermite_poly(int n, double x);

/// Normalized harmonic-oscillator eigenfunction
///   phi_k(x) = (2^k k! sqrt(pi))^(-1/2) H_k(x) e^(-x^2/2),
/// evaluated by a recurrence on the normalized function itself, so it is
/// stable and overflow-free up to k = kMaxMode.
double phi(int k, double x);

/// phi_0(x) .. phi_k(x) in a single recurrence pass.
Eigen::VectorXd phi_all(int k_max, double x);

/// Gauss-Hermite rule: integrates p(x) e^(-x^2) exactly for polynomials p
/// of degree <= 2*order - 1.
///
/// `weights` are the classical Gauss-Hermite weights (weight function
/// e^(-x^2) included); `total_weights` carry the weight function lifted
/// back out, total_weights[i] = weights[i] * e^(nodes[i]^2), computed in a
/// stable form so they stay meaningful at orders where the raw weights
/// underflow. Use total weights to integrate functions that already
/// contain their own Gaussian decay (wave functions, kernels).
struct QuadratureRule {
  Eigen::VectorXd nodes;          // strictly ascending, symmetric about 0
  Eigen::VectorXd weights;        // > 0
  Eigen::VectorXd total_weights;  // weights * e^(x^2)
  int order = 0;
};

/// Build the rule via a symmetric tridiagonal eigensolve (Golub-Welsch)
/// with one Newton polish per node; weights come from the Christoffel
/// identity total_weights[i] = 1 / sum_{k<order} phi_k(x_i)^2.
///
/// Valid for 2 <= order <= 512 (std::out_of_range otherwise). Every rule
/// is self-tested at construction: sum_i total_weights[i] * phi_0(x_i)^2
/// must equal 1 to 1e-12.
QuadratureRule gauss_hermite(int order);

/// Integral over the real line of a function with built-in decay at least
/// as fast as a Gaussian matched to the rule's scale.
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  double acc = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    acc += rule.total_weights[i] * f(rule.nodes[i]);
  }
  return acc;
}

/// Same with the substitution x -> scale * x, for integrands whose decay
/// scale is `scale` rather than 1.
template <class F>
double integrate_scaled(const QuadratureRule& rule, double scale, F&& f) {
  double acc = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    acc += rule.total_weights[i] * f(scale * rule.nodes[i]);
  }
  return scale * acc;
}

}  // namespace squeezelab::basis
