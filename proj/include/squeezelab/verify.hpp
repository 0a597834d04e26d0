#pragma once

#include <string>
#include <vector>

namespace squeezelab::verify {

/// One analytic-vs-oracle comparison.
struct Check {
  std::string name;
  double analytic;
  double measured;
  double delta;      // |analytic - measured|
  double tolerance;
  bool passed;
};

struct Options {
  /// Gauss-Hermite order used by quadrature-backed checks
  /// (SQUEEZELAB_QUAD_ORDER; default 128).
  int quad_order = 128;
  /// Strict profile pins every tolerance to 1e-14; most quadrature checks
  /// then fail by construction, which exercises the failure path.
  bool strict = false;
};

/// Run every closed-form-vs-oracle identity the library promises.
/// Deterministic: fixed-seed sampling, no time dependence.
std::vector<Check> run_suite(const Options& opts = {});

}  // namespace squeezelab::verify
