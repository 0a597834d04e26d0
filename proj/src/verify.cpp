#include "squeezelab/verify.hpp"

#include <cmath>
#include <random>

#include "squeezelab/basis.hpp"
#include "squeezelab/covariant.hpp"
#include "squeezelab/entangle.hpp"
#include "squeezelab/oracle.hpp"
#include "squeezelab/parton.hpp"
#include "squeezelab/squeezed.hpp"

namespace squeezelab::verify {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  // fixed mapping instead of std::uniform_real_distribution, whose output
  // is implementation-defined
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

class Suite {
 public:
  explicit Suite(const Options& opts) : opts_(opts) {}

  void add(const std::string& name, double analytic, double measured,
           double tolerance) {
    if (opts_.strict) tolerance = 1e-14;
    const double delta = std::abs(analytic - measured);
    checks_.push_back({name, analytic, measured, delta, tolerance,
                       delta <= tolerance});
  }

  std::vector<Check> take() && { return std::move(checks_); }

  const Options& opts() const { return opts_; }

 private:
  Options opts_;
  std::vector<Check> checks_;
};

void basis_checks(Suite& s) {
  const auto rule = basis::gauss_hermite(s.opts().quad_order);
  double unit = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double p0 = basis::phi(0, rule.nodes[i]);
    unit += rule.total_weights[i] * p0 * p0;
  }
  s.add("basis.quadrature_unit_mass", 1.0, unit, 1e-12);

  const auto overlap = [&](int j, int k) {
    return basis::integrate(
        rule, [&](double x) { return basis::phi(j, x) * basis::phi(k, x); });
  };
  s.add("basis.orthonormality_phi3", 1.0, overlap(3, 3), 1e-12);
  s.add("basis.orthogonality_phi2_phi5", 0.0, overlap(2, 5), 1e-12);
}

void squeezed_checks(Suite& s) {
  const SqueezeParam eta{1.0};
  const auto grid = oracle::plane_grid_for(eta.value(), s.opts().quad_order);
  const auto psi = [eta](double a, double b) {
    return squeezed::eval_position(eta, a, b);
  };
  s.add("squeezed.norm_eta1", 1.0, oracle::numeric_norm(psi, grid), 1e-9);

  const double second_moment = oracle::plane_integral(grid, [&](double a, double b) {
    const double v = psi(a, b);
    return a * a * v * v;
  });
  s.add("squeezed.marginal_variance_eta1", squeezed::marginal_variance(eta),
        second_moment, 1e-9);
}

void entangle_checks(Suite& s) {
  const SqueezeParam eta1{1.0};
  const SqueezeParam eta2{2.0};
  const auto kernel1 = oracle::numeric_partial_trace(eta1, oracle::default_grid(1.0));
  const auto kernel2 = oracle::numeric_partial_trace(eta2, oracle::default_grid(2.0));

  s.add("entangle.kernel_trace_eta1", 1.0, oracle::kernel_trace(kernel1), 1e-8);

  const auto spectrum1 = entangle::schmidt_spectrum(eta1);
  s.add("entangle.purity_series_eta1", entangle::purity(eta1),
        spectrum1.eigenvalues.squaredNorm(), 1e-10);
  s.add("entangle.purity_kernel_eta2", entangle::purity(eta2),
        oracle::kernel_purity(kernel2), 1e-7);

  s.add("entangle.entropy_spectrum_eta1", entangle::entropy(eta1),
        entangle::entropy_from_spectrum(spectrum1), 1e-10);
  s.add("entangle.entropy_kernel_eta2", entangle::entropy(eta2),
        oracle::kernel_entropy(kernel2), 1e-5);

  s.add("entangle.thermal_identity_eta1", entangle::entropy(eta1),
        entangle::thermal_entropy(-2.0 * std::log(std::tanh(1.0))), 1e-9);

  // closed Gaussian kernel vs the brute-force partial trace, pointwise
  double worst = 0.0;
  const int n = static_cast<int>(kernel1.grid.size());
  for (int i = 0; i < n; i += 13) {
    for (int j = 0; j < n; j += 17) {
      const double closed =
          entangle::reduced_density_kernel(eta1, kernel1.grid[i], kernel1.grid[j]);
      worst = std::max(worst, std::abs(closed - kernel1.values(i, j)));
    }
  }
  s.add("entangle.kernel_pointwise_eta1", 0.0, worst, 1e-8);

  std::mt19937_64 rng(0x5eed5eedULL);
  double worst_rec = 0.0;
  for (int i = 0; i < 32; ++i) {
    const double a = uniform(rng, -3.0, 3.0);
    const double b = uniform(rng, -3.0, 3.0);
    const double rec = entangle::reconstruct_wavefunction(eta1, a, b, 400);
    worst_rec = std::max(worst_rec,
                         std::abs(rec - squeezed::eval_position(eta1, a, b)));
  }
  s.add("entangle.reconstruction_eta1_n400", 0.0, worst_rec, 1e-10);
}

void covariant_checks(Suite& s) {
  const covariant::BoostedState excited{3, SqueezeParam{1.0}};
  const auto grid = oracle::plane_grid_for(1.0, s.opts().quad_order);
  const auto psi3 = [&](double z, double t) {
    return covariant::boosted_state_eval(excited, z, t);
  };
  s.add("covariant.norm_n3_eta1", 1.0, oracle::numeric_norm(psi3, grid), 1e-7);

  const covariant::BoostedState n2{2, SqueezeParam{1.0}};
  const covariant::BoostedState n4{4, SqueezeParam{1.0}};
  const double overlap = oracle::numeric_overlap(
      [&](double z, double t) { return covariant::boosted_state_eval(n2, z, t); },
      [&](double z, double t) { return covariant::boosted_state_eval(n4, z, t); },
      grid);
  s.add("covariant.orthogonality_n2_n4_eta1", 0.0, overlap, 1e-8);

  s.add("covariant.fkr_residual_n0_eta1", 0.0,
        covariant::fkr_operator_residual({0, SqueezeParam{1.0}}), 1e-3);
  s.add("covariant.fkr_residual_n2_eta0", 0.0,
        covariant::fkr_operator_residual({2, SqueezeParam{0.0}}), 1e-3);

  std::mt19937_64 rng(0xc0ffeeULL);
  double worst_conj = 0.0;
  double worst_uv = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const covariant::SpacetimePoint p{uniform(rng, -5, 5), uniform(rng, -5, 5)};
    const SqueezeParam eta{uniform(rng, -2, 2)};
    const auto via_boost = covariant::to_lightcone(covariant::boost(p, eta));
    const auto via_squeeze =
        covariant::squeeze_lightcone(covariant::to_lightcone(p), eta);
    worst_conj = std::max({worst_conj, std::abs(via_boost.u - via_squeeze.u),
                           std::abs(via_boost.v - via_squeeze.v)});
    const auto q = covariant::to_lightcone(p);
    worst_uv = std::max(worst_uv,
                        std::abs(via_squeeze.u * via_squeeze.v - q.u * q.v));
  }
  s.add("covariant.boost_squeeze_conjugation", 0.0, worst_conj, 1e-12);
  s.add("covariant.uv_product_invariance", 0.0, worst_uv, 1e-12);
}

void parton_checks(Suite& s) {
  const auto kin = parton::parton_kinematics(900.0, parton::kProtonMassGeV);
  const double gamma = 900.0 / parton::kProtonMassGeV;
  const double asymptotic_ratio = 1.0 / (4.0 * gamma * gamma);  // e^(-2 ln 2 gamma)
  s.add("parton.ratio_vs_ln2gamma_asymptotic", kin.ratio, asymptotic_ratio,
        1e-10);

  const double eta = 2.0;
  const auto grid = oracle::plane_grid_for(-eta, s.opts().quad_order);
  const double qz_second_moment =
      oracle::plane_integral(grid, [&](double qz, double q0) {
        const double v = squeezed::eval_momentum(SqueezeParam{eta}, qz, q0);
        return qz * qz * v * v;
      });
  const double width = parton::momentum_width(eta);
  s.add("parton.momentum_width_eta2", width * width, qz_second_moment, 1e-7);
}

}  // namespace

std::vector<Check> run_suite(const Options& opts) {
  Suite suite(opts);
  basis_checks(suite);
  squeezed_checks(suite);
  entangle_checks(suite);
  covariant_checks(suite);
  parton_checks(suite);
  return std::move(suite).take();
}

}  // namespace squeezelab::verify
