#pragma once

#include <cmath>
#include <stdexcept>

namespace squeezelab {

/// Dimensionless hyperbolic parameter shared by every module: it is the
/// oscillator coupling strength, the Lorentz-boost rapidity, and the
/// two-mode squeeze parameter, depending on which variables it acts on.
///
/// Bounded to |eta| <= 20 at construction; beyond that e^(2*eta) exceeds
/// any dynamic range the library's quadratures can resolve.
class SqueezeParam {
 public:
  static constexpr double kMaxAbs = 20.0;

  SqueezeParam(double eta) : eta_(eta) {
    if (!std::isfinite(eta)) {
      throw std::invalid_argument("SqueezeParam: eta must be finite");
    }
    if (std::abs(eta) > kMaxAbs) {
      throw std::invalid_argument("SqueezeParam: |eta| must not exceed 20");
    }
  }

  double value() const noexcept { return eta_; }

 private:
  double eta_;
};

}  // namespace squeezelab
