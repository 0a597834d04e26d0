#pragma once

#include <cstdint>
#include <random>

namespace test_util {

// Deterministic uniform sampler; std::uniform_real_distribution output is
// implementation-defined, so the mapping is done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace test_util
