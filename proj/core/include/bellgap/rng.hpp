#pragma once

#include <cstdint>
#include <random>

namespace bellgap {

// Deterministic uniform sampling. The raw mt19937_64 output stream is fixed
// by the standard; std::uniform_real_distribution is not, so doubles are
// derived from the raw bits directly.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace bellgap
