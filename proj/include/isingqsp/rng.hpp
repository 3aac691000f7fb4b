#pragma once

#include <cstdint>
#include <random>

namespace isingqsp {

// Deterministic uniform variates. std::uniform_real_distribution is
// implementation-defined, so doubles are produced from raw engine bits
// directly: 53 uniform bits scaled into [0,1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // integer in [0, n)
  std::uint64_t index(std::uint64_t n) { return eng_() % n; }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace isingqsp
