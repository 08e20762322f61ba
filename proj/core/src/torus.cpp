#include "td13/torus.hpp"

#include <numbers>
#include <random>

namespace td13 {

TorusPoint sample_torus(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  TorusPoint x;
  x.seed = seed;
  for (auto& t : x.theta) {
    // 53 random mantissa bits; avoids the library-specific behaviour of
    // uniform_real_distribution so angles are identical on every platform.
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    t = -std::numbers::pi + 2.0 * std::numbers::pi * u;
  }
  return x;
}

std::uint64_t next_seed(std::uint64_t seed) {
  return seed * 6364136223846793005ULL + 1442695040888963407ULL;
}

}  // namespace td13
