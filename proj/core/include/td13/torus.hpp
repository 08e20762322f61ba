#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "td13/encoding.hpp"

namespace td13 {

/// A point of the 12-torus: one angle per type index.
struct TorusPoint {
  std::array<double, TypeIndex::kCount> theta{};
  std::uint64_t seed = 0;

  std::complex<double> value(int i) const { return std::polar(1.0, theta[i]); }
  std::complex<double> value(TypeIndex t) const { return value(t.index()); }
};

/// Twelve angles, uniform on [-pi, pi), from a 64-bit Mersenne twister.
TorusPoint sample_torus(std::uint64_t seed);

/// The seed used for the next attempt after a failed drawing.
std::uint64_t next_seed(std::uint64_t seed);

}  // namespace td13
