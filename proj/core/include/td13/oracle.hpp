#pragma once

// Coordinates of a truncation of T* by gluing rotated copies of the unit
// rhombus, independent of the closed-form polynomial.

#include <complex>
#include <unordered_map>
#include <vector>

#include "td13/torus.hpp"
#include "td13/truncation.hpp"

namespace td13 {

class GeometricOracle {
 public:
  GeometricOracle(int depth, SConvention conv) : t_(depth, conv) {}

  const Truncation& truncation() const { return t_; }

  /// Coordinates indexed like truncation().vertices().
  std::vector<std::complex<double>> evaluate_indexed(const TorusPoint& x) const;

  std::unordered_map<VertexLabel, std::complex<double>> evaluate(const TorusPoint& x) const;

 private:
  Truncation t_;
};

}  // namespace td13
