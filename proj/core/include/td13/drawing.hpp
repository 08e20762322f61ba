#pragma once

// A finished drawing and the thresholds it is checked against.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "td13/encoding.hpp"
#include "td13/torus.hpp"

namespace td13 {

struct Tolerances {
  double vertex_gap = 1e-6;
  double vertex_edge_gap = 1e-6;
  double length_cluster = 1e-9;
  double length_match = 1e-9;
  double coordinate = 1e-9;
};

/// One cluster of edge lengths and the predicted value it matched.
struct LengthClass {
  double value = 0.0;      // smallest length in the cluster
  double predicted = 0.0;  // a or a|x_var - 1|
  std::optional<TypeIndex> var;
  std::size_t count = 0;

  /// "a" or "a|x[q,r,s]-1|"
  std::string name() const;
};

using Edge = std::pair<std::size_t, std::size_t>;

struct Drawing {
  std::vector<std::complex<double>> coords;
  std::vector<VertexLabel> labels;
  std::vector<Edge> edges;
  std::vector<int> edge_class;  // index into classes, per edge
  std::vector<LengthClass> classes;
  TorusPoint x;
  double scale = 0.5;
  std::uint64_t seed = 0;  // requested seed; x.seed is the one that was used
  int attempts = 1;
  SConvention conv = SConvention::anchored;
  std::optional<Edge> base_edge;
};

}  // namespace td13
