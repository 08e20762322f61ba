#pragma once

// From a user outerplanar graph to coordinates: validate, triangulate, map
// into T*, sample a torus point, evaluate and scale.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "td13/drawing.hpp"
#include "td13/truncation.hpp"

namespace td13 {

/// Vertices 0..n-1, listed around the outer face in outer_order.
struct PlaneGraphInput {
  int n = 0;
  std::vector<int> outer_order;
  std::vector<std::pair<int, int>> edges;
};

/// Returns the graph with each edge as (min, max), sorted.
/// Throws BadOrder, DuplicateEdge, InputError or CrossingChords.
PlaneGraphInput validate_input(const PlaneGraphInput& g);

/// Adds the outer cycle and fans every chord-bounded face from its lowest
/// vertex index. Throws TooSmall for n < 3.
PlaneGraphInput triangulate(const PlaneGraphInput& g);

/// Labels of a maximal outerplanar graph, base_edge.first -> "0",
/// base_edge.second -> "01". Throws BaseEdgeNotOnOuterFace.
std::vector<VertexLabel> map_to_tstar(const PlaneGraphInput& maximal,
                                      std::pair<int, int> base_edge);

struct DrawOptions {
  std::uint64_t seed = 1;
  double scale = 0.5;
  int retries = 5;  // total attempts
  Tolerances tol;
  SConvention conv = SConvention::anchored;
  std::optional<std::pair<int, int>> base_edge;
  bool keep_augmented = false;
  bool validate = true;
};

/// Throws RetryBudgetExhausted when no attempt passes the separation checks.
Drawing draw(const PlaneGraphInput& g, const DrawOptions& opt);

/// Draws the vertices and edges of a truncation of T*.
Drawing draw_truncation(const Truncation& t, const DrawOptions& opt);

}  // namespace td13
