#pragma once

// Numeric checks of a drawing: distinct vertices, vertices off non-incident
// edges, and edge lengths drawn from the 13 predicted values.

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "td13/drawing.hpp"

namespace td13 {

struct VertexGap {
  bool ok = true;
  double gap = std::numeric_limits<double>::infinity();
  std::size_t a = 0, b = 0;  // closest pair
};

VertexGap check_distinct_vertices(const std::vector<std::complex<double>>& pts, double tol);

struct VertexEdgeGap {
  bool ok = true;
  double gap = std::numeric_limits<double>::infinity();
  std::size_t v = 0, u = 0, w = 0;  // closest vertex / edge pair
};

/// Distance from each vertex to every closed edge segment not incident to it.
VertexEdgeGap check_vertex_edge_separation(const std::vector<std::complex<double>>& pts,
                                           const std::vector<Edge>& edges, double tol);

/// a followed by a|x_i - 1| for the 12 type indices.
std::vector<LengthClass> predicted_lengths(double scale, const TorusPoint& x);

struct LengthClasses {
  std::vector<LengthClass> classes;  // sorted by value
  std::vector<int> edge_class;
};

/// Single-linkage clustering at radius cluster_tol, each cluster matched to a
/// predicted value within match_tol. Throws UnexpectedLength.
LengthClasses count_length_classes(const std::vector<double>& lengths, double scale,
                                   const TorusPoint& x, double cluster_tol, double match_tol);

struct Failure {
  std::string check;
  std::string message;
};

struct ValidationReport {
  double min_vertex_gap = std::numeric_limits<double>::infinity();
  double min_vertex_edge_gap = std::numeric_limits<double>::infinity();
  int n_length_classes = 0;
  std::vector<double> class_values;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

/// Runs every check, including that each coordinate equals a * psi(label)(x)
/// and that every edge is a T* edge.
ValidationReport validate_drawing(const Drawing& d, const Tolerances& tol);

}  // namespace td13
