#pragma once

// Exhaustive incidence classification over a truncation of T*.

#include <cstdint>
#include <vector>

#include "td13/incidence.hpp"

namespace td13 {

struct CertificateOptions {
  SConvention conv = SConvention::anchored;
  int samples = 100;  // torus points for the numeric cross-check
  std::uint64_t seed = 0xc0ffee;
  double tol = 1e-9;
  std::size_t max_examples = 16;
};

struct CertificateExample {
  VertexLabel v = VertexLabel::root_base();
  VertexLabel u = VertexLabel::root_base();
  VertexLabel w = VertexLabel::root_base();
  IncidenceVerdict verdict;
  /// Fraction of samples at which the numeric ratio was real and in (0, 1).
  double interior_fraction = 0.0;
};

struct CertificateReport {
  int depth = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t pairs = 0;
  std::size_t non_real = 0;
  std::size_t integer_offsets = 0;
  std::size_t diagonal_offsets = 0;
  std::size_t real_non_lattice = 0;
  std::size_t numeric_checked = 0;   // offset pairs times samples
  std::size_t numeric_failures = 0;  // samples off the predicted lattice point
  std::size_t witnessed_interior = 0;  // real_non_lattice pairs seen inside the edge
  std::vector<CertificateExample> examples;  // first offenders, in vertex order

  bool ok() const { return real_non_lattice == 0 && numeric_failures == 0; }
};

/// Classifies every (vertex, edge) pair of the truncation, endpoints
/// included, and checks each offset verdict numerically.
CertificateReport symbolic_certificate(int depth, const CertificateOptions& opt = {});

}  // namespace td13
