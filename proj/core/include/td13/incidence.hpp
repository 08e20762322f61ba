#pragma once

// Symbolic classification of a vertex against a T* edge.

#include <cstdint>
#include <optional>
#include <string>

#include "td13/encoding.hpp"
#include "td13/polynomial.hpp"
#include "td13/truncation.hpp"

namespace td13 {

enum class VerdictKind {
  non_real_ratio,
  integer_offset,   // side edge, psi(v) = psi(base) + k (psi(tip) - psi(base))
  diagonal_offset,  // diagonal, same relation
  real_non_lattice  // the ratio is real on the torus but not a constant
};

std::string_view to_string(VerdictKind k);

struct IncidenceVerdict {
  VerdictKind kind = VerdictKind::non_real_ratio;
  std::int64_t k = 0;

  bool is_offset() const {
    return kind == VerdictKind::integer_offset || kind == VerdictKind::diagonal_offset;
  }
  /// "NON_REAL_RATIO", "INTEGER_OFFSET(2)", ...
  std::string to_string() const;
  bool operator==(const IncidenceVerdict&) const = default;
};

/// The exact shape of psi along one T* edge. For a side the base is the
/// endpoint given second and delta = +-M. For a diagonal the base is the
/// apex (v2 corner) and delta = +-M (1 - x_var^{-1}).
struct EdgeGeometry {
  EdgeRole role = EdgeRole::side;
  VertexLabel base = VertexLabel::root_base();
  VertexLabel tip = VertexLabel::root_tip();
  Polynomial psi_base;
  Polynomial delta;  // psi(tip) - psi(base)
  Monomial M;
  TypeIndex var{};   // diagonals only
};

/// Throws NotAnEdge, or std::logic_error if psi along the edge is not of the
/// form +-M or +-M (1 - x_i^{-1}).
EdgeGeometry edge_geometry(const VertexLabel& u, const VertexLabel& w, const Polynomial& psi_u,
                           const Polynomial& psi_w, SConvention conv);
EdgeGeometry edge_geometry(const VertexLabel& u, const VertexLabel& w, SConvention conv);

/// The edge length up to the drawing scale: nullopt for 1, otherwise the
/// variable i with length |x_i - 1|.
std::optional<TypeIndex> symbolic_edge_length(const VertexLabel& u, const VertexLabel& w,
                                              SConvention conv);

IncidenceVerdict classify(const Polynomial& psi_v, const EdgeGeometry& edge);

/// Throws NotAnEdge if (u, w) is not a T* edge.
IncidenceVerdict classify_incidence(const VertexLabel& v, const VertexLabel& u,
                                    const VertexLabel& w, SConvention conv);

}  // namespace td13
