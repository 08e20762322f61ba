#include "td13/incidence.hpp"

#include <stdexcept>

#include "td13/errors.hpp"
#include "td13/palindrome.hpp"
#include "td13/psi.hpp"

namespace td13 {

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::non_real_ratio: return "NON_REAL_RATIO";
    case VerdictKind::integer_offset: return "INTEGER_OFFSET";
    case VerdictKind::diagonal_offset: return "DIAGONAL_OFFSET";
    case VerdictKind::real_non_lattice: return "REAL_NON_LATTICE";
  }
  return "?";
}

std::string IncidenceVerdict::to_string() const {
  std::string out(td13::to_string(kind));
  if (is_offset()) out += "(" + std::to_string(k) + ")";
  return out;
}

EdgeGeometry edge_geometry(const VertexLabel& u, const VertexLabel& w, const Polynomial& psi_u,
                           const Polynomial& psi_w, SConvention conv) {
  const EdgeInfo info = edge_info(u, w, conv);
  EdgeGeometry g;
  g.role = info.role;
  const bool apex_is_u = info.role == EdgeRole::diagonal && info.apex == u;
  g.base = apex_is_u ? u : w;
  g.tip = apex_is_u ? w : u;
  g.psi_base = apex_is_u ? psi_u : psi_w;
  g.delta = (apex_is_u ? psi_w : psi_u) - g.psi_base;
  auto bad = [&] {
    return std::logic_error("psi along edge (" + u.bits() + ", " + w.bits() + ") is " +
                            g.delta.to_string());
  };
  if (info.role == EdgeRole::side) {
    if (g.delta.size() != 1) throw bad();
    const auto& [m, c] = *g.delta.terms().begin();
    if (c != 1 && c != -1) throw bad();
    g.M = m;
    return g;
  }
  g.var = info.type;
  if (g.delta.size() != 2) throw bad();
  // Canonical order puts the higher-degree term, +-M, first.
  const auto& [m, c] = *g.delta.terms().begin();
  g.M = m;
  if ((c != 1 && c != -1) || g.delta.coeff(m / Monomial::var(g.var)) != -c) throw bad();
  return g;
}

EdgeGeometry edge_geometry(const VertexLabel& u, const VertexLabel& w, SConvention conv) {
  if (!is_tstar_edge(u, w)) {
    throw NotAnEdge("(" + u.bits() + ", " + w.bits() + ") is not an edge of T*");
  }
  return edge_geometry(u, w, psi_of_vertex(u, conv).to_polynomial(),
                       psi_of_vertex(w, conv).to_polynomial(), conv);
}

std::optional<TypeIndex> symbolic_edge_length(const VertexLabel& u, const VertexLabel& w,
                                              SConvention conv) {
  const EdgeGeometry g = edge_geometry(u, w, conv);
  if (g.role == EdgeRole::side) return std::nullopt;
  return g.var;
}

IncidenceVerdict classify(const Polynomial& psi_v, const EdgeGeometry& edge) {
  const Polynomial q = psi_v - edge.psi_base;
  const bool side = edge.role == EdgeRole::side;
  const VerdictKind offset = side ? VerdictKind::integer_offset : VerdictKind::diagonal_offset;
  if (q.is_zero()) return {offset, 0};
  const bool real = side ? is_palindromic_over_monomial(q, edge.M)
                         : is_antipalindromic_over_binomial(q, edge.M, edge.var);
  if (!real) return {VerdictKind::non_real_ratio, 0};
  if (auto k = exact_multiple(q, edge.delta)) return {offset, *k};
  return {VerdictKind::real_non_lattice, 0};
}

IncidenceVerdict classify_incidence(const VertexLabel& v, const VertexLabel& u,
                                    const VertexLabel& w, SConvention conv) {
  const EdgeGeometry g = edge_geometry(u, w, conv);
  return classify(psi_of_vertex(v, conv).to_polynomial(), g);
}

}  // namespace td13
