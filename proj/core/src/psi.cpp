#include "td13/psi.hpp"

namespace td13 {

std::vector<Monomial> p_chain(const QrCode& code, SConvention conv) {
  const auto types = prefix_types(code, conv);
  std::vector<Monomial> chain;
  chain.reserve(code.m() + 1);
  chain.emplace_back();
  for (std::size_t i = 1; i <= code.m(); ++i) {
    chain.push_back(chain.back() * Monomial::var(types[i - 1]));
  }
  return chain;
}

Polynomial VertexPoly::to_polynomial() const {
  Polynomial out;
  for (const auto& t : terms) out.add_term(t.p, t.c);
  return out;
}

std::complex<double> VertexPoly::evaluate(const TorusPoint& x) const {
  std::complex<double> s = 0.0;
  for (const auto& t : terms) {
    if (t.c != 0) s += static_cast<double>(t.c) * t.p.evaluate(x);
  }
  return s;
}

VertexPoly psi_of_vertex(const VertexLabel& v, SConvention conv) {
  const QrCode code = qr_encode(proper_node_of(v));
  const auto chain = p_chain(code, conv);
  VertexPoly out;
  out.terms.reserve(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const std::int64_t c = static_cast<std::int64_t>(code.q_at(i)) + code.rho_at(i + 1);
    out.terms.push_back(VertexTerm{c, chain[i]});
  }
  return out;
}

}  // namespace td13
