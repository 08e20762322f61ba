#pragma once

// The embedding of T* vertices as integer polynomials in the torus variables.

#include <complex>
#include <cstdint>
#include <vector>

#include "td13/encoding.hpp"
#include "td13/polynomial.hpp"

namespace td13 {

/// P_0 = 1 and P_i = P_{i-1} * x_{Ty(N_{i-1})}, where N_{i-1} is the node of
/// the first i-1 turns of `code`. Returns P_0..P_m.
std::vector<Monomial> p_chain(const QrCode& code, SConvention conv);

struct VertexTerm {
  std::int64_t c = 0;
  Monomial p;
};

/// sum_i c_i P_i with one entry per total degree 0..m; zero coefficients kept.
struct VertexPoly {
  std::vector<VertexTerm> terms;

  Polynomial to_polynomial() const;
  std::complex<double> evaluate(const TorusPoint& x) const;
};

/// Built from the proper encoding of v with c_i = q_i + rho_{i+1}.
VertexPoly psi_of_vertex(const VertexLabel& v, SConvention conv);

inline std::complex<double> evaluate(const VertexPoly& p, const TorusPoint& x) {
  return p.evaluate(x);
}
inline std::complex<double> evaluate(const Polynomial& p, const TorusPoint& x) {
  return p.evaluate(x);
}
inline std::complex<double> evaluate(const Monomial& m, const TorusPoint& x) {
  return m.evaluate(x);
}

}  // namespace td13
