#pragma once

// Trivariate collapse x[q,r,s] -> y_s and the ascending block structure.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "td13/polynomial.hpp"
#include "td13/psi.hpp"

namespace td13 {

struct TrivariatePoly {
  using Exponents = std::array<std::int32_t, 3>;
  std::map<Exponents, std::int64_t> coeffs;

  void add_term(const Exponents& e, std::int64_t c);
  bool is_zero() const { return coeffs.empty(); }
  /// "y0^2*y1 + 3*y2", "0" when empty.
  std::string to_string() const;

  bool operator==(const TrivariatePoly&) const = default;
};

/// Throws std::invalid_argument on half-step exponents.
TrivariatePoly collapse(const Polynomial& p);
TrivariatePoly collapse(const VertexPoly& p);

/// Nonnegative coefficients, one monomial per total degree, and every pair
/// of consecutive monomials N < N' has N'/N = y_j y_{j+1}^k (k >= 0, indices
/// mod 3) where j advances by exactly one from one pair to the next.
/// Zero and constants count as ascending.
bool is_ascending(const TrivariatePoly& p);

/// True iff p can be written as
///   sum_{j=1..m} prod_{i<j} y_{v(i)}^{a_i} (b_{j,0} y_{v(j)}^{a_j-1} + b_{j,1} y_{v(j)}^{a_j})
/// with v(j) = (j + r) mod 3 for some r, a_j >= 1, b >= 0, b_{m,1} > 0,
/// a_j = 1 iff (b_{j-1,1} > 0 and b_{j,0} = 0) for j >= 2, and b_{j,0} > 0
/// whenever a_j > 1 and j < m. Zero and constants count. Stricter than
/// is_ascending: 1 + y0 y1 passes the ratio scan but has no such form.
bool admits_block_representation(const TrivariatePoly& p);

}  // namespace td13
