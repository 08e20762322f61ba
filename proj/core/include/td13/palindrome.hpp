#pragma once

// Central palindromicity: exact coefficient-pairing tests whose truth is
// equivalent to a ratio being real on the whole torus.

#include "td13/polynomial.hpp"

namespace td13 {

/// coeff(L) == coeff(M^2 / L) for every monomial L of P.
bool is_palindromic_over_monomial(const Polynomial& P, const Monomial& M);

/// coeff(L) == -coeff(M^2 / (x_{i1} L)) for every monomial L of P, that is,
/// P / (M (1 - x_{i1}^{-1})) is real on the torus.
bool is_antipalindromic_over_binomial(const Polynomial& P, const Monomial& M, TypeIndex i1);

}  // namespace td13
