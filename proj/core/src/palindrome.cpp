#include "td13/palindrome.hpp"

namespace td13 {

namespace {

bool paired(const Polynomial& P, const Monomial& center, Polynomial::Coeff sign) {
  for (const auto& [L, c] : P.terms()) {
    if (P.coeff(center / L) != sign * c) return false;
  }
  return true;
}

}  // namespace

bool is_palindromic_over_monomial(const Polynomial& P, const Monomial& M) {
  return paired(P, M * M, 1);
}

bool is_antipalindromic_over_binomial(const Polynomial& P, const Monomial& M, TypeIndex i1) {
  return paired(P, M * M / Monomial::var(i1), -1);
}

}  // namespace td13
