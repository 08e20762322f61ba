#pragma once

// Monomials over the 12 torus variables x[q,r,s]. Exponents are stored in
// half steps so that square roots of variables can be represented: a stored
// 2 is x^1, a stored 1 is x^(1/2).

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "td13/encoding.hpp"
#include "td13/torus.hpp"

namespace td13 {

class Monomial {
 public:
  static constexpr int kVars = TypeIndex::kCount;
  using Exponents = std::array<std::int32_t, kVars>;

  Monomial() = default;

  static Monomial var(TypeIndex t, std::int32_t power = 1);
  /// sqrt(x_t)
  static Monomial half(TypeIndex t);
  static Monomial from_half_steps(const Exponents& e) { return Monomial(e); }

  const Exponents& half_steps() const { return e_; }
  std::int32_t half_steps(int i) const { return e_[i]; }
  std::int64_t total_half_steps() const;

  /// Whole-variable total degree; half steps round towards zero.
  std::int64_t degree() const { return total_half_steps() / 2; }

  /// All exponents whole and non-negative.
  bool is_ordinary() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial pow(std::int32_t k) const;

  std::complex<double> evaluate(const TorusPoint& x) const;

  /// "x[0,0,0]^2*x[1,0,1]", "1" for the unit monomial.
  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  explicit Monomial(const Exponents& e) : e_(e) {}
  Exponents e_{};
};

/// M^2 / L.
Monomial symmetric_monomial(const Monomial& L, const Monomial& M);

/// Canonical term order: higher total degree first, then lexicographically
/// larger exponent vectors first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_half_steps();
    const auto db = b.total_half_steps();
    if (da != db) return da > db;
    return a.half_steps() > b.half_steps();
  }
};

}  // namespace td13
