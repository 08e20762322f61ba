#pragma once

// Sparse integer (Laurent) polynomials over the 12 torus variables.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "td13/monomial.hpp"

namespace td13 {

class Polynomial {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<Monomial, Coeff, CanonicalOrder>;

  Polynomial() = default;
  explicit Polynomial(Coeff c);
  explicit Polynomial(const Monomial& m, Coeff c = 1);

  /// Reads the canonical text form. Throws ParseError.
  static Polynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  Coeff coeff(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Arithmetic overflow throws std::overflow_error.
  void add_term(const Monomial& m, Coeff c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(Coeff c);
  Polynomial& operator*=(const Monomial& m);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Coeff c) { return a *= c; }
  friend Polynomial operator*(Polynomial a, const Monomial& m) { return a *= m; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  std::complex<double> evaluate(const TorusPoint& x) const;

  /// "x[0,0,0]^2*x[1,0,1] + 2*x[0,0,0]"; "0" for the zero polynomial.
  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;

 private:
  Terms terms_;
};

/// The integer k with a == k*b, if there is one. b must be nonzero.
std::optional<Polynomial::Coeff> exact_multiple(const Polynomial& a, const Polynomial& b);

}  // namespace td13
