#include "td13/monomial.hpp"

#include <stdexcept>

namespace td13 {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int32_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
  return r;
}

std::int32_t checked_mul(std::int32_t a, std::int32_t b) {
  std::int32_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
  return r;
}

}  // namespace

Monomial Monomial::var(TypeIndex t, std::int32_t power) {
  Exponents e{};
  e[t.index()] = checked_mul(power, 2);
  return Monomial(e);
}

Monomial Monomial::half(TypeIndex t) {
  Exponents e{};
  e[t.index()] = 1;
  return Monomial(e);
}

std::int64_t Monomial::total_half_steps() const {
  std::int64_t s = 0;
  for (auto v : e_) s += v;
  return s;
}

bool Monomial::is_ordinary() const {
  for (auto v : e_) {
    if (v < 0 || v % 2 != 0) return false;
  }
  return true;
}

bool Monomial::is_one() const {
  for (auto v : e_) {
    if (v != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Exponents e;
  for (int i = 0; i < kVars; ++i) e[i] = checked_add(e_[i], o.e_[i]);
  return Monomial(e);
}

Monomial Monomial::operator/(const Monomial& o) const {
  Exponents e;
  for (int i = 0; i < kVars; ++i) e[i] = checked_add(e_[i], -o.e_[i]);
  return Monomial(e);
}

Monomial Monomial::pow(std::int32_t k) const {
  Exponents e;
  for (int i = 0; i < kVars; ++i) e[i] = checked_mul(e_[i], k);
  return Monomial(e);
}

std::complex<double> Monomial::evaluate(const TorusPoint& x) const {
  double angle = 0.0;
  for (int i = 0; i < kVars; ++i) {
    if (e_[i] != 0) angle += 0.5 * e_[i] * x.theta[i];
  }
  return std::polar(1.0, angle);
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kVars; ++i) {
    const std::int32_t h = e_[i];
    if (h == 0) continue;
    if (!out.empty()) out += '*';
    out += "x[" + TypeIndex::from_index(i).to_string() + "]";
    if (h % 2 != 0) {
      out += "^(" + std::to_string(h) + "/2)";
    } else if (h != 2) {
      out += "^" + std::to_string(h / 2);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial symmetric_monomial(const Monomial& L, const Monomial& M) { return M * M / L; }

}  // namespace td13
