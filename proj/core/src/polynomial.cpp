#include "td13/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "td13/errors.hpp"

namespace td13 {

namespace {

using Coeff = Polynomial::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Polynomial run() {
    Polynomial p;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Coeff sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      auto [c, m] = term();
      p.add_term(m, checked_mul(sign, c));
      first = false;
      skip();
    }
    return p;
  }

 private:
  std::pair<Coeff, Monomial> term() {
    Coeff c = 1;
    Monomial m;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = integer();
      skip();
      if (peek() != '*') return {c, m};
      get();
      skip();
    }
    for (;;) {
      m = m * factor();
      have_factor = true;
      skip();
      if (peek() != '*') break;
      get();
      skip();
    }
    if (!have_factor) fail("expected a term");
    return {c, m};
  }

  Monomial factor() {
    expect('x');
    expect('[');
    const Coeff q = integer();
    expect(',');
    const Coeff r = integer();
    expect(',');
    const Coeff s = integer();
    expect(']');
    if (q > 1 || r > 1 || s > 2) fail("variable index out of range");
    const TypeIndex t{static_cast<std::uint8_t>(q), static_cast<std::uint8_t>(r),
                      static_cast<std::uint8_t>(s)};
    Monomial::Exponents e{};
    e[t.index()] = 2;
    if (peek() == '^') {
      get();
      if (peek() == '(') {
        get();
        const Coeff num = signed_integer();
        expect('/');
        if (integer() != 2) fail("only half-step fractions n/2 are allowed");
        expect(')');
        e[t.index()] = static_cast<std::int32_t>(num);
      } else {
        e[t.index()] = static_cast<std::int32_t>(checked_mul(signed_integer(), 2));
      }
    }
    return Monomial::from_half_steps(e);
  }

  Coeff signed_integer() {
    if (peek() == '-') {
      get();
      return -integer();
    }
    return integer();
  }

  Coeff integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    Coeff v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked_add(checked_mul(v, 10), get() - '0');
    }
    return v;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial text at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial::Polynomial(Coeff c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Monomial& m, Coeff c) {
  if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).run(); }

Coeff Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

Polynomial& Polynomial::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = checked_mul(v, c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Monomial& m) {
  Terms out;
  for (const auto& [k, v] : terms_) out.emplace(k * m, v);
  terms_ = std::move(out);
  return *this;
}

Polynomial Polynomial::operator-() const { return Polynomial(*this) * Coeff{-1}; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, checked_mul(ca, cb));
  }
  return out;
}

std::complex<double> Polynomial::evaluate(const TorusPoint& x) const {
  std::complex<double> s = 0.0;
  for (const auto& [m, c] : terms_) s += static_cast<double>(c) * m.evaluate(x);
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += m.to_string();
    }
    first = false;
  }
  return out;
}

std::optional<Coeff> exact_multiple(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_multiple: zero divisor");
  if (a.is_zero()) return Coeff{0};
  if (a.size() != b.size()) return std::nullopt;
  const auto& [m0, c0] = *b.terms().begin();
  const Coeff ac = a.coeff(m0);
  if (ac % c0 != 0) return std::nullopt;
  const Coeff k = ac / c0;
  if (k == 0 || b * k != a) return std::nullopt;
  return k;
}

}  // namespace td13
