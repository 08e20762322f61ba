#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "td13/errors.hpp"
#include "td13/monomial.hpp"
#include "td13/polynomial.hpp"
#include "td13/torus.hpp"

namespace td13 {
namespace {

const TypeIndex kX{0, 0, 0};
const TypeIndex kY{1, 0, 1};

TEST(MonomialTest, HalfSteps) {
  const Monomial x = Monomial::var(kX);
  EXPECT_EQ(x.half_steps(kX.index()), 2);
  EXPECT_EQ(Monomial::half(kX) * Monomial::half(kX), x);
  EXPECT_EQ(x.to_string(), "x[0,0,0]");
  EXPECT_EQ(Monomial::half(kX).to_string(), "x[0,0,0]^(1/2)");
  EXPECT_EQ((x.pow(3) / Monomial::var(kY)).to_string(), "x[0,0,0]^3*x[1,0,1]^-1");
  EXPECT_TRUE(Monomial().is_one());
  EXPECT_FALSE((x / Monomial::var(kY)).is_ordinary());
}

TEST(MonomialTest, SymmetricMonomial) {
  const Monomial x = Monomial::var(kX);
  EXPECT_EQ(symmetric_monomial(x, x), x);
  EXPECT_EQ(symmetric_monomial(Monomial(), x), x.pow(2));
  EXPECT_EQ(symmetric_monomial(x, Monomial::half(kX)), Monomial());
}

TEST(MonomialTest, PowOverflowThrows) {
  EXPECT_THROW(Monomial::var(kX, 1 << 20).pow(1 << 12), std::overflow_error);
}

TEST(MonomialTest, CanonicalOrder) {
  const Monomial x = Monomial::var(kX);
  const Monomial y = Monomial::var(kY);
  CanonicalOrder less;
  EXPECT_TRUE(less(x * y, x));
  EXPECT_TRUE(less(x, Monomial()));
  EXPECT_TRUE(less(x, y));  // x[0,0,0] has the larger leading exponent
}

TEST(PolynomialTest, ParsePrintRoundTrip) {
  for (const char* text : {"0", "1", "-3", "x[0,0,0]", "x[0,0,0] + 1", "2*x[0,0,0]^2 - x[1,0,1]",
                           "x[0,0,0]*x[1,0,1]*x[1,0,2] + 2*x[0,0,0]*x[1,0,1] + x[0,0,0]",
                           "-x[0,1,2]^(3/2) + x[0,0,0]^-1"}) {
    EXPECT_EQ(Polynomial::parse(text).to_string(), text);
  }
  EXPECT_EQ(Polynomial::parse("1 + x[0,0,0]").to_string(), "x[0,0,0] + 1");
  EXPECT_EQ(Polynomial::parse("x[0,0,0] - x[0,0,0]").to_string(), "0");
}

TEST(PolynomialTest, ParseErrors) {
  for (const char* text : {"", "x", "x[0,0]", "x[2,0,0]", "x[0,0,3]", "2*", "x[0,0,0] +",
                           "x[0,0,0]^", "y0", "x[0,0,0]^(1/3)"}) {
    EXPECT_THROW(Polynomial::parse(text), ParseError) << text;
  }
}

TEST(PolynomialTest, Arithmetic) {
  const Polynomial x = Polynomial::parse("x[0,0,0]");
  const Polynomial one(1);
  EXPECT_EQ(((x + one) * (x - one)).to_string(), "x[0,0,0]^2 - 1");
  EXPECT_EQ((x * 3).coeff(Monomial::var(kX)), 3);
  EXPECT_EQ((-x).to_string(), "-x[0,0,0]");
  EXPECT_EQ(exact_multiple(x * 4 + one * 4, x + one), 4);
  EXPECT_EQ(exact_multiple(Polynomial(), x), 0);
  EXPECT_FALSE(exact_multiple(x + one * 2, x + one).has_value());
}

TEST(PolynomialTest, Evaluate) {
  TorusPoint p;
  p.theta[kX.index()] = std::numbers::pi / 2;
  EXPECT_NEAR(std::abs(Polynomial(1).evaluate(p) - std::complex<double>(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(Monomial::var(kX).evaluate(p) - std::complex<double>(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(Monomial::half(kX).evaluate(p) - std::polar(1.0, std::numbers::pi / 4)),
              0.0, 1e-12);
}

TEST(TorusTest, Deterministic) {
  const auto a = sample_torus(42);
  const auto b = sample_torus(42);
  const auto c = sample_torus(43);
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_NE(a.theta, c.theta);
  for (double t : a.theta) {
    EXPECT_GE(t, -std::numbers::pi);
    EXPECT_LT(t, std::numbers::pi);
  }
  EXPECT_NE(next_seed(1), 1u);
}

}  // namespace
}  // namespace td13
