#include "td13/realness.hpp"

#include <cmath>
#include <functional>

namespace td13 {

namespace {

bool real_everywhere(const Polynomial& P, const RealnessOptions& opt,
                     const std::function<std::complex<double>(const TorusPoint&)>& denom) {
  std::uint64_t seed = opt.seed;
  for (int i = 0; i < opt.samples; ++i) {
    const TorusPoint x = sample_torus(seed);
    seed = next_seed(seed);
    const auto p = P.evaluate(x);
    const auto d = denom(x);
    const double scale = std::abs(p) * std::abs(d);
    if (std::abs((p * std::conj(d)).imag()) > opt.tol * std::max(scale, 1.0)) return false;
  }
  return true;
}

}  // namespace

bool numerically_real_over_monomial(const Polynomial& P, const Monomial& M,
                                    const RealnessOptions& opt) {
  return real_everywhere(P, opt, [&](const TorusPoint& x) { return M.evaluate(x); });
}

bool numerically_real_over_binomial(const Polynomial& P, const Monomial& M, TypeIndex i1,
                                    const RealnessOptions& opt) {
  return real_everywhere(P, opt, [&](const TorusPoint& x) {
    return M.evaluate(x) * (1.0 - 1.0 / x.value(i1));
  });
}

}  // namespace td13
