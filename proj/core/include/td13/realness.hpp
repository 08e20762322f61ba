#pragma once

// Numeric realness tests on random torus points. These are the independent
// counterparts of the exact palindromicity predicates.

#include <cstdint>

#include "td13/polynomial.hpp"

namespace td13 {

struct RealnessOptions {
  int samples = 1000;
  double tol = 1e-9;
  std::uint64_t seed = 0x5eed;
};

/// |Im(P conj(D))| <= tol |P| |D| at every sample, with D = M.
bool numerically_real_over_monomial(const Polynomial& P, const Monomial& M,
                                    const RealnessOptions& opt = {});

/// Same with D = M (1 - x_{i1}^{-1}).
bool numerically_real_over_binomial(const Polynomial& P, const Monomial& M, TypeIndex i1,
                                    const RealnessOptions& opt = {});

}  // namespace td13
