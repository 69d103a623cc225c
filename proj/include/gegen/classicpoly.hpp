#pragma once

#include <vector>

#include "gegen/exactnum.hpp"
#include "gegen/poly.hpp"

namespace gegen {

/// B_0..B_N from sum_{k=0}^{n} binom(n+1, k) B_k = 0 (n >= 1), B_0 = 1.
struct BernoulliCache {
  std::vector<Rational> numbers;
};

/// E_0..E_N with E_n = E_n(0): sum_k binom(n, k) E_k + E_n = 0 for n >= 1, E_0 = 1.
/// These are the rational values at 0 (E_1 = -1/2), not the integer secant numbers.
struct EulerCache {
  std::vector<Rational> numbers;
};

BernoulliCache bernoulli_numbers(unsigned N);
EulerCache euler_numbers(unsigned N);

/// B_n(x) = sum_l binom(n, l) B_{n-l} x^l.
Poly bernoulli_poly(unsigned n);
Poly bernoulli_poly(unsigned n, const BernoulliCache& cache);

/// E_n(x) = sum_l binom(n, l) E_{n-l} x^l.
Poly euler_poly(unsigned n);
Poly euler_poly(unsigned n, const EulerCache& cache);

}  // namespace gegen
