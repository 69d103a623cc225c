#include "gegen/classicpoly.hpp"

namespace gegen {

namespace {

Rational R(unsigned v) { return Rational(static_cast<long>(v)); }

// sum_l binom(n, l) a_{n-l} x^l
Poly umbral(unsigned n, const std::vector<Rational>& a) {
  std::vector<Rational> c(n + 1);
  for (unsigned l = 0; l <= n; ++l) c[l] = binom_rational(R(n), l) * a[n - l];
  return Poly(std::move(c));
}

}  // namespace

BernoulliCache bernoulli_numbers(unsigned N) {
  BernoulliCache cache;
  cache.numbers.reserve(N + 1);
  cache.numbers.push_back(Rational(1));
  for (unsigned n = 1; n <= N; ++n) {
    Rational s;
    for (unsigned k = 0; k < n; ++k) s += binom_rational(R(n + 1), k) * cache.numbers[k];
    cache.numbers.push_back(-s / R(n + 1));
  }
  return cache;
}

EulerCache euler_numbers(unsigned N) {
  EulerCache cache;
  cache.numbers.reserve(N + 1);
  cache.numbers.push_back(Rational(1));
  for (unsigned n = 1; n <= N; ++n) {
    Rational s;
    for (unsigned k = 0; k < n; ++k) s += binom_rational(R(n), k) * cache.numbers[k];
    cache.numbers.push_back(-s / Rational(2));
  }
  return cache;
}

Poly bernoulli_poly(unsigned n, const BernoulliCache& cache) {
  if (cache.numbers.size() <= n) return bernoulli_poly(n);
  return umbral(n, cache.numbers);
}

Poly bernoulli_poly(unsigned n) { return umbral(n, bernoulli_numbers(n).numbers); }

Poly euler_poly(unsigned n, const EulerCache& cache) {
  if (cache.numbers.size() <= n) return euler_poly(n);
  return umbral(n, cache.numbers);
}

Poly euler_poly(unsigned n) { return umbral(n, euler_numbers(n).numbers); }

}  // namespace gegen
