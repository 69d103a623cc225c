#include <doctest.h>

#include "gegen/classicpoly.hpp"

using gegen::Poly;
using gegen::Rational;

TEST_CASE("Bernoulli numbers") {
  const auto b = gegen::bernoulli_numbers(20).numbers;
  CHECK(b[0] == Rational(1));
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[3] == Rational(0));
  CHECK(b[20] == Rational(-174611, 330));
  for (unsigned m = 1; 2 * m + 1 <= 20; ++m) CHECK(b[2 * m + 1].is_zero());
  for (unsigned n = 1; n <= 20; ++n) {
    Rational s;
    for (unsigned k = 0; k <= n; ++k) s += gegen::binom_rational(Rational(long(n + 1)), k) * b[k];
    CHECK(s.is_zero());
  }
}

TEST_CASE("Euler numbers at zero") {
  const auto e = gegen::euler_numbers(20).numbers;
  CHECK(e[0] == Rational(1));
  CHECK(e[1] == Rational(-1, 2));
  CHECK(e[2] == Rational(0));
  CHECK(e[11] == Rational(691, 4));
  for (unsigned n = 1; n <= 20; ++n) {
    Rational s = e[n];
    for (unsigned k = 0; k <= n; ++k) s += gegen::binom_rational(Rational(long(n)), k) * e[k];
    CHECK(s.is_zero());
  }
}

TEST_CASE("Bernoulli and Euler polynomial examples") {
  CHECK(gegen::bernoulli_poly(0) == Poly::constant(Rational(1)));
  CHECK(gegen::bernoulli_poly(1) == Poly{Rational(-1, 2), Rational(1)});
  CHECK(gegen::bernoulli_poly(2) == Poly{Rational(1, 6), Rational(-1), Rational(1)});
  CHECK(gegen::euler_poly(1) == Poly{Rational(-1, 2), Rational(1)});
  CHECK(gegen::euler_poly(2) == Poly{Rational(0), Rational(-1), Rational(1)});
  const auto cache = gegen::bernoulli_numbers(3);
  CHECK(gegen::bernoulli_poly(6, cache) == gegen::bernoulli_poly(6));
}

TEST_CASE("difference and derivative identities, n <= 20") {
  const auto bc = gegen::bernoulli_numbers(20);
  const auto ec = gegen::euler_numbers(20);
  for (unsigned n = 1; n <= 20; ++n) {
    const Poly bn = gegen::bernoulli_poly(n, bc);
    const Poly en = gegen::euler_poly(n, ec);
    CHECK(gegen::compose_affine(bn, Rational(1), Rational(1)) - bn == Poly::monomial(n - 1, Rational(long(n))));
    CHECK(gegen::compose_affine(en, Rational(1), Rational(1)) + en == Poly::monomial(n, Rational(2)));
    CHECK(gegen::differentiate(bn) == gegen::bernoulli_poly(n - 1, bc) * Rational(long(n)));
    CHECK(gegen::differentiate(en) == gegen::euler_poly(n - 1, ec) * Rational(long(n)));
  }
}
