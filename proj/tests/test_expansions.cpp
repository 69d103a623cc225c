#include <doctest.h>

#include <cmath>

#include "gegen/classicpoly.hpp"
#include "gegen/expansions.hpp"
#include "gegen/gegenbauer.hpp"
#include "gegen/verify.hpp"
#include "gegen/weightspace.hpp"
#include "oracle.hpp"

using gegen::Family;
using gegen::GegenParam;
using gegen::Poly;
using gegen::ProductVariant;
using gegen::Rational;
using gegen::Reading;
using gegen::SelfVariant;
using V = std::vector<Rational>;

namespace {

V R(std::initializer_list<std::pair<long, long>> v) {
  V out;
  for (auto [a, b] : v) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("monomial examples") {
  for (const auto& lam : oracle::lambda_grid()) {
    const GegenParam p(lam);
    CHECK(gegen::monomial_coeffs(p, 0).d == V{Rational(1)});
    CHECK(gegen::monomial_coeffs(p, 1).d == V{Rational(0), Rational(1) / (Rational(2) * lam)});
  }
  CHECK(gegen::monomial_coeffs(GegenParam(Rational(1)), 2).d == R({{1, 4}, {0, 1}, {1, 4}}));
  CHECK(gegen::monomial_coeffs(GegenParam(Rational(5, 2)), 6).d ==
        R({{5, 231}, {0, 1}, {18, 1001}, {0, 1}, {8, 1155}, {0, 1}, {16, 15015}}));
  CHECK(gegen::monomial_coeffs(GegenParam(Rational(1)), 2).method == gegen::Method::ClosedForm);
}

TEST_CASE("bernoulli and euler examples") {
  for (const auto& lam : oracle::lambda_grid()) {
    const GegenParam p(lam);
    const V n1{Rational(-1, 2), Rational(1) / (Rational(2) * lam)};
    CHECK(gegen::bernoulli_coeffs(p, 0).d == V{Rational(1)});
    CHECK(gegen::bernoulli_coeffs(p, 1).d == n1);
    CHECK(gegen::euler_coeffs(p, 0).d == V{Rational(1)});
    CHECK(gegen::euler_coeffs(p, 1).d == n1);
  }
  // Frozen from an independent CAS triangular solve.
  CHECK(gegen::bernoulli_coeffs(GegenParam(Rational(1)), 2).d == R({{5, 12}, {-1, 2}, {1, 4}}));
  CHECK(gegen::bernoulli_coeffs(GegenParam(Rational(1, 2)), 2).d == R({{1, 2}, {-1, 1}, {2, 3}}));
  CHECK(gegen::bernoulli_coeffs(GegenParam(Rational(3, 2)), 4).d ==
        R({{53, 210}, {-2, 7}, {2, 9}, {-4, 35}, {8, 315}}));
  CHECK(gegen::euler_coeffs(GegenParam(Rational(1)), 2).d == R({{1, 4}, {-1, 2}, {1, 4}}));
  CHECK(gegen::euler_coeffs(GegenParam(Rational(7, 3)), 5).d ==
        R({{-53, 208}, {405, 11648}, {9, 128}, {243, 13832}, {-243, 11648}, {729, 221312}}));
}

TEST_CASE("closed forms agree with the triangular solve and reconstruct their source") {
  auto grid = oracle::lambda_grid();
  grid.push_back(Rational(-1, 4));
  const auto bc = gegen::bernoulli_numbers(12);
  const auto ec = gegen::euler_numbers(12);
  for (const auto& lam : grid) {
    const GegenParam p(lam);
    for (unsigned n = 0; n <= 12; ++n) {
      CAPTURE(lam.str());
      CAPTURE(n);
      const auto m = gegen::monomial_coeffs(p, n);
      const auto b = gegen::bernoulli_coeffs(p, n);
      const auto e = gegen::euler_coeffs(p, n);
      CHECK(m.d == oracle::triangular_coeffs(Poly::monomial(n), lam, n));
      CHECK(b.d == oracle::triangular_coeffs(gegen::bernoulli_poly(n, bc), lam, n));
      CHECK(e.d == oracle::triangular_coeffs(gegen::euler_poly(n, ec), lam, n));
      CHECK(gegen::reconstruct(m) == Poly::monomial(n));
      CHECK(gegen::reconstruct(b) == gegen::bernoulli_poly(n, bc));
      CHECK(gegen::reconstruct(e) == gegen::euler_poly(n, ec));
    }
  }
}

TEST_CASE("product examples") {
  for (const auto& lam : oracle::lambda_grid())
    CHECK(gegen::product_coeffs(GegenParam(lam), 0, 0, ProductVariant::Corrected).d == V{Rational(1)});
  CHECK(gegen::product_coeffs(GegenParam(Rational(1)), 2, 1, ProductVariant::Corrected).d ==
        V{Rational(1), Rational(0), Rational(1)});
  CHECK(gegen::product_coeffs(GegenParam(Rational(1)), 0, 0, ProductVariant::AsPrinted).d == V{Rational(2)});
  CHECK(gegen::product_coeffs(GegenParam(Rational(3, 2)), 4, 1, ProductVariant::Corrected).d ==
        R({{0, 1}, {0, 1}, {5, 3}, {0, 1}, {4, 3}}));
  CHECK(gegen::product_coeffs(GegenParam(Rational(-1, 4)), 3, 1, ProductVariant::Corrected).d ==
        R({{0, 1}, {-1, 14}, {0, 1}, {-3, 7}}));
  CHECK_THROWS_AS(gegen::product_coeffs(GegenParam(Rational(1)), 2, 3, ProductVariant::Corrected),
                  gegen::InvalidPair);
  CHECK_THROWS_AS(gegen::product_coeffs(GegenParam(Rational(3, 2)), 2, 1, ProductVariant::AsPrinted),
                  gegen::NotExact);
}

TEST_CASE("product linearization: corrected is exact, as-printed is off by 2^lambda") {
  for (const auto& lam : oracle::lambda_grid()) {
    const GegenParam p(lam);
    const auto basis = gegen::gegen_basis(p, 10);
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        const auto c = gegen::product_coeffs(p, n, k, ProductVariant::Corrected);
        CHECK(gegen::reconstruct(c) == basis[n - k] * basis[k]);
        CHECK(c.d == gegen::product_coeffs(p, n, n - k, ProductVariant::Corrected).d);
        if (lam.is_integer()) {
          const auto printed = gegen::product_coeffs(p, n, k, ProductVariant::AsPrinted);
          const Rational two_pow = gegen::pow(Rational(2), lam.numerator().get_si());
          for (std::size_t r = 0; r < c.d.size(); ++r) CHECK(printed.d[r] == two_pow * c.d[r]);
        } else {
          const auto f = gegen::product_coeffs_scaled(p, n, k, ProductVariant::AsPrinted);
          const double two_pow = std::pow(2.0, lam.to_double());
          for (std::size_t r = 0; r < c.d.size(); ++r) {
            if (c.d[r].is_zero()) CHECK(f[r] == 0.0);
            else CHECK(f[r] == doctest::Approx(two_pow * c.d[r].to_double()).epsilon(1e-14));
          }
        }
      }
  }
}

TEST_CASE("extended-precision product for real lambda") {
  // Alternating sums: absolute error grows with n, so only small n is checked tightly.
  for (const auto& lam : oracle::lambda_grid())
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        const auto c = gegen::product_coeffs(GegenParam(lam), n, k, ProductVariant::Corrected);
        const auto f = gegen::product_coeffs_f64(lam.to_double(), n, k, ProductVariant::Corrected);
        for (std::size_t r = 0; r < c.d.size(); ++r) CHECK(std::abs(f[r] - c.d[r].to_double()) <= 1e-12);
      }
  CHECK_THROWS_AS(gegen::product_coeffs_f64(-0.5, 2, 1, ProductVariant::Corrected), gegen::InvalidWeight);
  CHECK_THROWS_AS(gegen::product_coeffs_f64(0.0, 2, 1, ProductVariant::Corrected), gegen::InvalidParameter);
}

TEST_CASE("self-connection examples") {
  for (const auto& lam : oracle::lambda_grid()) {
    const GegenParam p(lam);
    for (unsigned n = 0; n <= 6; ++n) {
      const auto d = gegen::self_connection_coeffs(p, n, SelfVariant::OracleDelta);
      for (unsigned k = 0; k <= n; ++k) CHECK(d.d[k] == Rational(k == n ? 1 : 0));
      CHECK(d.d == gegen::project(gegen::gegen_explicit(p, n).poly, p).d);
    }
    CHECK(gegen::self_connection_coeffs(p, 0, SelfVariant::AsPrinted).d == V{Rational(2) * lam});
  }
  CHECK(gegen::self_connection_coeffs(GegenParam(Rational(1, 2)), 0, SelfVariant::AsPrinted).d == V{Rational(1)});
}

TEST_CASE("family_source") {
  const GegenParam p(Rational(1));
  CHECK(gegen::family_source(Family::Monomial, p, 3) == Poly::monomial(3));
  CHECK(gegen::family_source(Family::Bernoulli, p, 2) == gegen::bernoulli_poly(2));
  CHECK(gegen::family_source(Family::Product, p, 2, 1) == Poly::monomial(2, Rational(4)));
  CHECK(gegen::family_source(Family::SelfConnection, p, 2) == gegen::gegen_explicit(p, 2).poly);
}

TEST_CASE("verify_family examples") {
  const std::vector<Rational> grid5{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(7, 3)};
  const auto mono = gegen::verify_family(Family::Monomial, Reading::Corrected, grid5, 12);
  CHECK(mono.errata.empty());
  CHECK(mono.failed() == 0);

  const auto prod = gegen::verify_family(Family::Product, Reading::AsPrinted, {Rational(2)}, 6);
  CHECK_FALSE(prod.errata.empty());
  for (const auto& e : prod.errata) {
    CHECK(e.is_ratio);
    CHECK(e.identity == "product/as_printed");
    CHECK(std::get<Rational>(e.ratio_or_diff) == Rational(4));
  }
  std::size_t nonzero = 0;
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned k = 0; k <= n; ++k)
      for (const auto& v : gegen::product_coeffs(GegenParam(Rational(2)), n, k, ProductVariant::Corrected).d)
        nonzero += !v.is_zero();
  CHECK(prod.errata.size() == nonzero);

  const auto self = gegen::verify_family(Family::SelfConnection, Reading::AsPrinted, {Rational(1)}, 6);
  CHECK_FALSE(self.errata.empty());
  bool found = false;
  for (const auto& e : self.errata)
    if (e.n == 0 && e.k == 0) {
      found = true;
      CHECK(std::get<Rational>(e.printed_value) == Rational(2));
      CHECK(std::get<Rational>(e.oracle_value) == Rational(1));
    }
  CHECK(found);
}

TEST_CASE("as-printed product at non-integer lambda goes through the float backend") {
  const auto rep = gegen::verify_family(Family::Product, Reading::AsPrinted, {Rational(3, 2)}, 3);
  CHECK_FALSE(rep.errata.empty());
  for (const auto& e : rep.errata) {
    REQUIRE(std::holds_alternative<double>(e.ratio_or_diff));
    CHECK(std::get<double>(e.ratio_or_diff) == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-10));
  }
}

TEST_CASE("derivative erratum") {
  const GegenParam one(Rational(1));
  CHECK_FALSE(gegen::derivative_erratum(one, 2, 2, Reading::Corrected).has_value());
  const auto e = gegen::derivative_erratum(one, 2, 2, Reading::AsPrinted);
  REQUIRE(e.has_value());
  CHECK(std::get<Rational>(e->printed_value) == Rational(4));
  CHECK(std::get<Rational>(e->oracle_value) == Rational(8));
  CHECK_FALSE(gegen::derivative_erratum(one, 2, 1, Reading::AsPrinted).has_value());
}

TEST_CASE("verification result does not depend on the worker count") {
  const auto grid = oracle::lambda_grid();
  for (Family f : {Family::Product, Family::SelfConnection}) {
    const auto a = gegen::verify_family(f, Reading::AsPrinted, grid, 6, 1);
    const auto b = gegen::verify_family(f, Reading::AsPrinted, grid, 6, 4);
    CHECK(a.cells == b.cells);
    CHECK(a.passed == b.passed);
    REQUIRE(a.errata.size() == b.errata.size());
    for (std::size_t i = 0; i < a.errata.size(); ++i) {
      CHECK(a.errata[i].n == b.errata[i].n);
      CHECK(a.errata[i].k == b.errata[i].k);
      CHECK(a.errata[i].lambda == b.errata[i].lambda);
      CHECK(a.errata[i].factor_k == b.errata[i].factor_k);
    }
  }
}
