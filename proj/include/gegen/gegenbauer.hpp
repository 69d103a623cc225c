#pragma once

#include <vector>

#include "gegen/exactnum.hpp"
#include "gegen/poly.hpp"

namespace gegen {

enum class Route { ExplicitSum, Recurrence, JacobiForm, GeneratingSeries, Rodrigues };

const char* route_name(Route r);

/// C_n^(lambda) together with how it was built.
struct GegenPoly {
  GegenParam param;
  unsigned degree;
  Poly poly;
  Route route;
};

/// (1 - x^2)^(lambda - 1/2 + offset) * poly, kept symbolic so that
/// derivatives stay inside polynomial arithmetic.
struct WeightedForm {
  Rational lambda;
  unsigned offset = 0;
  Poly poly;

  /// d/dx: (1-x^2)^(a-1) [ (1-x^2) p' - 2 a x p ] with a = lambda - 1/2 + offset.
  /// Throws DegreeUnderflow when offset is already 0 (the result would leave the type).
  WeightedForm derivative() const;
};

/// Hypergeometric sum in powers of (x-1)/2.
GegenPoly gegen_explicit(const GegenParam& param, unsigned n);

/// Three-term recurrence n C_n = 2x(n+lambda-1) C_{n-1} - (n+2 lambda-2) C_{n-2}.
GegenPoly gegen_recurrence(const GegenParam& param, unsigned n);

/// C_0 .. C_nmax by recurrence in one pass.
std::vector<Poly> gegen_basis(const GegenParam& param, unsigned nmax);

/// P_n^(alpha,beta)(x) = sum_k binom(n+alpha, n-k) binom(n+beta, k) ((x-1)/2)^k ((x+1)/2)^(n-k).
Poly jacobi_explicit(const Rational& alpha, const Rational& beta, unsigned n);

/// C_n^(lambda) = binom(n+2lambda-1, n) / binom(n+lambda-1/2, n) * P_n^(lambda-1/2, lambda-1/2).
/// Throws DegenerateRatio if the denominator vanishes.
GegenPoly gegen_from_jacobi(const GegenParam& param, unsigned n);

/// Taylor coefficients [C_0(x0), ..., C_N(x0)] of (1 - 2 x0 t + t^2)^(-lambda) in t,
/// expanded as the binomial series of (1-u)^(-lambda) with u = 2 x0 t - t^2.
std::vector<Rational> gegen_series_coeff(const GegenParam& param, const Rational& x0, unsigned N);

/// Result of differentiating C_n^(lambda) k times: scale * C_{n-k}^(lambda+k).
struct GegenDerivative {
  Rational scale;    // 2^k (lambda)_k
  GegenPoly target;  // C_{n-k}^(lambda+k)
  Poly poly;         // scale * target.poly
};

/// k-th derivative of a Gegenbauer polynomial via the derivative ladder.
/// Throws DegreeUnderflow if k > n and IdentityViolation if the ladder
/// disagrees with formal differentiation of g.poly.
GegenDerivative gegen_derivative(const GegenPoly& g, unsigned k);

/// Constant c with d^k/dx^k C_n^(lambda) = c * C_{n-k}^(lambda+k), obtained
/// by comparing leading coefficients (no ladder formula involved).
Rational derivative_constant_observed(const GegenParam& param, unsigned n, unsigned k);

/// Cofactor of (1-x^2)^(lambda-1/2) in the Rodrigues representation
/// (-2)^n (lambda)_n / (n! (n+2lambda)_n) d^n/dx^n (1-x^2)^(n+lambda-1/2).
/// Throws IdentityViolation if it differs from gegen_explicit.
Poly rodrigues_form(const GegenParam& param, unsigned n);

/// (1-x^2) y'' - (2 lambda + 1) x y' + n (n + 2 lambda) y.
Poly ode_residual(const Poly& y, const GegenParam& param, unsigned n);
inline Poly ode_residual(const GegenPoly& g) { return ode_residual(g.poly, g.param, g.degree); }

/// binom(n+2lambda-1, n), the value at x = 1.
Rational gegen_value_at_one(const GegenParam& param, unsigned n);
/// 2^n binom(lambda+n-1, n).
Rational gegen_leading_coeff(const GegenParam& param, unsigned n);

}  // namespace gegen
