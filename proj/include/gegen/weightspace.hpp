#pragma once

#include <vector>

#include "gegen/coeffs.hpp"
#include "gegen/exactnum.hpp"
#include "gegen/poly.hpp"

namespace gegen {

/// Even-moment ratios mu_{2m} / mu_0 of the weight (1-x^2)^(lambda - 1/2 + shift)
/// on [-1, 1]; ratios[m] = (1/2)_m / (lambda + shift + 1)_m. Odd moments vanish.
struct MomentTable {
  Rational lambda;
  unsigned shift = 0;
  std::vector<Rational> ratios;
};

/// Throws InvalidWeight if lambda + shift <= -1/2.
MomentTable moment_ratios(const Rational& lambda, unsigned shift, unsigned maxdeg);
inline MomentTable moment_ratios(const GegenParam& p, unsigned shift, unsigned maxdeg) {
  return moment_ratios(p.lambda(), shift, maxdeg);
}

/// An integral against the weight, expressed in units of its base moment
/// mu_0 = B(1/2, lambda + shift + 1/2). The transcendental mu_0 is never formed.
struct InnerProductValue {
  Rational ratio;
  unsigned shift = 0;
};

/// <p, q> / mu_0 for the weight (1-x^2)^(lambda - 1/2 + shift).
InnerProductValue inner_product(const Poly& p, const Poly& q, const Rational& lambda, unsigned shift = 0);
inline InnerProductValue inner_product(const Poly& p, const Poly& q, const GegenParam& param, unsigned shift = 0) {
  return inner_product(p, q, param.lambda(), shift);
}

/// <C_n, C_n> / mu_0 = lambda (2 lambda)_n / (n! (n + lambda)).
Rational gegen_norm_ratio(const GegenParam& param, unsigned n);

/// sum_k d_k C_k^(lambda).
Poly reconstruct(const CoeffVector& v);

/// d_k = <p, C_k> / <C_k, C_k>, k = 0..n. Requires deg p <= n (InvalidParameter
/// otherwise); throws IdentityViolation if the reconstruction is not exactly p.
CoeffVector project(const Poly& p, const GegenParam& param, unsigned n);
inline CoeffVector project(const Poly& p, const GegenParam& param) {
  return project(p, param, p.degree() < 0 ? 0u : static_cast<unsigned>(p.degree()));
}

/// Rodrigues-functional coefficients. After k integrations by parts
/// d_k = (k + lambda) / (2^k (lambda)_{k+1}) * <p^(k), 1>_k, where <.,.>_k
/// is taken against the shifted weight (1-x^2)^(lambda + k - 1/2) in its own mu_0 units.
/// Independent of the C_k themselves.
CoeffVector prop1_coeffs(const Poly& p, const GegenParam& param, unsigned n);
inline CoeffVector prop1_coeffs(const Poly& p, const GegenParam& param) {
  return prop1_coeffs(p, param, p.degree() < 0 ? 0u : static_cast<unsigned>(p.degree()));
}

}  // namespace gegen
