#pragma once

#include <vector>

#include "gegen/coeffs.hpp"
#include "gegen/exactnum.hpp"
#include "gegen/poly.hpp"

namespace gegen {

// Closed-form connection coefficients d_k for several source polynomials
// p = sum_k d_k C_k^(lambda). Every Gamma quotient is reduced to a rising
// factorial with integer offset, so all values are exact rationals.

/// x^n: d_k = (k + lambda) n! / (2^n ((n-k)/2)! (lambda)_{(n+k)/2 + 1}) for n-k even, else 0.
CoeffVector monomial_coeffs(const GegenParam& param, unsigned n);

/// B_n(x): d_k = n! (k + lambda) / (2^k (n-k)!) *
///   sum_{l even} binom(n-k, l) B_{n-k-l} l! / (2^l (l/2)! (lambda)_{k + l/2 + 1}).
CoeffVector bernoulli_coeffs(const GegenParam& param, unsigned n);

/// E_n(x): the Bernoulli formula with E_j in place of B_j.
CoeffVector euler_coeffs(const GegenParam& param, unsigned n);

enum class ProductVariant {
  Corrected,              // leading constant 2
  AsPrinted,              // leading constant 2^(lambda+1), Pochhammer (2 lambda + k)_m
  AsPrintedLiteralPower,  // leading constant 2^(lambda+1), power (2 lambda + k)^m
};

const char* product_variant_name(ProductVariant v);

/// Linearization C_{n-k} C_k = sum_r d_r C_r. Throws InvalidPair if k > n.
/// The as-printed constant 2^(lambda+1) is rational only for integer lambda;
/// other lambda throw NotExact (use product_coeffs_f64).
CoeffVector product_coeffs(const GegenParam& param, unsigned n, unsigned k, ProductVariant variant);

/// Exact triple sum times a double 2^lambda: the as-printed values for any rational lambda.
/// Exact zeros stay zero.
std::vector<double> product_coeffs_scaled(const GegenParam& param, unsigned n, unsigned k, ProductVariant variant);

/// Same triple sum in extended precision, for any real lambda > -1/2, lambda != 0.
std::vector<double> product_coeffs_f64(double lambda, unsigned n, unsigned k, ProductVariant variant);

enum class SelfVariant {
  OracleDelta,          // d_k = delta_{k,n}
  AsPrinted,            // printed formula, lambda^k read literally
  AsPrintedPochhammer,  // printed formula with (lambda)_k in place of lambda^k
};

const char* self_variant_name(SelfVariant v);

/// Coefficients of C_n^(lambda) in its own basis.
CoeffVector self_connection_coeffs(const GegenParam& param, unsigned n, SelfVariant variant);

/// The polynomial a family expands: x^n, B_n(x), E_n(x), C_{n-k} C_k, or C_n.
/// factor_k is used only by Family::Product.
Poly family_source(Family family, const GegenParam& param, unsigned n, unsigned factor_k = 0);

}  // namespace gegen
