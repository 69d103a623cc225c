#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace gegen::numeric {

/// Gauss rule for the weight (1-x^2)^(lambda-1/2) on [-1, 1].
struct QuadRule {
  double lambda = 0.0;
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // positive, symmetric

  /// sum_i w_i f(x_i)
  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// mu_0 = B(1/2, lambda + 1/2), the total mass of the weight.
double base_moment(double lambda);

/// C_n^(lambda)(x) by the forward three-term recurrence.
double eval_gegen_f64(double lambda, unsigned n, double x);

/// Evaluates sum_i coeffs[i] x^i (Horner).
double eval_poly_f64(std::span<const double> coeffs, double x);

/// Eigenvalues and first eigenvector components of a symmetric tridiagonal
/// matrix by implicit QL with Wilkinson shifts. `diag` is overwritten with the
/// (unsorted) eigenvalues, `first` receives row 0 of the eigenvector matrix.
/// `offdiag[i]` couples rows i and i+1; its last entry is ignored.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double> offdiag, std::vector<double>& first);

/// Golub-Welsch m-point rule, computed in extended precision and rounded once;
/// exact for polynomial integrands of degree <= 2m-1.
/// Throws InvalidWeight if lambda <= -1/2, InvalidParameter if m == 0.
QuadRule gauss_jacobi_rule(double lambda, unsigned m);

/// d_k = <p, C_k> / <C_k, C_k>, k = 0..n, with each inner product taken by
/// an exact Gauss rule of (deg p + k)/2 + 1 nodes. Requires lambda != 0.
std::vector<double> float_project(std::span<const double> coeffs, double lambda, unsigned n);

/// <C_n, C_n> in absolute units: mu_0 lambda (2 lambda)_n / (n! (n + lambda)).
double gegen_norm_f64(double lambda, unsigned n);

/// CSV "node,weight" with 17 significant digits.
void write_rule_csv(std::ostream& os, const QuadRule& rule);

}  // namespace gegen::numeric
