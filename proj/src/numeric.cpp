#include "gegen/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>

#include "gegen/error.hpp"

namespace gegen::numeric {

double eval_poly_f64(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

template <class T>
void ql_impl(std::vector<T>& d, std::vector<T> e, std::vector<T>& z) {
  const std::size_t n = d.size();
  e.resize(n, T(0));
  if (n > 0) e[n - 1] = T(0);
  z.assign(n, T(0));
  if (n == 0) return;
  z[0] = T(1);
  const T eps = std::numeric_limits<T>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const T dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw Error("tridiagonal QL failed to converge");

      // Wilkinson shift from the leading 2x2 block.
      T g = (d[l + 1] - d[l]) / (T(2) * e[l]);
      T r = std::hypot(g, T(1));
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      T s = T(1), c = T(1), p = T(0);
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        T f = s * e[i];
        const T b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == T(0)) {
          d[i + 1] -= p;
          e[m] = T(0);
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + T(2) * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = T(0);
    }
  }
}

template <class T>
T base_moment_t(T lambda) {
  const T sqrt_pi = std::sqrt(std::acos(T(-1)));
  if (lambda < T(100)) return sqrt_pi * std::tgamma(lambda + T(0.5)) / std::tgamma(lambda + T(1));
  return sqrt_pi * std::exp(std::lgamma(lambda + T(0.5)) - std::lgamma(lambda + T(1)));
}

template <class T>
struct Rule {
  std::vector<T> nodes, weights;
};

template <class T>
Rule<T> rule_impl(T lambda, unsigned m) {
  if (!(lambda > T(-0.5))) throw InvalidWeight("Gauss rule needs lambda > -1/2");
  if (m == 0) throw InvalidParameter("Gauss rule needs at least one node");

  // Monic recurrence of the symmetric weight: alpha_k = 0,
  // beta_k = k (k + 2 lambda - 1) / (4 (k + lambda)(k + lambda - 1)), beta_1 = 1 / (2 (1 + lambda)).
  std::vector<T> diag(m, T(0)), off(m, T(0));
  for (unsigned k = 1; k < m; ++k) {
    const T beta = k == 1 ? T(1) / (T(2) * (T(1) + lambda))
                          : k * (k + T(2) * lambda - T(1)) / (T(4) * (k + lambda) * (k + lambda - T(1)));
    off[k - 1] = std::sqrt(beta);
  }
  std::vector<T> first;
  ql_impl(diag, off, first);

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });

  const T mu0 = base_moment_t(lambda);
  Rule<T> rule{std::vector<T>(m), std::vector<T>(m)};
  for (unsigned i = 0; i < m; ++i) {
    rule.nodes[i] = diag[order[i]];
    rule.weights[i] = mu0 * first[order[i]] * first[order[i]];
  }
  // The weight is even: enforce exact mirror symmetry.
  for (unsigned i = 0; i < m / 2; ++i) {
    const unsigned j = m - 1 - i;
    const T x = T(0.5) * (rule.nodes[j] - rule.nodes[i]);
    const T w = T(0.5) * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = T(0);
  return rule;
}

template <class T>
T eval_gegen_t(T lambda, unsigned n, T x) {
  if (n == 0) return T(1);
  T prev = T(1);
  T cur = T(2) * lambda * x;
  for (unsigned k = 2; k <= n; ++k) {
    const T next = (T(2) * x * (k + lambda - T(1)) * cur - (k + T(2) * lambda - T(2)) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class T>
T gegen_norm_t(T lambda, unsigned n) {
  T r = lambda / (n + lambda);
  for (unsigned j = 0; j < n; ++j) r *= (T(2) * lambda + j) / (j + T(1));
  return base_moment_t(lambda) * r;
}

}  // namespace

double base_moment(double lambda) { return base_moment_t(lambda); }

double eval_gegen_f64(double lambda, unsigned n, double x) { return eval_gegen_t(lambda, n, x); }

void tridiagonal_ql(std::vector<double>& d, std::vector<double> e, std::vector<double>& z) {
  ql_impl(d, std::move(e), z);
}

QuadRule gauss_jacobi_rule(double lambda, unsigned m) {
  const auto r = rule_impl<long double>(lambda, m);
  QuadRule rule{lambda, std::vector<double>(m), std::vector<double>(m)};
  for (unsigned i = 0; i < m; ++i) {
    rule.nodes[i] = static_cast<double>(r.nodes[i]);
    rule.weights[i] = static_cast<double>(r.weights[i]);
  }
  return rule;
}

double gegen_norm_f64(double lambda, unsigned n) { return gegen_norm_t(lambda, n); }

std::vector<double> float_project(std::span<const double> coeffs, double lambda, unsigned n) {
  if (!(lambda > -0.5)) throw InvalidWeight("projection needs lambda > -1/2");
  if (lambda == 0.0) throw InvalidParameter("lambda must be nonzero");
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == 0.0) --deg;
  const unsigned p_deg = deg == 0 ? 0u : static_cast<unsigned>(deg - 1);

  // Evaluated in extended precision: coefficients of very different size cancel.
  using T = long double;
  const T lam = lambda;
  std::map<unsigned, Rule<T>> rules;
  std::vector<double> d(n + 1, 0.0);
  for (unsigned k = 0; k <= n; ++k) {
    const unsigned m = (p_deg + k) / 2 + 1;
    auto it = rules.find(m);
    if (it == rules.end()) it = rules.emplace(m, rule_impl(lam, m)).first;
    const auto& rule = it->second;
    T ip = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const T x = rule.nodes[i];
      T px = 0;
      for (std::size_t j = deg; j-- > 0;) px = px * x + coeffs[j];
      ip += rule.weights[i] * px * eval_gegen_t(lam, k, x);
    }
    d[k] = static_cast<double>(ip / gegen_norm_t(lam, k));
  }
  return d;
}

void write_rule_csv(std::ostream& os, const QuadRule& rule) {
  const auto old_prec = os.precision(17);
  os << "node,weight\n";
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) os << rule.nodes[i] << "," << rule.weights[i] << "\n";
  os.precision(old_prec);
}

}  // namespace gegen::numeric
