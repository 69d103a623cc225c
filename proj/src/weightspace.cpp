#include "gegen/weightspace.hpp"

#include "gegen/gegenbauer.hpp"

namespace gegen {

namespace {

Rational R(unsigned v) { return Rational(static_cast<long>(v)); }

// Sum over even powers of coeff * mu_{2m}/mu_0.
Rational integrate_ratio(const Poly& p, const MomentTable& t) {
  Rational acc;
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); i += 2) acc += c[i] * t.ratios[i / 2];
  return acc;
}

}  // namespace

MomentTable moment_ratios(const Rational& lambda, unsigned shift, unsigned maxdeg) {
  const Rational a = lambda + R(shift);
  if (a <= Rational(-1, 2))
    throw InvalidWeight("weight exponent lambda + j - 1/2 = " + (a - Rational(1, 2)).str() + " is not integrable");
  MomentTable t{lambda, shift, {}};
  t.ratios.reserve(maxdeg + 1);
  t.ratios.push_back(Rational(1));
  for (unsigned m = 1; m <= maxdeg; ++m)
    t.ratios.push_back(t.ratios.back() * (R(m) - Rational(1, 2)) / (a + R(m)));
  return t;
}

InnerProductValue inner_product(const Poly& p, const Poly& q, const Rational& lambda, unsigned shift) {
  const Poly pq = p * q;
  const unsigned maxdeg = pq.degree() < 0 ? 0u : static_cast<unsigned>(pq.degree()) / 2;
  const MomentTable t = moment_ratios(lambda, shift, maxdeg);
  return {integrate_ratio(pq, t), shift};
}

Rational gegen_norm_ratio(const GegenParam& param, unsigned n) {
  const Rational& lam = param.lambda();
  return lam * rising_factorial(Rational(2) * lam, n) / (factorial(n) * (R(n) + lam));
}

Poly reconstruct(const CoeffVector& v) {
  const auto basis = gegen_basis(v.param, v.d.empty() ? 0u : static_cast<unsigned>(v.d.size() - 1));
  Poly out;
  for (std::size_t k = 0; k < v.d.size(); ++k)
    if (!v.d[k].is_zero()) out += basis[k] * v.d[k];
  return out;
}

CoeffVector project(const Poly& p, const GegenParam& param, unsigned n) {
  if (p.degree() > static_cast<int>(n))
    throw InvalidParameter("polynomial degree " + std::to_string(p.degree()) + " exceeds n = " + std::to_string(n));
  const auto basis = gegen_basis(param, n);
  // One moment table covers every <p, C_k>.
  const MomentTable t = moment_ratios(param, 0, n);
  CoeffVector out{param, n, std::vector<Rational>(n + 1), Method::Projection};
  for (unsigned k = 0; k <= n; ++k) {
    if (static_cast<int>(k) > p.degree()) break;
    out.d[k] = integrate_ratio(p * basis[k], t) / gegen_norm_ratio(param, k);
  }
  if (reconstruct(out) != p) throw IdentityViolation("projection does not reconstruct its input");
  return out;
}

CoeffVector prop1_coeffs(const Poly& p, const GegenParam& param, unsigned n) {
  if (p.degree() > static_cast<int>(n))
    throw InvalidParameter("polynomial degree " + std::to_string(p.degree()) + " exceeds n = " + std::to_string(n));
  const Rational& lam = param.lambda();
  CoeffVector out{param, n, std::vector<Rational>(n + 1), Method::Prop1};
  Poly deriv = p;
  for (unsigned k = 0; k <= n && !deriv.is_zero(); ++k) {
    const unsigned half = static_cast<unsigned>(deriv.degree()) / 2;
    const MomentTable t = moment_ratios(lam, k, half);
    // (-1)^k from the parts cancels the (-2)^k of the functional.
    out.d[k] = (R(k) + lam) / (pow(Rational(2), k) * rising_factorial(lam, k + 1)) * integrate_ratio(deriv, t);
    deriv = differentiate(deriv);
  }
  return out;
}

}  // namespace gegen
