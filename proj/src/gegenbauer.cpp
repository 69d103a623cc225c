#include "gegen/gegenbauer.hpp"

namespace gegen {

namespace {

const Rational kHalf(1, 2);

Rational R(unsigned v) { return Rational(static_cast<long>(v)); }

}  // namespace

const char* route_name(Route r) {
  switch (r) {
    case Route::ExplicitSum: return "explicit_sum";
    case Route::Recurrence: return "recurrence";
    case Route::JacobiForm: return "jacobi_form";
    case Route::GeneratingSeries: return "generating_series";
    case Route::Rodrigues: return "rodrigues";
  }
  return "unknown";
}

WeightedForm WeightedForm::derivative() const {
  if (offset == 0) throw DegreeUnderflow("weighted form has no offset left to differentiate");
  const Rational a = lambda - kHalf + R(offset);
  const Poly one_minus_x2({Rational(1), Rational(0), Rational(-1)});
  const Poly x({Rational(0), Rational(1)});
  Poly next = one_minus_x2 * differentiate(poly) - (Rational(2) * a) * (x * poly);
  return WeightedForm{lambda, offset - 1, std::move(next)};
}

GegenPoly gegen_explicit(const GegenParam& param, unsigned n) {
  const Rational& lam = param.lambda();
  const Poly half_shift({-kHalf, kHalf});  // (x-1)/2
  Poly sum;
  Poly power = Poly::constant(1);
  for (unsigned k = 0; k <= n; ++k) {
    const Rational c = binom_rational(R(n), k) * rising_factorial(Rational(2) * lam + R(n), k) /
                       rising_factorial(lam + kHalf, k);
    sum += power * c;
    power = power * half_shift;
  }
  sum *= binom_rational(R(n) + Rational(2) * lam - Rational(1), n);
  return {param, n, std::move(sum), Route::ExplicitSum};
}

std::vector<Poly> gegen_basis(const GegenParam& param, unsigned nmax) {
  const Rational& lam = param.lambda();
  std::vector<Poly> c;
  c.reserve(nmax + 1);
  c.push_back(Poly::constant(1));
  if (nmax == 0) return c;
  c.push_back(Poly::monomial(1, Rational(2) * lam));
  const Poly x = Poly::monomial(1);
  for (unsigned n = 2; n <= nmax; ++n) {
    Poly next = (x * c[n - 1]) * (Rational(2) * (R(n) + lam - Rational(1))) -
                c[n - 2] * (R(n) + Rational(2) * lam - Rational(2));
    next *= Rational(1) / R(n);
    c.push_back(std::move(next));
  }
  return c;
}

GegenPoly gegen_recurrence(const GegenParam& param, unsigned n) {
  auto basis = gegen_basis(param, n);
  return {param, n, std::move(basis.back()), Route::Recurrence};
}

Poly jacobi_explicit(const Rational& alpha, const Rational& beta, unsigned n) {
  const Poly minus({-kHalf, kHalf});  // (x-1)/2
  const Poly plus({kHalf, kHalf});    // (x+1)/2
  std::vector<Poly> minus_pow{Poly::constant(1)}, plus_pow{Poly::constant(1)};
  for (unsigned k = 1; k <= n; ++k) {
    minus_pow.push_back(minus_pow.back() * minus);
    plus_pow.push_back(plus_pow.back() * plus);
  }
  Poly sum;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational c = binom_rational(R(n) + alpha, n - k) * binom_rational(R(n) + beta, k);
    sum += (minus_pow[k] * plus_pow[n - k]) * c;
  }
  return sum;
}

GegenPoly gegen_from_jacobi(const GegenParam& param, unsigned n) {
  const Rational& lam = param.lambda();
  const Rational den = binom_rational(R(n) + lam - kHalf, n);
  if (den.is_zero()) throw DegenerateRatio("binom(n+lambda-1/2, n) vanishes");
  const Rational ratio = binom_rational(R(n) + Rational(2) * lam - Rational(1), n) / den;
  Poly p = jacobi_explicit(lam - kHalf, lam - kHalf, n) * ratio;
  return {param, n, std::move(p), Route::JacobiForm};
}

std::vector<Rational> gegen_series_coeff(const GegenParam& param, const Rational& x0, unsigned N) {
  const Rational& lam = param.lambda();
  // Truncated series in t, index = power of t.
  auto mul_trunc = [N](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(N + 1);
    for (unsigned i = 0; i <= N; ++i) {
      if (a[i].is_zero()) continue;
      for (unsigned j = 0; i + j <= N; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  };
  std::vector<Rational> u(N + 1);
  if (N >= 1) u[1] = Rational(2) * x0;
  if (N >= 2) u[2] = Rational(-1);

  std::vector<Rational> result(N + 1);
  std::vector<Rational> u_pow(N + 1);
  u_pow[0] = Rational(1);
  // u^j starts at t^j, so terms with j > N contribute nothing.
  for (unsigned j = 0; j <= N; ++j) {
    const Rational c = rising_factorial(lam, j) / factorial(j);
    for (unsigned i = 0; i <= N; ++i) result[i] += c * u_pow[i];
    u_pow = mul_trunc(u_pow, u);
  }
  return result;
}

Rational gegen_value_at_one(const GegenParam& param, unsigned n) {
  return binom_rational(R(n) + Rational(2) * param.lambda() - Rational(1), n);
}

Rational gegen_leading_coeff(const GegenParam& param, unsigned n) {
  return pow(Rational(2), n) * binom_rational(param.lambda() + R(n) - Rational(1), n);
}

GegenDerivative gegen_derivative(const GegenPoly& g, unsigned k) {
  if (k > g.degree)
    throw DegreeUnderflow("derivative order " + std::to_string(k) + " exceeds degree " + std::to_string(g.degree));
  const Rational scale = pow(Rational(2), k) * rising_factorial(g.param.lambda(), k);
  GegenPoly target = gegen_recurrence(g.param.shifted(k), g.degree - k);
  Poly p = target.poly * scale;
  if (p != differentiate(g.poly, k))
    throw IdentityViolation("derivative ladder disagrees with formal differentiation");
  return {scale, std::move(target), std::move(p)};
}

Rational derivative_constant_observed(const GegenParam& param, unsigned n, unsigned k) {
  if (k > n) throw DegreeUnderflow("derivative order exceeds degree");
  const Poly d = differentiate(gegen_explicit(param, n).poly, k);
  const Poly target = gegen_explicit(param.shifted(k), n - k).poly;
  return d.leading() / target.leading();
}

Poly rodrigues_form(const GegenParam& param, unsigned n) {
  const Rational& lam = param.lambda();
  WeightedForm w{lam, n, Poly::constant(1)};
  for (unsigned i = 0; i < n; ++i) w = w.derivative();
  const Rational c = pow(Rational(-2), n) * rising_factorial(lam, n) /
                     (factorial(n) * rising_factorial(R(n) + Rational(2) * lam, n));
  Poly out = w.poly * c;
  if (out != gegen_explicit(param, n).poly)
    throw IdentityViolation("Rodrigues form disagrees with the explicit sum at n = " + std::to_string(n));
  return out;
}

Poly ode_residual(const Poly& y, const GegenParam& param, unsigned n) {
  const Rational& lam = param.lambda();
  const Poly one_minus_x2({Rational(1), Rational(0), Rational(-1)});
  const Poly x = Poly::monomial(1);
  return one_minus_x2 * differentiate(y, 2) - (x * differentiate(y, 1)) * (Rational(2) * lam + Rational(1)) +
         y * (R(n) * (R(n) + Rational(2) * lam));
}

}  // namespace gegen
