#include "gegen/expansions.hpp"

#include <algorithm>
#include <cmath>

#include "gegen/classicpoly.hpp"
#include "gegen/gegenbauer.hpp"

namespace gegen {

namespace {

const Rational kHalf(1, 2);

Rational R(unsigned v) { return Rational(static_cast<long>(v)); }

// Shared shape of the Bernoulli and Euler theorems; `numbers` holds B_j or E_j.
std::vector<Rational> appell_closed_form(const Rational& lam, unsigned n, const std::vector<Rational>& numbers) {
  std::vector<Rational> d(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    const unsigned rest = n - k;
    Rational inner;
    for (unsigned l = 0; l <= rest; l += 2) {
      const Rational& b = numbers[rest - l];
      if (b.is_zero()) continue;
      // Gamma((l+1)/2) = l! sqrt(pi) / (2^l (l/2)!) and Gamma(lambda)/Gamma(lambda+k+l/2+1) = 1/(lambda)_{k+l/2+1}
      inner += binom_rational(R(rest), l) * b * factorial(l) /
               (pow(Rational(2), l) * factorial(l / 2) * rising_factorial(lam, k + l / 2 + 1));
    }
    d[k] = factorial(n) * (R(k) + lam) / (pow(Rational(2), k) * factorial(rest)) * inner;
  }
  return d;
}

// 2^(lambda+1) for integer lambda.
Rational two_to_lambda_plus_one(const Rational& lam) {
  if (!lam.is_integer())
    throw NotExact("2^(lambda+1) is irrational for lambda = " + lam.str() + "; use the float backend");
  return pow(Rational(2), lam.numerator().get_si() + 1);
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::Projection: return "projection";
    case Method::Prop1: return "prop1";
  }
  return "unknown";
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Custom: return "custom";
    case Family::Monomial: return "monomial";
    case Family::Bernoulli: return "bernoulli";
    case Family::Euler: return "euler";
    case Family::Product: return "product";
    case Family::SelfConnection: return "self";
    case Family::Derivative: return "derivative";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::Custom, Family::Monomial, Family::Bernoulli, Family::Euler, Family::Product,
                   Family::SelfConnection, Family::Derivative})
    if (name == family_name(f)) return f;
  if (name == "self_connection" || name == "self-connection") return Family::SelfConnection;
  throw InvalidParameter("unknown family '" + name + "'");
}

const char* product_variant_name(ProductVariant v) {
  switch (v) {
    case ProductVariant::Corrected: return "corrected";
    case ProductVariant::AsPrinted: return "as_printed";
    case ProductVariant::AsPrintedLiteralPower: return "as_printed_literal_power";
  }
  return "unknown";
}

const char* self_variant_name(SelfVariant v) {
  switch (v) {
    case SelfVariant::OracleDelta: return "oracle_delta";
    case SelfVariant::AsPrinted: return "as_printed";
    case SelfVariant::AsPrintedPochhammer: return "as_printed_pochhammer";
  }
  return "unknown";
}

CoeffVector monomial_coeffs(const GegenParam& param, unsigned n) {
  const Rational& lam = param.lambda();
  CoeffVector out{param, n, std::vector<Rational>(n + 1), Method::ClosedForm, Family::Monomial};
  for (unsigned k = n % 2; k <= n; k += 2) {
    out.d[k] = (R(k) + lam) * factorial(n) /
               (pow(Rational(2), n) * factorial((n - k) / 2) * rising_factorial(lam, (n + k) / 2 + 1));
  }
  return out;
}

CoeffVector bernoulli_coeffs(const GegenParam& param, unsigned n) {
  return {param, n, appell_closed_form(param.lambda(), n, bernoulli_numbers(n).numbers), Method::ClosedForm,
          Family::Bernoulli};
}

CoeffVector euler_coeffs(const GegenParam& param, unsigned n) {
  return {param, n, appell_closed_form(param.lambda(), n, euler_numbers(n).numbers), Method::ClosedForm,
          Family::Euler};
}

namespace {

// The triple sum with leading constant 2; the as-printed forms differ by the factor 2^lambda.
CoeffVector product_sum(const GegenParam& param, unsigned n, unsigned k, ProductVariant variant) {
  if (k > n) throw InvalidPair("product needs k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
  const Rational& lam = param.lambda();
  const Rational two_lam = Rational(2) * lam;
  const Rational lam_half = lam + kHalf;
  const unsigned nk = n - k;

  const Rational binoms = binom_rational(R(nk) + two_lam - Rational(1), nk) *
                          binom_rational(R(k) + two_lam - Rational(1), k);

  // inner[p] = sum_m binom(n-k, p-m) binom(k, m) (2lam+k)_m (2lam+n-k)_{p-m} / ((lam+1/2)_m (lam+1/2)_{p-m})
  std::vector<Rational> inner(n + 1);
  for (unsigned p = 0; p <= n; ++p) {
    const unsigned m_lo = p > nk ? p - nk : 0;
    const unsigned m_hi = std::min(p, k);
    for (unsigned m = m_lo; m <= m_hi; ++m) {
      const Rational first = variant == ProductVariant::AsPrintedLiteralPower
                                 ? pow(two_lam + R(k), m)
                                 : rising_factorial(two_lam + R(k), m);
      inner[p] += binom_rational(R(nk), p - m) * binom_rational(R(k), m) * first *
                  rising_factorial(two_lam + R(nk), p - m) /
                  (rising_factorial(lam_half, m) * rising_factorial(lam_half, p - m));
    }
  }

  CoeffVector out{param, n, std::vector<Rational>(n + 1), Method::ClosedForm, Family::Product, k};
  for (unsigned r = 0; r <= n; ++r) {
    Rational s;
    for (unsigned p = r; p <= n; ++p) {
      if (inner[p].is_zero()) continue;
      Rational term = inner[p] * factorial(p) * rising_factorial(lam_half, p) /
                      (factorial(p - r) * rising_factorial(two_lam, r + p + 1));
      if ((p + r) % 2 == 1) term = -term;
      s += term;
    }
    out.d[r] = Rational(2) * (R(r) + lam) * binoms * s;
  }
  return out;
}

}  // namespace

CoeffVector product_coeffs(const GegenParam& param, unsigned n, unsigned k, ProductVariant variant) {
  CoeffVector out = product_sum(param, n, k, variant);
  if (variant == ProductVariant::Corrected) return out;
  const Rational factor = two_to_lambda_plus_one(param.lambda()) / Rational(2);
  for (auto& v : out.d) v *= factor;
  return out;
}

std::vector<double> product_coeffs_scaled(const GegenParam& param, unsigned n, unsigned k, ProductVariant variant) {
  const CoeffVector body = product_sum(param, n, k, variant);
  const double factor = variant == ProductVariant::Corrected ? 1.0 : std::pow(2.0, param.lambda().to_double());
  std::vector<double> out;
  out.reserve(body.d.size());
  for (const auto& v : body.d) out.push_back(v.to_double() * factor);
  return out;
}

std::vector<double> product_coeffs_f64(double lambda, unsigned n, unsigned k, ProductVariant variant) {
  if (k > n) throw InvalidPair("product needs k <= n");
  if (!(lambda > -0.5)) throw InvalidWeight("lambda must exceed -1/2");
  if (lambda == 0.0) throw InvalidParameter("lambda must be nonzero");
  auto rising = [](long double a, unsigned m) {
    long double out = 1.0;
    for (unsigned j = 0; j < m; ++j) out *= a + j;
    return out;
  };
  auto fact = [](unsigned m) { return std::tgamma(m + 1.0L); };
  auto binom = [&](long double a, unsigned m) {
    long double out = 1.0;
    for (unsigned j = 0; j < m; ++j) out *= a - j;
    return out / fact(m);
  };
  const long double lam = lambda;
  const long double two_lam = 2.0L * lam;
  const long double lam_half = lam + 0.5L;
  const unsigned nk = n - k;
  const long double lead = variant == ProductVariant::Corrected ? 2.0 : std::pow(2.0L, lam + 1.0L);
  const long double binoms = binom(nk + two_lam - 1.0, nk) * binom(k + two_lam - 1.0, k);

  std::vector<long double> inner(n + 1, 0.0);
  for (unsigned p = 0; p <= n; ++p) {
    const unsigned m_lo = p > nk ? p - nk : 0;
    const unsigned m_hi = std::min(p, k);
    for (unsigned m = m_lo; m <= m_hi; ++m) {
      const long double first = variant == ProductVariant::AsPrintedLiteralPower ? std::pow(two_lam + k, m)
                                                                                 : rising(two_lam + k, m);
      inner[p] += binom(nk, p - m) * binom(k, m) * first * rising(two_lam + nk, p - m) /
                  (rising(lam_half, m) * rising(lam_half, p - m));
    }
  }
  std::vector<double> d(n + 1, 0.0);
  for (unsigned r = 0; r <= n; ++r) {
    long double s = 0.0;
    for (unsigned p = r; p <= n; ++p) {
      const long double term = inner[p] * fact(p) * rising(lam_half, p) / (fact(p - r) * rising(two_lam, r + p + 1));
      s += (p + r) % 2 == 1 ? -term : term;
    }
    d[r] = static_cast<double>(lead * (r + lam) * binoms * s);
  }
  return d;
}

CoeffVector self_connection_coeffs(const GegenParam& param, unsigned n, SelfVariant variant) {
  CoeffVector out{param, n, std::vector<Rational>(n + 1), Method::ClosedForm, Family::SelfConnection};
  if (variant == SelfVariant::OracleDelta) {
    out.d[n] = Rational(1);
    return out;
  }
  const Rational& lam = param.lambda();
  const Rational top = R(n) + lam - kHalf;  // n + lambda - 1/2
  for (unsigned k = 0; k <= n; ++k) {
    const Rational lam_k =
        variant == SelfVariant::AsPrinted ? pow(lam, k) : rising_factorial(lam, k);
    const Rational head = lam_k * (R(k) + lam) * pow(Rational(2), 2 * k + 1) *
                          binom_rational(R(n + k) + Rational(2) * lam - Rational(1), n - k) /
                          binom_rational(top, n - k);
    Rational sum;
    for (unsigned l = 0; l <= n - k; ++l) {
      Rational term = binom_rational(top, n - k - l) * binom_rational(top, l) *
                      binom_rational(R(k + l) + lam - kHalf, l) * binom_rational(lam + R(n - l) - kHalf, n - l) /
                      (binom_rational(R(n), l) * binom_rational(R(k + n) + Rational(2) * lam - Rational(1), n + k) *
                       binom_rational(R(n + k), k) * factorial(k));
      if (l % 2 == 1) term = -term;
      sum += term;
    }
    out.d[k] = head * sum;
  }
  return out;
}

Poly family_source(Family family, const GegenParam& param, unsigned n, unsigned factor_k) {
  switch (family) {
    case Family::Monomial: return Poly::monomial(n);
    case Family::Bernoulli: return bernoulli_poly(n);
    case Family::Euler: return euler_poly(n);
    case Family::Product: {
      if (factor_k > n) throw InvalidPair("product needs k <= n");
      const auto basis = gegen_basis(param, n);
      return basis[n - factor_k] * basis[factor_k];
    }
    case Family::SelfConnection: return gegen_recurrence(param, n).poly;
    case Family::Custom:
    case Family::Derivative: break;
  }
  throw InvalidParameter(std::string("family '") + family_name(family) + "' has no source polynomial");
}

}  // namespace gegen
