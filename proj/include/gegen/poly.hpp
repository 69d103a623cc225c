#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "gegen/exactnum.hpp"

namespace gegen {

/// Dense univariate polynomial over Rational. coeffs()[i] multiplies x^i;
/// trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c) { return Poly({c}); }
  /// c * x^k
  static Poly monomial(unsigned k, const Rational& c = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational operator[](std::size_t i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Poly add(const Poly& p, const Poly& q) { return p + q; }
inline Poly sub(const Poly& p, const Poly& q) { return p - q; }
inline Poly mul(const Poly& p, const Poly& q) { return p * q; }
inline Poly scale(const Poly& p, const Rational& c) { return p * c; }

/// k-fold formal derivative.
Poly differentiate(const Poly& p, unsigned k = 1);

/// p(a x + b) expanded in the monomial basis.
Poly compose_affine(const Poly& p, const Rational& a, const Rational& b);

inline Rational eval_rational(const Poly& p, const Rational& x) { return p.eval(x); }

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace gegen
