#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gegen/error.hpp"

namespace gegen {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT: implicit by intent
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "a", "-a", "a/b" (b != 0). Whitespace around the value is ignored.
  /// Throws InvalidParameter on malformed input.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// "num/den", or "num" when den == 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
/// r^e for integer e; e < 0 requires r != 0.
Rational pow(const Rational& r, long e);
Rational factorial(unsigned n);

/// (a)_k = a (a+1) ... (a+k-1); 1 when k == 0.
Rational rising_factorial(const Rational& a, unsigned k);

/// Gamma(a+m)/Gamma(a) as an exact rational. Throws PoleCrossing if any
/// a+j (0 <= j < m) is zero, since Gamma has a pole at the non-positive
/// integers and the quotient is then not the finite product.
Rational gamma_ratio(const Rational& a, unsigned m);

/// Generalized binomial a(a-1)...(a-k+1)/k! for rational a.
Rational binom_rational(const Rational& a, unsigned k);

/// The Gegenbauer order lambda: rational, lambda > -1/2 and lambda != 0.
class GegenParam {
 public:
  /// Throws InvalidWeight when lambda <= -1/2, InvalidParameter when lambda == 0.
  explicit GegenParam(Rational lambda);

  const Rational& lambda() const { return lambda_; }
  /// Parameter lambda + k, always valid when this one is.
  GegenParam shifted(unsigned k) const { return GegenParam(lambda_ + Rational(static_cast<long>(k))); }

  friend bool operator==(const GegenParam&, const GegenParam&) = default;
  friend auto operator<=>(const GegenParam& a, const GegenParam& b) { return a.lambda_ <=> b.lambda_; }

 private:
  Rational lambda_;
};

}  // namespace gegen
