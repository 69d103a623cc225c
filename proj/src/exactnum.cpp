#include "gegen/exactnum.hpp"

#include <cctype>
#include <ostream>

namespace gegen {

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw InvalidParameter("not an exact rational: '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw InvalidParameter("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidParameter("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
  if (e < 0) return Rational(1) / pow(r, -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational rising_factorial(const Rational& a, unsigned k) {
  Rational out(1);
  for (unsigned j = 0; j < k; ++j) out *= a + Rational(static_cast<long>(j));
  return out;
}

Rational gamma_ratio(const Rational& a, unsigned m) {
  for (unsigned j = 0; j < m; ++j)
    if ((a + Rational(static_cast<long>(j))).is_zero())
      throw PoleCrossing("Gamma(a+m)/Gamma(a) crosses a pole at a = " + a.str() + ", m = " + std::to_string(m));
  return rising_factorial(a, m);
}

Rational binom_rational(const Rational& a, unsigned k) {
  Rational falling(1);
  for (unsigned j = 0; j < k; ++j) falling *= a - Rational(static_cast<long>(j));
  return falling / factorial(k);
}

GegenParam::GegenParam(Rational lambda) : lambda_(std::move(lambda)) {
  if (lambda_ <= Rational(-1, 2))
    throw InvalidWeight("lambda must exceed -1/2, got " + lambda_.str());
  if (lambda_.is_zero()) throw InvalidParameter("lambda must be nonzero");
}

}  // namespace gegen
