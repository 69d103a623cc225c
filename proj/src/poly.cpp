#include "gegen/poly.hpp"

#include <ostream>

namespace gegen {

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly differentiate(const Poly& p, unsigned k) {
  const auto c = p.coeffs();
  if (static_cast<int>(k) > p.degree()) return {};
  std::vector<Rational> out(c.size() - k);
  for (std::size_t i = k; i < c.size(); ++i) {
    // i (i-1) ... (i-k+1)
    Rational f(1);
    for (unsigned j = 0; j < k; ++j) f *= Rational(static_cast<long>(i - j));
    out[i - k] = c[i] * f;
  }
  return Poly(std::move(out));
}

Poly compose_affine(const Poly& p, const Rational& a, const Rational& b) {
  // Horner in the polynomial ring: acc <- acc * (a x + b) + c_i
  const Poly lin({b, a});
  Poly acc;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + Poly::constant(*it);
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational c = p[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational m = abs(c);
    if (i == 0 || m != Rational(1)) os << m;
    if (i > 0) os << (i == 0 || m != Rational(1) ? "*" : "") << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os;
}

}  // namespace gegen
