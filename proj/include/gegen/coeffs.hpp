#pragma once

#include <string>
#include <vector>

#include "gegen/exactnum.hpp"

namespace gegen {

enum class Method { ClosedForm, Projection, Prop1 };

enum class Family { Custom, Monomial, Bernoulli, Euler, Product, SelfConnection, Derivative };

const char* method_name(Method m);
const char* family_name(Family f);
/// Inverse of family_name; throws InvalidParameter for unknown names.
/// Also accepts the short CLI spelling "self".
Family parse_family(const std::string& name);

/// Coefficients d_0..d_n of a polynomial in the basis C_k^(lambda).
struct CoeffVector {
  GegenParam param;
  unsigned n;
  std::vector<Rational> d;
  Method method;
  Family family = Family::Custom;
  unsigned factor_k = 0;  // Product only: source is C_{n-k} C_k
};

}  // namespace gegen
