#pragma once

#include <stdexcept>
#include <string>

namespace gegen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter outside its admissible set (e.g. lambda == 0, k > n).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Weight exponent lambda - 1/2 + j is not integrable on [-1, 1].
class InvalidWeight : public Error {
 public:
  using Error::Error;
};

// A Gamma ratio Gamma(a+m)/Gamma(a) would step across a pole.
class PoleCrossing : public Error {
 public:
  using Error::Error;
};

class DegenerateRatio : public Error {
 public:
  using Error::Error;
};

class DegreeUnderflow : public Error {
 public:
  using Error::Error;
};

class InvalidPair : public Error {
 public:
  using Error::Error;
};

// Requested value is not a rational number (e.g. 2^(lambda+1) for non-integer lambda).
class NotExact : public Error {
 public:
  using Error::Error;
};

// An internal cross-check between two exact routes failed.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace gegen
