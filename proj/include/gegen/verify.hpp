#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gegen/coeffs.hpp"
#include "gegen/exactnum.hpp"

namespace gegen {

/// Which reading of a printed formula a verification run evaluates.
enum class Reading {
  Corrected,     // the form that should hold exactly
  AsPrinted,     // literal printed form
  AsPrintedAlt,  // second plausible printed reading (literal power / Pochhammer)
};

const char* reading_name(Reading r);

/// Exact rational, or a double from the float backend.
using ErrataValue = std::variant<Rational, double>;

/// One coefficient where a closed form disagrees with the projection oracle.
struct ErrataRecord {
  std::string identity;  // e.g. "product/as_printed"
  std::string location;  // human-readable anchor of the formula under test
  Rational lambda;
  unsigned n = 0;
  unsigned k = 0;                      // coefficient index (derivative order for Family::Derivative)
  std::optional<unsigned> factor_k;    // Product only: source C_{n-k} C_k
  ErrataValue printed_value;
  ErrataValue oracle_value;
  ErrataValue ratio_or_diff;
  bool is_ratio = true;  // false: printed - oracle (oracle is zero)
};

/// Total order used to merge worker results deterministically.
bool errata_less(const ErrataRecord& a, const ErrataRecord& b);

struct FamilyReport {
  Family family;
  Reading reading;
  std::size_t cells = 0;
  std::size_t passed = 0;
  std::vector<ErrataRecord> errata;

  std::size_t failed() const { return cells - passed; }
};

/// Checks a closed-form family against the projection oracle for every
/// (lambda, n[, k]) cell with n <= nmax. Mismatches are returned as data.
/// Cells run on up to `threads` workers (0: hardware concurrency); the
/// result does not depend on the worker count.
FamilyReport verify_family(Family family, Reading reading, const std::vector<Rational>& lambdas, unsigned nmax,
                           unsigned threads = 1);

/// Checks the k-th derivative constant: printed 2^k lambda^k (AsPrinted) or
/// 2^k (lambda)_k (Corrected) against the constant observed by formal differentiation.
std::optional<ErrataRecord> derivative_erratum(const GegenParam& param, unsigned n, unsigned k, Reading reading);

}  // namespace gegen
