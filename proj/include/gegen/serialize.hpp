#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "gegen/coeffs.hpp"
#include "gegen/poly.hpp"
#include "gegen/verify.hpp"

namespace gegen {

using Json = nlohmann::ordered_json;

/// 17 significant digits, shortest form ("%.17g").
std::string format_double(double v);

std::string to_string(const ErrataValue& v);

/// Array of coefficient strings, index = power.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Optional provenance for coefficient tables.
struct TableExtras {
  std::optional<std::string> variant;
  std::optional<unsigned> factor_k;
};

/// {"family", "lambda", "n", "method", ["variant", "factor_k",] "coeffs": [{"k", "value"}...]}
Json coeffs_to_json(const CoeffVector& v, const TableExtras& extras = {});
/// Throws InvalidParameter on a malformed table.
CoeffVector coeffs_from_json(const Json& j);

/// "k,value" header plus one row per coefficient.
void write_coeffs_csv(std::ostream& os, const CoeffVector& v);

Json errata_to_json(const ErrataRecord& r);

}  // namespace gegen
