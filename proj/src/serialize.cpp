#include "gegen/serialize.hpp"

#include <cstdio>
#include <ostream>

namespace gegen {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_string(const ErrataValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->str();
  return format_double(std::get<double>(v));
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidParameter("polynomial JSON must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw InvalidParameter("polynomial coefficients must be strings");
    c.push_back(Rational::parse(e.get<std::string>()));
  }
  return Poly(std::move(c));
}

Json coeffs_to_json(const CoeffVector& v, const TableExtras& extras) {
  Json j;
  j["family"] = family_name(v.family);
  j["lambda"] = v.param.lambda().str();
  j["n"] = v.n;
  j["method"] = method_name(v.method);
  if (extras.variant) j["variant"] = *extras.variant;
  if (extras.factor_k) j["factor_k"] = *extras.factor_k;
  Json arr = Json::array();
  for (std::size_t k = 0; k < v.d.size(); ++k) arr.push_back(Json{{"k", k}, {"value", v.d[k].str()}});
  j["coeffs"] = std::move(arr);
  return j;
}

CoeffVector coeffs_from_json(const Json& j) {
  try {
    const GegenParam param(Rational::parse(j.at("lambda").get<std::string>()));
    const unsigned n = j.at("n").get<unsigned>();
    const std::string method = j.at("method").get<std::string>();
    Method m;
    if (method == "closed_form") m = Method::ClosedForm;
    else if (method == "projection") m = Method::Projection;
    else if (method == "prop1") m = Method::Prop1;
    else throw InvalidParameter("unknown method '" + method + "'");
    CoeffVector v{param, n, std::vector<Rational>(n + 1), m, parse_family(j.at("family").get<std::string>())};
    if (j.contains("factor_k")) v.factor_k = j.at("factor_k").get<unsigned>();
    for (const auto& e : j.at("coeffs")) {
      const auto k = e.at("k").get<std::size_t>();
      if (k > n) throw InvalidParameter("coefficient index beyond n");
      v.d[k] = Rational::parse(e.at("value").get<std::string>());
    }
    return v;
  } catch (const Json::exception& e) {
    throw InvalidParameter(std::string("malformed coefficient table: ") + e.what());
  }
}

void write_coeffs_csv(std::ostream& os, const CoeffVector& v) {
  os << "k,value\n";
  for (std::size_t k = 0; k < v.d.size(); ++k) os << k << "," << v.d[k].str() << "\n";
}

Json errata_to_json(const ErrataRecord& r) {
  Json j;
  j["identity"] = r.identity;
  j["location"] = r.location;
  j["lambda"] = r.lambda.str();
  j["n"] = r.n;
  if (r.factor_k) j["factor_k"] = *r.factor_k;
  j["k"] = r.k;
  j["backend"] = std::holds_alternative<double>(r.printed_value) ? "float" : "exact";
  j["printed_value"] = to_string(r.printed_value);
  j["oracle_value"] = to_string(r.oracle_value);
  j["ratio_or_diff"] = to_string(r.ratio_or_diff);
  j["kind"] = r.is_ratio ? "ratio" : "diff";
  return j;
}

}  // namespace gegen
