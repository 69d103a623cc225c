#include "gegen/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gegen/expansions.hpp"
#include "gegen/gegenbauer.hpp"
#include "gegen/numeric.hpp"
#include "gegen/serialize.hpp"
#include "gegen/weightspace.hpp"

namespace gegen::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Rational> parse_lambdas(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split_list(s)) out.push_back(Rational::parse(item));
  if (out.empty()) throw InvalidParameter("empty lambda list");
  return out;
}

std::vector<Family> parse_families(const std::string& s) {
  std::vector<Family> out;
  for (const auto& item : split_list(s)) {
    const Family f = parse_family(item);
    if (f == Family::Custom) throw InvalidParameter("family 'custom' cannot be verified");
    out.push_back(f);
  }
  if (out.empty()) throw InvalidParameter("empty family list");
  return out;
}

unsigned parse_unsigned(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw InvalidParameter(std::string("invalid ") + what + ": '" + s + "'");
  }
}

bool looks_decimal(const std::string& s) { return s.find_first_of(".eE") != std::string::npos; }

// Decimal strings (and "a/b") to double; throws InvalidParameter.
double parse_real(const std::string& s) {
  if (!looks_decimal(s)) return Rational::parse(s).to_double();
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidParameter("not a number: '" + s + "'");
  }
}

// Source polynomial of a family with double coefficients, for the float backend.
std::vector<double> float_source(Family family, double lambda, unsigned n, unsigned factor_k) {
  auto to_double = [](const Poly& p) {
    std::vector<double> out;
    for (const auto& c : p.coeffs()) out.push_back(c.to_double());
    return out;
  };
  auto gegen_coeffs = [lambda](unsigned deg) {
    std::vector<std::vector<double>> c{{1.0}, {0.0, 2.0 * lambda}};
    for (unsigned m = 2; m <= deg; ++m) {
      std::vector<double> next(m + 1, 0.0);
      for (unsigned i = 0; i < m; ++i) next[i + 1] += 2.0 * (m + lambda - 1.0) * c[m - 1][i] / m;
      for (unsigned i = 0; i + 1 < m; ++i) next[i] -= (m + 2.0 * lambda - 2.0) * c[m - 2][i] / m;
      c.push_back(std::move(next));
    }
    c.resize(deg + 1);
    return c;
  };
  switch (family) {
    case Family::Monomial:
    case Family::Bernoulli:
    case Family::Euler: {
      const GegenParam any(Rational(1));  // these sources do not depend on lambda
      return to_double(family_source(family, any, n));
    }
    case Family::Product: {
      const auto c = gegen_coeffs(n);
      const auto& a = c[n - factor_k];
      const auto& b = c[factor_k];
      std::vector<double> out(a.size() + b.size() - 1, 0.0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
      return out;
    }
    case Family::SelfConnection: return gegen_coeffs(n)[n];
    default: break;
  }
  throw InvalidParameter(std::string("family '") + family_name(family) + "' has no float source");
}

ProductVariant product_variant_from(const std::string& s) {
  const Reading r = parse_reading(s);
  return r == Reading::Corrected  ? ProductVariant::Corrected
         : r == Reading::AsPrinted ? ProductVariant::AsPrinted
                                   : ProductVariant::AsPrintedLiteralPower;
}

SelfVariant self_variant_from(const std::string& s) {
  const Reading r = parse_reading(s);
  return r == Reading::Corrected  ? SelfVariant::OracleDelta
         : r == Reading::AsPrinted ? SelfVariant::AsPrinted
                                   : SelfVariant::AsPrintedPochhammer;
}

struct ExpandArgs {
  std::string family;
  std::string lambda;
  unsigned n = 0;
  unsigned k = 0;
  std::string method = "closed_form";
  std::optional<std::string> variant;
  std::string format = "json";
};

int cmd_expand_float(const ExpandArgs& a, Family family, std::ostream& out) {
  const double lambda = parse_real(a.lambda);
  if (!(lambda > -0.5)) throw InvalidWeight("lambda must exceed -1/2");
  if (lambda == 0.0) throw InvalidParameter("lambda must be nonzero");
  std::vector<double> d;
  std::string method = a.method;
  std::optional<std::string> variant;
  if (method == "closed_form" && family == Family::Product) {
    const ProductVariant v = product_variant_from(a.variant.value_or("corrected"));
    variant = product_variant_name(v);
    d = product_coeffs_f64(lambda, a.n, a.k, v);
  } else if (method == "projection" || method == "closed_form") {
    // Only the projection oracle is defined for every family at real lambda.
    method = "projection";
    d = numeric::float_project(float_source(family, lambda, a.n, a.k), lambda, a.n);
  } else {
    throw InvalidParameter("method '" + a.method + "' needs an exact rational lambda");
  }
  if (parse_format(a.format) == OutputFormat::Csv) {
    out << "k,value\n";
    for (std::size_t k = 0; k < d.size(); ++k) out << k << "," << format_double(d[k]) << "\n";
    return kOk;
  }
  Json j;
  j["family"] = family_name(family);
  j["lambda"] = format_double(lambda);
  j["n"] = a.n;
  j["method"] = method;
  j["backend"] = "float";
  if (variant) j["variant"] = *variant;
  if (family == Family::Product) j["factor_k"] = a.k;
  Json arr = Json::array();
  for (std::size_t k = 0; k < d.size(); ++k) arr.push_back(Json{{"k", k}, {"value", format_double(d[k])}});
  j["coeffs"] = std::move(arr);
  out << j.dump() << "\n";
  return kOk;
}

int cmd_expand(const ExpandArgs& a, std::ostream& out) {
  const Family family = parse_family(a.family);
  if (family == Family::Custom || family == Family::Derivative)
    throw InvalidParameter("family '" + a.family + "' has no coefficient table");
  if (family == Family::Product && a.k > a.n) throw InvalidPair("product needs k <= n");
  if (looks_decimal(a.lambda)) return cmd_expand_float(a, family, out);

  const GegenParam param(Rational::parse(a.lambda));
  TableExtras extras;
  CoeffVector v{param, a.n, {}, Method::ClosedForm, family};
  if (a.method == "closed_form") {
    switch (family) {
      case Family::Monomial: v = monomial_coeffs(param, a.n); break;
      case Family::Bernoulli: v = bernoulli_coeffs(param, a.n); break;
      case Family::Euler: v = euler_coeffs(param, a.n); break;
      case Family::Product: {
        const ProductVariant pv = product_variant_from(a.variant.value_or("corrected"));
        extras.variant = product_variant_name(pv);
        v = product_coeffs(param, a.n, a.k, pv);
        break;
      }
      case Family::SelfConnection: {
        const SelfVariant sv = self_variant_from(a.variant.value_or("corrected"));
        extras.variant = self_variant_name(sv);
        v = self_connection_coeffs(param, a.n, sv);
        break;
      }
      default: break;
    }
  } else if (a.method == "projection" || a.method == "prop1") {
    const Poly src = family_source(family, param, a.n, a.k);
    v = a.method == "projection" ? project(src, param, a.n) : prop1_coeffs(src, param, a.n);
    v.family = family;
    v.factor_k = a.k;
  } else {
    throw InvalidParameter("unknown method '" + a.method + "'");
  }
  if (family == Family::Product) extras.factor_k = a.k;

  if (parse_format(a.format) == OutputFormat::Csv) {
    write_coeffs_csv(out, v);
  } else {
    out << coeffs_to_json(v, extras).dump() << "\n";
  }
  return kOk;
}

struct EvalArgs {
  std::string lambda;
  unsigned n = 0;
  std::string x;
  std::string route = "recurrence";
  bool poly = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (looks_decimal(a.lambda) || looks_decimal(a.x)) {
    if (a.poly) throw InvalidParameter("--poly needs an exact rational lambda");
    const double lambda = parse_real(a.lambda);
    if (!(lambda > -0.5)) throw InvalidWeight("lambda must exceed -1/2");
    if (lambda == 0.0) throw InvalidParameter("lambda must be nonzero");
    out << format_double(numeric::eval_gegen_f64(lambda, a.n, parse_real(a.x))) << "\n";
    return kOk;
  }
  const GegenParam param(Rational::parse(a.lambda));
  Poly p;
  if (a.route == "explicit") p = gegen_explicit(param, a.n).poly;
  else if (a.route == "recurrence") p = gegen_recurrence(param, a.n).poly;
  else if (a.route == "jacobi") p = gegen_from_jacobi(param, a.n).poly;
  else if (a.route == "rodrigues") p = rodrigues_form(param, a.n);
  else if (a.route == "series") {
    if (a.poly) throw InvalidParameter("route 'series' yields values, not polynomials");
    out << gegen_series_coeff(param, Rational::parse(a.x), a.n).back().str() << "\n";
    return kOk;
  } else {
    throw InvalidParameter("unknown route '" + a.route + "'");
  }
  if (a.poly) {
    out << poly_to_json(p).dump() << "\n";
  } else {
    out << p.eval(Rational::parse(a.x)).str() << "\n";
  }
  return kOk;
}

int cmd_quad(const std::string& lambda_text, unsigned m, std::ostream& out) {
  const double lambda = parse_real(lambda_text);
  numeric::write_rule_csv(out, numeric::gauss_jacobi_rule(lambda, m));
  return kOk;
}

void report_text(std::ostream& out, const RunConfig& cfg, const std::vector<FamilyReport>& reports, bool ok) {
  out << "lambdas:";
  for (const auto& l : cfg.lambdas) out << " " << l.str();
  out << "\nn_max: " << cfg.n_max << "\n";
  std::size_t total = 0;
  for (const auto& r : reports) {
    out << family_name(r.family) << " " << reading_name(r.reading) << " cells=" << r.cells << " pass=" << r.passed
        << " fail=" << r.failed() << " errata=" << r.errata.size()
        << (r.reading == Reading::Corrected ? "" : " (informational)") << "\n";
    total += r.errata.size();
  }
  out << "errata_total: " << total << "\n";
  out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.lambdas = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(7, 3)};
  c.n_max = 12;
  c.families = {Family::Monomial, Family::Bernoulli, Family::Euler, Family::Product, Family::SelfConnection};
  return c;
}

Reading parse_reading(const std::string& name) {
  if (name == "corrected" || name == "oracle" || name == "oracle_delta" || name == "oracle-delta")
    return Reading::Corrected;
  if (name == "as-printed" || name == "as_printed") return Reading::AsPrinted;
  if (name == "as-printed-alt" || name == "as_printed_alt" || name == "as-printed-power" ||
      name == "as_printed_literal_power" || name == "as-printed-pochhammer" || name == "as_printed_pochhammer")
    return Reading::AsPrintedAlt;
  throw InvalidParameter("unknown variant '" + name + "'");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw InvalidParameter("unknown format '" + name + "'");
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  RunConfig cfg = std::move(base);
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidParameter("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "lambdas") cfg.lambdas = parse_lambdas(value);
    else if (key == "n_max") cfg.n_max = parse_unsigned(value, "n_max");
    else if (key == "families") cfg.families = parse_families(value);
    else if (key == "format") cfg.format = parse_format(value);
    else if (key == "variant") cfg.product_reading = cfg.self_reading = cfg.derivative_reading = parse_reading(value);
    else if (key == "variant.product") cfg.product_reading = parse_reading(value);
    else if (key == "variant.self") cfg.self_reading = parse_reading(value);
    else if (key == "variant.derivative") cfg.derivative_reading = parse_reading(value);
    else if (key == "report_errata") cfg.report_errata = value;
    else throw InvalidParameter("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.lambdas.empty()) throw InvalidParameter("no lambda values");
  for (const auto& l : cfg.lambdas) {
    try {
      (void)GegenParam(l);
    } catch (const Error& e) {
      throw InvalidParameter(std::string("invalid lambda in grid: ") + e.what());
    }
  }
  if (cfg.n_max > 64) throw InvalidParameter("n_max must be <= 64");
  if (cfg.families.empty()) throw InvalidParameter("no families selected");
}

unsigned thread_count() {
  if (const char* env = std::getenv("GEGEN_THREADS")) {
    try {
      const unsigned v = parse_unsigned(env, "GEGEN_THREADS");
      if (v > 0) return v;
    } catch (const InvalidParameter&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  }
  const unsigned threads = thread_count();
  std::vector<FamilyReport> reports;
  bool ok = true;
  for (Family f : cfg.families) {
    const Reading reading = f == Family::Product          ? cfg.product_reading
                            : f == Family::SelfConnection ? cfg.self_reading
                            : f == Family::Derivative     ? cfg.derivative_reading
                                                          : Reading::Corrected;
    reports.push_back(verify_family(f, reading, cfg.lambdas, cfg.n_max, threads));
    if (reading == Reading::Corrected && reports.back().failed() > 0) ok = false;
  }

  if (cfg.report_errata) {
    std::ofstream file(*cfg.report_errata, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *cfg.report_errata << "\n";
      return kInvalidArgs;
    }
    for (const auto& r : reports)
      for (const auto& e : r.errata) file << errata_to_json(e).dump() << "\n";
  }

  switch (cfg.format) {
    case OutputFormat::Text: report_text(out, cfg, reports, ok); break;
    case OutputFormat::Csv:
      out << "family,variant,cells,pass,fail,errata\n";
      for (const auto& r : reports)
        out << family_name(r.family) << "," << reading_name(r.reading) << "," << r.cells << "," << r.passed << ","
            << r.failed() << "," << r.errata.size() << "\n";
      break;
    case OutputFormat::Json: {
      Json j;
      Json lams = Json::array();
      for (const auto& l : cfg.lambdas) lams.push_back(l.str());
      j["lambdas"] = std::move(lams);
      j["n_max"] = cfg.n_max;
      Json fams = Json::array();
      for (const auto& r : reports)
        fams.push_back(Json{{"family", family_name(r.family)},
                            {"variant", reading_name(r.reading)},
                            {"cells", r.cells},
                            {"pass", r.passed},
                            {"fail", r.failed()},
                            {"errata", r.errata.size()}});
      j["families"] = std::move(fams);
      j["result"] = ok ? "PASS" : "FAIL";
      out << j.dump() << "\n";
      break;
    }
  }
  return ok ? kOk : kVerifyFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Gegenbauer expansions and identity verification", "gegen"};
  app.require_subcommand(1);

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Coefficient table of a polynomial family in the Gegenbauer basis");
  expand->add_option("--family", ex.family, "monomial | bernoulli | euler | product | self")->required();
  expand->add_option("--lambda", ex.lambda, "Order lambda: exact rational (\"3/2\") or decimal for the float backend")
      ->required();
  expand->add_option("--n", ex.n, "Degree")->required();
  expand->add_option("--k", ex.k, "Product factor index: C_{n-k} C_k");
  expand->add_option("--method", ex.method, "closed_form | projection | prop1");
  expand->add_option("--variant", ex.variant, "corrected | as-printed | as-printed-alt");
  expand->add_option("--format", ex.format, "json | csv");

  RunConfig cfg = RunConfig::defaults();
  std::string config_path, families, lambdas, variant, format;
  std::optional<unsigned> n_max;
  std::string errata_path;
  auto* verify = app.add_subcommand("verify", "Check closed forms against the projection oracle over a grid");
  verify->add_option("--config", config_path, "key = value config file");
  verify->add_option("--families", families, "Comma-separated families");
  verify->add_option("--lambdas", lambdas, "Comma-separated exact rationals");
  verify->add_option("--n-max", n_max, "Largest degree");
  verify->add_option("--variant", variant, "corrected | as-printed | as-printed-alt (all families)");
  verify->add_option("--format", format, "text | json | csv");
  verify->add_option("--report-errata", errata_path, "Write errata as JSON lines to this path");

  std::string quad_lambda;
  unsigned quad_m = 0;
  auto* quad = app.add_subcommand("quad", "Dump a Gauss rule for the weight (1-x^2)^(lambda-1/2) as CSV");
  quad->add_option("--lambda", quad_lambda, "Order lambda (decimal or rational)")->required();
  quad->add_option("--m", quad_m, "Number of nodes")->required();

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate C_n^(lambda) at x (exact for rational input)");
  eval->add_option("--lambda", ev.lambda, "Order lambda")->required();
  eval->add_option("--n", ev.n, "Degree")->required();
  eval->add_option("--x", ev.x, "Point");
  eval->add_option("--route", ev.route, "explicit | recurrence | jacobi | rodrigues | series");
  eval->add_flag("--poly", ev.poly, "Print the coefficient array instead of a value");

  std::vector<const char*> argv{"gegen"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  }

  try {
    if (*expand) return cmd_expand(ex, out);
    if (*quad) return cmd_quad(quad_lambda, quad_m, out);
    if (*eval) {
      if (ev.x.empty() && !ev.poly) throw InvalidParameter("--x is required unless --poly is given");
      return cmd_eval(ev, out);
    }
    if (*verify) {
      try {
        if (!config_path.empty()) {
          std::ifstream in(config_path);
          if (!in) throw InvalidParameter("cannot read config file '" + config_path + "'");
          cfg = parse_config(in, cfg);
        }
        if (!families.empty()) cfg.families = parse_families(families);
        if (!lambdas.empty()) cfg.lambdas = parse_lambdas(lambdas);
        if (n_max) cfg.n_max = *n_max;
        if (!variant.empty())
          cfg.product_reading = cfg.self_reading = cfg.derivative_reading = parse_reading(variant);
        if (!format.empty()) cfg.format = parse_format(format);
        if (!errata_path.empty()) cfg.report_errata = errata_path;
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidArgs;
      }
      return run_verify(cfg, out, err);
    }
  } catch (const InvalidWeight& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidWeight;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  }
  return kInvalidArgs;
}

}  // namespace gegen::cli
