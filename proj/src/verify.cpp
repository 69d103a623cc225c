#include "gegen/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "gegen/expansions.hpp"
#include "gegen/gegenbauer.hpp"
#include "gegen/weightspace.hpp"

namespace gegen {

namespace {

struct Cell {
  Rational lambda;
  unsigned n;
  unsigned k;  // factor k (Product) or derivative order (Derivative); 0 otherwise
};

struct CellResult {
  std::vector<ErrataRecord> errata;
};

std::string location_of(Family f, Reading r) {
  switch (f) {
    case Family::Monomial: return "monomial expansion x^n = sum d_k C_k";
    case Family::Bernoulli: return "Bernoulli expansion theorem B_n(x)/n! = Gamma(lambda) sum ...";
    case Family::Euler: return "Euler expansion E_n(x)/n! = Gamma(lambda) sum ...";
    case Family::Product:
      if (r == Reading::Corrected) return "product linearization, leading constant 2";
      if (r == Reading::AsPrinted) return "product linearization theorem, leading constant 2^(lambda+1)";
      return "product linearization theorem, 2^(lambda+1) with (2lambda+k)^m";
    case Family::SelfConnection:
      if (r == Reading::Corrected) return "self-connection, unit vector from orthogonality";
      if (r == Reading::AsPrinted) return "self-connection theorem, lambda^k(k+lambda)2^(2k+1)...";
      return "self-connection theorem with (lambda)_k for lambda^k";
    case Family::Derivative:
      if (r == Reading::Corrected) return "k-th derivative, 2^k (lambda)_k C_{n-k}^(lambda+k)";
      return "k-th derivative, 2^k lambda^k C_{n-k}^(lambda+k)";
    case Family::Custom: break;
  }
  return "custom";
}

std::string identity_of(Family f, Reading r) { return std::string(family_name(f)) + "/" + reading_name(r); }

ErrataRecord exact_record(const std::string& identity, const std::string& location, const Cell& c, unsigned k,
                          const Rational& printed, const Rational& oracle) {
  ErrataRecord rec;
  rec.identity = identity;
  rec.location = location;
  rec.lambda = c.lambda;
  rec.n = c.n;
  rec.k = k;
  rec.printed_value = printed;
  rec.oracle_value = oracle;
  if (oracle.is_zero()) {
    rec.ratio_or_diff = printed - oracle;
    rec.is_ratio = false;
  } else {
    rec.ratio_or_diff = printed / oracle;
  }
  return rec;
}

void compare_exact(const std::vector<Rational>& printed, const std::vector<Rational>& oracle,
                   const std::string& identity, const std::string& location, const Cell& c,
                   std::optional<unsigned> factor, std::vector<ErrataRecord>& out) {
  for (std::size_t k = 0; k < oracle.size(); ++k) {
    const Rational p = k < printed.size() ? printed[k] : Rational(0);
    if (p == oracle[k]) continue;
    auto rec = exact_record(identity, location, c, static_cast<unsigned>(k), p, oracle[k]);
    rec.factor_k = factor;
    out.push_back(std::move(rec));
  }
}

// Float-backend comparison: relative 1e-10, or absolute 1e-13 at exact zeros.
void compare_float(const std::vector<double>& printed, const std::vector<Rational>& oracle,
                   const std::string& identity, const std::string& location, const Cell& c,
                   std::optional<unsigned> factor, std::vector<ErrataRecord>& out) {
  for (std::size_t k = 0; k < oracle.size(); ++k) {
    const double p = printed[k];
    const double o = oracle[k].to_double();
    const bool agree = oracle[k].is_zero() ? std::abs(p) <= 1e-13 : std::abs(p - o) <= 1e-10 * std::abs(o);
    if (agree) continue;
    ErrataRecord rec;
    rec.identity = identity;
    rec.location = location;
    rec.lambda = c.lambda;
    rec.n = c.n;
    rec.k = static_cast<unsigned>(k);
    rec.factor_k = factor;
    rec.printed_value = p;
    rec.oracle_value = oracle[k];
    if (oracle[k].is_zero()) {
      rec.ratio_or_diff = p;
      rec.is_ratio = false;
    } else {
      rec.ratio_or_diff = p / o;
    }
    out.push_back(std::move(rec));
  }
}

ProductVariant product_variant(Reading r) {
  switch (r) {
    case Reading::Corrected: return ProductVariant::Corrected;
    case Reading::AsPrinted: return ProductVariant::AsPrinted;
    case Reading::AsPrintedAlt: return ProductVariant::AsPrintedLiteralPower;
  }
  return ProductVariant::Corrected;
}

SelfVariant self_variant(Reading r) {
  switch (r) {
    case Reading::Corrected: return SelfVariant::OracleDelta;
    case Reading::AsPrinted: return SelfVariant::AsPrinted;
    case Reading::AsPrintedAlt: return SelfVariant::AsPrintedPochhammer;
  }
  return SelfVariant::OracleDelta;
}

CellResult run_cell(Family family, Reading reading, const Cell& c) {
  CellResult res;
  const GegenParam param(c.lambda);
  const std::string identity = identity_of(family, reading);
  const std::string location = location_of(family, reading);

  if (family == Family::Derivative) {
    if (auto rec = derivative_erratum(param, c.n, c.k, reading)) res.errata.push_back(std::move(*rec));
    return res;
  }

  const Poly src = family_source(family, param, c.n, c.k);
  const CoeffVector oracle = project(src, param, c.n);
  const std::optional<unsigned> factor =
      family == Family::Product ? std::optional<unsigned>(c.k) : std::nullopt;

  switch (family) {
    case Family::Monomial:
    case Family::Bernoulli:
    case Family::Euler: {
      const CoeffVector closed = family == Family::Monomial    ? monomial_coeffs(param, c.n)
                                 : family == Family::Bernoulli ? bernoulli_coeffs(param, c.n)
                                                               : euler_coeffs(param, c.n);
      compare_exact(closed.d, oracle.d, identity, location, c, factor, res.errata);
      const CoeffVector functional = prop1_coeffs(src, param, c.n);
      compare_exact(functional.d, oracle.d, std::string(family_name(family)) + "/prop1",
                    "Rodrigues coefficient functional", c, factor, res.errata);
      break;
    }
    case Family::Product: {
      const ProductVariant v = product_variant(reading);
      if (v == ProductVariant::Corrected || c.lambda.is_integer()) {
        compare_exact(product_coeffs(param, c.n, c.k, v).d, oracle.d, identity, location, c, factor, res.errata);
      } else {
        compare_float(product_coeffs_scaled(param, c.n, c.k, v), oracle.d, identity, location, c,
                      factor, res.errata);
      }
      break;
    }
    case Family::SelfConnection:
      compare_exact(self_connection_coeffs(param, c.n, self_variant(reading)).d, oracle.d, identity, location, c,
                    factor, res.errata);
      break;
    case Family::Custom:
    case Family::Derivative: break;
  }
  return res;
}

std::vector<Cell> make_cells(Family family, const std::vector<Rational>& lambdas, unsigned nmax) {
  std::vector<Cell> cells;
  for (const auto& lam : lambdas) {
    for (unsigned n = 0; n <= nmax; ++n) {
      if (family == Family::Product || family == Family::Derivative) {
        for (unsigned k = 0; k <= n; ++k) cells.push_back({lam, n, k});
      } else {
        cells.push_back({lam, n, 0});
      }
    }
  }
  return cells;
}

}  // namespace

const char* reading_name(Reading r) {
  switch (r) {
    case Reading::Corrected: return "corrected";
    case Reading::AsPrinted: return "as_printed";
    case Reading::AsPrintedAlt: return "as_printed_alt";
  }
  return "unknown";
}

bool errata_less(const ErrataRecord& a, const ErrataRecord& b) {
  if (a.identity != b.identity) return a.identity < b.identity;
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  if (a.n != b.n) return a.n < b.n;
  if (a.factor_k != b.factor_k) return a.factor_k < b.factor_k;
  return a.k < b.k;
}

std::optional<ErrataRecord> derivative_erratum(const GegenParam& param, unsigned n, unsigned k, Reading reading) {
  const Rational& lam = param.lambda();
  const Rational printed = reading == Reading::Corrected ? pow(Rational(2), k) * rising_factorial(lam, k)
                                                         : pow(Rational(2), k) * pow(lam, k);
  const Rational observed = derivative_constant_observed(param, n, k);
  if (printed == observed) return std::nullopt;
  const Cell c{lam, n, k};
  return exact_record(identity_of(Family::Derivative, reading), location_of(Family::Derivative, reading), c, k,
                      printed, observed);
}

FamilyReport verify_family(Family family, Reading reading, const std::vector<Rational>& lambdas, unsigned nmax,
                           unsigned threads) {
  for (const auto& lam : lambdas) (void)GegenParam(lam);  // reject bad grids before any work
  if (family == Family::Custom) throw InvalidParameter("family 'custom' cannot be verified");

  const std::vector<Cell> cells = make_cells(family, lambdas, nmax);
  std::vector<CellResult> results(cells.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cells.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = run_cell(family, reading, cells[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  FamilyReport report{family, reading, cells.size(), 0, {}};
  for (auto& r : results) {
    if (r.errata.empty()) ++report.passed;
    for (auto& e : r.errata) report.errata.push_back(std::move(e));
  }
  std::stable_sort(report.errata.begin(), report.errata.end(), errata_less);
  return report;
}

}  // namespace gegen
