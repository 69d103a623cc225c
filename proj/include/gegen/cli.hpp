#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gegen/coeffs.hpp"
#include "gegen/exactnum.hpp"
#include "gegen/verify.hpp"

namespace gegen::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalidArgs = 2, kInvalidWeight = 3 };

enum class OutputFormat { Json, Csv, Text };

/// Settings of a verification run; also the schema of the key = value config file.
struct RunConfig {
  std::vector<Rational> lambdas;
  unsigned n_max = 12;
  std::vector<Family> families;
  OutputFormat format = OutputFormat::Text;
  Reading product_reading = Reading::Corrected;
  Reading self_reading = Reading::Corrected;
  Reading derivative_reading = Reading::Corrected;
  std::optional<std::string> report_errata;

  /// lambda in {1/2, 1, 3/2, 2, 5/2, 7/3}, n <= 12, families monomial bernoulli euler product self.
  static RunConfig defaults();
};

/// Reads "key = value" lines; '#' starts a comment. Keys: lambdas, n_max,
/// families, format, variant, variant.product, variant.self,
/// variant.derivative, report_errata. Throws InvalidParameter on unknown keys
/// or unparsable values; lambda validity is checked by validate().
RunConfig parse_config(std::istream& in, RunConfig base = RunConfig::defaults());

/// Throws InvalidParameter unless every lambda is a valid order and n_max <= 64.
void validate(const RunConfig& cfg);

Reading parse_reading(const std::string& name);
OutputFormat parse_format(const std::string& name);

/// Worker count from GEGEN_THREADS, else hardware concurrency.
unsigned thread_count();

/// Runs a full verification and writes the report to `out`. Returns the exit code.
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Entry point behind the `gegen` executable: expand, verify, quad, eval.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gegen::cli
