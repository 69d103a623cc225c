#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gegen/cli.hpp"
#include "gegen/expansions.hpp"
#include "gegen/serialize.hpp"
#include "gegen/weightspace.hpp"

using gegen::Rational;
namespace cli = gegen::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> coeff_values(const std::string& json_text) {
  const auto j = gegen::Json::parse(json_text);
  std::vector<std::string> out;
  for (const auto& c : j["coeffs"]) out.push_back(c["value"].get<std::string>());
  return out;
}

}  // namespace

TEST_CASE("expand examples") {
  auto r = run({"expand", "--family", "monomial", "--lambda", "1", "--n", "2", "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(coeff_values(r.out) == std::vector<std::string>{"1/4", "0", "1/4"});

  r = run({"expand", "--family", "bernoulli", "--lambda", "1/2", "--n", "0", "--format", "json"});
  CHECK(coeff_values(r.out) == std::vector<std::string>{"1"});

  r = run({"expand", "--family", "product", "--lambda", "1", "--n", "2", "--k", "1", "--variant", "corrected",
           "--format", "json"});
  CHECK(coeff_values(r.out) == std::vector<std::string>{"1", "0", "1"});

  r = run({"expand", "--family", "bernoulli", "--lambda", "1/2", "--n", "0", "--format", "csv"});
  CHECK(r.out == "k,value\n0,1\n");
}

TEST_CASE("expand methods agree") {
  for (const char* method : {"closed_form", "projection", "prop1"}) {
    const auto r = run({"expand", "--family", "euler", "--lambda", "7/3", "--n", "5", "--method", method, "--format",
                        "json"});
    CHECK(r.code == cli::kOk);
    CHECK(coeff_values(r.out) ==
          std::vector<std::string>{"-53/208", "405/11648", "9/128", "243/13832", "-243/11648", "729/221312"});
  }
}

TEST_CASE("expand argument errors") {
  CHECK(run({"expand", "--family", "monomial", "--lambda", "0", "--n", "2"}).code == cli::kInvalidArgs);
  CHECK(run({"expand", "--family", "monomial", "--lambda", "-3/4", "--n", "2"}).code == cli::kInvalidWeight);
  CHECK(run({"expand", "--family", "nonsense", "--lambda", "1", "--n", "2"}).code == cli::kInvalidArgs);
  CHECK(run({"expand", "--family", "product", "--lambda", "1", "--n", "2", "--k", "3"}).code == cli::kInvalidArgs);
  CHECK(run({"bogus"}).code == cli::kInvalidArgs);
}

TEST_CASE("JSON coefficient tables round-trip through reconstruction") {
  for (const char* fam : {"monomial", "bernoulli", "euler", "self"}) {
    const auto r = run({"expand", "--family", fam, "--lambda", "3/2", "--n", "7", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    const auto table = gegen::coeffs_from_json(gegen::Json::parse(r.out));
    CHECK(table.param.lambda() == Rational(3, 2));
    CHECK(gegen::reconstruct(table) ==
          gegen::family_source(gegen::parse_family(fam), gegen::GegenParam(Rational(3, 2)), 7));
    const std::string variant = std::string(fam) == "self" ? "oracle_delta" : "";
    CHECK(gegen::coeffs_to_json(table, {variant.empty() ? std::nullopt : std::optional(variant), std::nullopt}).dump() ==
          gegen::Json::parse(r.out).dump());
  }
  CHECK_THROWS_AS(gegen::coeffs_from_json(gegen::Json::parse(R"({"family":"monomial"})")), gegen::InvalidParameter);
}

TEST_CASE("float backend expand for decimal lambda") {
  const auto r = run({"expand", "--family", "monomial", "--lambda", "1.5", "--n", "2", "--format", "json"});
  CHECK(r.code == cli::kOk);
  const auto v = coeff_values(r.out);
  REQUIRE(v.size() == 3);
  CHECK(std::stod(v[0]) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::stod(v[2]) == doctest::Approx(2.0 / 15).epsilon(1e-12));
}

TEST_CASE("eval") {
  CHECK(run({"eval", "--lambda", "1", "--n", "2", "--x", "1"}).out == "3\n");
  for (const char* route : {"explicit", "recurrence", "jacobi", "rodrigues", "series"})
    CHECK(run({"eval", "--lambda", "1/2", "--n", "3", "--x", "1/2", "--route", route}).out == "-7/16\n");
  CHECK(run({"eval", "--lambda", "-1", "--n", "3", "--x", "0"}).code == cli::kInvalidWeight);
}

TEST_CASE("quad examples") {
  auto r = run({"quad", "--lambda", "0.5", "--m", "2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("node,weight\n-0.57735026918962", 0) == 0);
  r = run({"quad", "--lambda", "1.0", "--m", "1"});
  CHECK(r.out == "node,weight\n0,1.5707963267948966\n");
  CHECK(run({"quad", "--lambda", "-0.6", "--m", "2"}).code == cli::kInvalidWeight);
  CHECK(run({"quad", "--lambda", "1", "--m", "0"}).code == cli::kInvalidArgs);
}

TEST_CASE("config parsing") {
  std::istringstream in(
      "# grid\n"
      "lambdas = 1/2, 2\n"
      "n_max = 5   # small\n"
      "families = monomial, self\n"
      "variant.self = as-printed\n"
      "format = json\n");
  const auto cfg = cli::parse_config(in);
  CHECK(cfg.lambdas == std::vector<Rational>{Rational(1, 2), Rational(2)});
  CHECK(cfg.n_max == 5);
  CHECK(cfg.families == std::vector<gegen::Family>{gegen::Family::Monomial, gegen::Family::SelfConnection});
  CHECK(cfg.self_reading == gegen::Reading::AsPrinted);
  CHECK(cfg.product_reading == gegen::Reading::Corrected);
  CHECK(cfg.format == cli::OutputFormat::Json);

  std::istringstream bad("colour = blue\n");
  CHECK_THROWS_AS(cli::parse_config(bad), gegen::InvalidParameter);
  std::istringstream zero("lambdas = 0, 1\n");
  CHECK_THROWS_AS(cli::validate(cli::parse_config(zero)), gegen::InvalidParameter);
  CHECK(cli::parse_reading("as-printed") == gegen::Reading::AsPrinted);
  CHECK_THROWS_AS(cli::parse_reading("maybe"), gegen::InvalidParameter);
}

TEST_CASE("verify exit codes") {
  auto cfg = cli::RunConfig::defaults();
  cfg.n_max = 6;
  std::ostringstream out, err;
  CHECK(cli::run_verify(cfg, out, err) == cli::kOk);
  CHECK(out.str().find("result: PASS") != std::string::npos);

  const auto self = run({"verify", "--families", "self", "--variant", "as-printed", "--n-max", "6"});
  CHECK(self.code == cli::kOk);
  CHECK(self.out.find("errata_total: 0") == std::string::npos);

  CHECK(run({"verify", "--lambdas", "0,1"}).code == cli::kInvalidArgs);
}

TEST_CASE("verify writes an errata file") {
  const auto path = std::filesystem::temp_directory_path() / "gegen_test_errata.jsonl";
  std::filesystem::remove(path);
  const auto r = run({"verify", "--families", "product", "--variant", "as-printed", "--lambdas", "2", "--n-max", "3",
                      "--report-errata", path.string()});
  CHECK(r.code == cli::kOk);
  std::ifstream in(path);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const auto j = gegen::Json::parse(line);
    CHECK(j["identity"] == "product/as_printed");
    CHECK(j["ratio_or_diff"] == "4");
    ++count;
  }
  CHECK(count > 0);
  std::filesystem::remove(path);
}

TEST_CASE("verify output is deterministic") {
  auto cfg = cli::RunConfig::defaults();
  cfg.n_max = 8;
  cfg.self_reading = gegen::Reading::AsPrinted;
  for (auto fmt : {cli::OutputFormat::Text, cli::OutputFormat::Json, cli::OutputFormat::Csv}) {
    cfg.format = fmt;
    std::ostringstream a, b, err;
    cli::run_verify(cfg, a, err);
    cli::run_verify(cfg, b, err);
    CHECK(a.str() == b.str());
  }
}
