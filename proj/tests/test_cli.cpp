#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "superchern/cli.hpp"
#include "superchern/errors.hpp"
#include "superchern/spec_file.hpp"

using namespace superchern;
using nlohmann::json;

namespace {

const std::string kData = SUPERCHERN_TEST_DATA;

std::string data(const char* name) { return kData + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  args.insert(args.begin(), "superchern");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / (std::string("superchern_") + name);
}

}  // namespace

TEST_CASE("chern") {
  auto r = run({"chern", data("running_example.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "1 - 1*dx1^dx2\n");

  r = run({"chern", data("zero_3_1.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "2\n");

  r = run({"chern", data("off_diagonal_c1.json"), "--mode", "numeric", "--point", "0,0", "--json"});
  CHECK(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc.at("mode") == "numeric");
  double worst = 0.0;
  for (const auto& degree : doc.at("degrees")) {
    for (const auto& term : degree) worst = std::max(worst, std::fabs(term.at("value").get<double>()));
  }
  CHECK(worst <= 1e-8);

  r = run({"chern", data("off_diagonal_c1.json")});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.find("numeric") != std::string::npos);

  r = run({"chern", data("running_example.json"), "--mode", "numeric"});
  CHECK(r.code == cli::kExitUsage);
  r = run({"chern", data("running_example.json"), "--mode", "numeric", "--point", "1"});
  CHECK(r.code == cli::kExitUsage);
  r = run({"chern", data("running_example.json"), "--mode", "fuzzy"});
  CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("chern json") {
  const auto r = run({"chern", data("running_example.json"), "--json"});
  REQUIRE(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc.at("text") == "1 - 1*dx1^dx2");
  CHECK(doc.at("degrees").size() == 3);
  CHECK(doc.at("degrees")[0][0].at("coeff") == "1");
  CHECK(doc.at("degrees")[2][0].at("dx") == json::array({1, 2}));
  CHECK(doc.at("degrees")[2][0].at("coeff") == "-1");
  // Stable under re-serialization and across runs.
  CHECK(json::parse(doc.dump(2)).dump(2) == doc.dump(2));
  CHECK(run({"chern", data("running_example.json"), "--json"}).out == r.out);
}

TEST_CASE("transport") {
  auto r = run({"transport", data("running_example.json"), "--point", "0.5,-1.5"});
  CHECK(r.code == cli::kExitOk);
  json doc = json::parse(r.out);
  for (const char* key : {"mode", "residual_constraint", "residual_ode", "terminal_gap", "ch_gap", "h", "point"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc.at("terminal_gap").get<double>() <= 1e-10);
  CHECK(doc.at("h").get<double>() == 1e-3);

  r = run({"transport", data("zero_3_1.json"), "--point", "1,2"});
  CHECK(r.code == cli::kExitOk);
  doc = json::parse(r.out);
  for (const char* key : {"residual_constraint", "residual_ode", "terminal_gap", "ch_gap"}) {
    CHECK(doc.at(key).get<double>() == 0.0);
  }

  r = run({"transport", data("running_example.json"), "--mode", "exact"});
  CHECK(r.code == cli::kExitOk);
  CHECK(json::parse(r.out).at("terminal_gap").get<double>() == 0.0);

  r = run({"transport", data("running_example.json"), "--point", "0,0", "--step", "0.3"});
  CHECK(r.code == cli::kExitUsage);

  const auto out_path = temp_path("transport.json");
  r = run({"transport", data("off_diagonal_c1.json"), "--point", "0,0", "--out", out_path.string()});
  CHECK(r.code == cli::kExitOk);
  std::ifstream f(out_path);
  REQUIRE(f.good());
  CHECK(json::parse(f) == json::parse(r.out));
  std::filesystem::remove(out_path);
}

TEST_CASE("verify") {
  for (const char* spec : {"running_example.json", "zero_3_1.json", "mixed_2_1.json", "off_diagonal_c1.json"}) {
    CAPTURE(spec);
    const auto r = run({"verify", data(spec)});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("PASS theorem") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  cli::Hooks corrupt;
  corrupt.corrupt_system = [](TransportSystem& sys) { sys.generator = sys.generator.scaled(2); };
  const auto r = run({"verify", data("running_example.json")}, corrupt);
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.out.find("FAIL theorem") != std::string::npos);
}

TEST_CASE("eval") {
  const auto r = run({"eval", data("running_example.json"), "--point", "1,2"});
  REQUIRE(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc.at("gap").get<double>() <= 1e-12);
  CHECK(run({"eval", data("off_diagonal_c1.json"), "--point", "0,0"}).code == cli::kExitOk);
}

TEST_CASE("exit codes for bad input") {
  for (const char* cmd : {"chern", "transport", "verify", "eval"}) {
    CAPTURE(cmd);
    std::vector<std::string> extra;
    if (std::string(cmd) != "verify") extra = {"--point", "0,0"};
    auto with = [&](const char* spec) {
      std::vector<std::string> args{cmd, data(spec)};
      args.insert(args.end(), extra.begin(), extra.end());
      return run(args);
    };
    CHECK(with("bad_json.json").code == cli::kExitUsage);
    CHECK(with("bad_expression.json").code == cli::kExitUsage);
    CHECK(with("missing.json").code == cli::kExitUsage);
    const auto parity = with("parity_violation.json");
    CHECK(parity.code == cli::kExitFailure);
    CHECK(parity.err.find("A' must be odd") != std::string::npos);
    CHECK(with("dimension_mismatch.json").code == cli::kExitFailure);
  }
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
}

TEST_CASE("parse_point") {
  CHECK(cli::parse_point("1,-2.5, 3e-1") == std::vector<double>{1.0, -2.5, 0.3});
  CHECK_THROWS_AS(cli::parse_point("1,,2"), UsageError);
  CHECK_THROWS_AS(cli::parse_point("1,x"), UsageError);
  CHECK_THROWS_AS(cli::parse_point("1,"), UsageError);
  CHECK_THROWS_AS(cli::parse_point("nan"), UsageError);
}

TEST_CASE("installed binary") {
  const std::string cmd = std::string(SUPERCHERN_TOOL) + " chern " + data("running_example.json");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(out == "1 - 1*dx1^dx2\n");
  const std::string bad = std::string(SUPERCHERN_TOOL) + " chern " + data("parity_violation.json") + " 2>/dev/null";
  CHECK(WEXITSTATUS(pclose(popen(bad.c_str(), "r"))) == 1);
}
