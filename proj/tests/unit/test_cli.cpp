#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "lodeg/cli.hpp"
#include "lodeg/errors.hpp"

using namespace lodeg;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stderr is discarded; only the exit code and stdout are inspected
Run run_cli(const std::string& args) {
  std::string cmd = std::string(LODEG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(LODEG_DATA_DIR) + "/" + name + ".json"; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/lodeg_test_" + name + ".json";
  std::ofstream(path) << text;
  return path;
}

std::string error_of(const std::string& text) {
  try {
    cli::parse_variety_file(text, "in.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("variety files") {
  auto f = cli::parse_variety_file(R"({"variables": ["x", "y"], "polynomials": ["x^2 + y^2 - 1"]})", "c.json");
  CHECK(f.spec.n() == 2);
  CHECK(f.spec.assumed_irreducible);
  CHECK(f.digest.rfind("fnv1a64:", 0) == 0);
  CHECK(f.digest.size() == 8 + 16);
  CHECK(cli::fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(cli::fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("diagnostics carry line and column") {
  // the bad variable w sits at column 5 of the string, whose quote is at column 17 of line 3
  std::string text = "{\n\"variables\": [\"x\"],\n\"polynomials\": [\"x + w\"]\n}";
  CHECK(error_of(text).find("in.json:3:22") != std::string::npos);
  CHECK(error_of("{\n  \"variables\": [\"x\",]\n}").find("in.json:2:") != std::string::npos);
  CHECK(error_of(R"({"variables": ["x"], "polynomials": ["x"], "colour": 1})").find("unknown key") != std::string::npos);
  CHECK(error_of(R"({"variables": ["x", "x"], "polynomials": ["x"]})").find("duplicate") != std::string::npos);
  CHECK(error_of(R"({"variables": ["1x"], "polynomials": ["x"]})").find("not a valid") != std::string::npos);
  CHECK(error_of(R"({"variables": ["x"], "polynomials": ["x + 1"], "homogeneous": true})")
            .find("homogeneous") != std::string::npos);
  CHECK(error_of(R"({"variables": ["x"], "polynomials": []})").find("at least one") != std::string::npos);
  CHECK(error_of(R"({"variables": ["x"], "polynomials": ["x - x"]})").find("zero") != std::string::npos);
}

TEST_CASE("bidegrees command") {
  Run r = run_cli("bidegrees " + data("sphere"));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == "bidegrees");
  CHECK(j["results"]["bidegrees"] == json::array({2, 2, 2}));
  CHECK(j["input"]["n"] == 3);
  CHECK(j["input"]["d"] == 2);
  CHECK(j["timings"].empty());
  CHECK(j["warnings"].empty());
  CHECK(j["config"]["seed"] == 0x5EED);
}

TEST_CASE("runs are reproducible byte for byte") {
  Run a = run_cli("polar " + data("curve") + " --seed 7");
  Run b = run_cli("polar " + data("curve") + " --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["results"]["polar"] == json::array({8, 4}));
}

TEST_CASE("chern_mather and text output") {
  Run r = run_cli("chern_mather " + data("binomial") + " --format text");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("chern_mather: (1 3 4 3)") != std::string::npos);
  CHECK(r.out.find("bidegrees: (1 4 5 3)") != std::string::npos);
}

TEST_CASE("correspondence with explicit choices") {
  Run r = run_cli("correspondence " + data("cubic") + " --covector 10,5,17 --slice 'x3 - 6'");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["count_conormal"] == 1);
  CHECK(j["results"]["generic"] == false);
  CHECK(j["config"]["covector"] == "10,5,17");
}

TEST_CASE("verify passes on goldens and timings are opt-in") {
  Run r = run_cli("verify " + data("curve") + " --timings");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["pass"] == true);
  CHECK_FALSE(j["timings"].empty());
}

TEST_CASE("exit codes") {
  CHECK(run_cli("bidegrees /nonexistent.json").code == 3);
  CHECK(run_cli("frobnicate " + data("sphere")).code == 3);
  CHECK(run_cli("bidegrees " + data("sphere") + " --prime 4").code == 3);
  std::string unit = write_temp("unit", R"({"variables": ["x"], "polynomials": ["1"]})");
  CHECK(run_cli("lodeg " + unit).code == 3);
  std::string cone = write_temp("reducible", R"({"variables": ["x", "y"], "polynomials": ["x*y"],
      "assumed_irreducible": false})");
  Run w = run_cli("bidegrees " + cone);
  CHECK(w.code == 0);
  CHECK_FALSE(json::parse(w.out)["warnings"].empty());
  CHECK(run_cli("euler_obstruction " + data("sphere")).code == 3);
}

}  // TEST_SUITE
