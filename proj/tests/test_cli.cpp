#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "qhr/commands.hpp"
#include "qhr/config.hpp"
#include "qhr/errors.hpp"

using namespace qhr;

namespace {

std::string config_path(const std::string& name) {
  return std::string(QHR_CONFIG_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/qhr_cli_" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing round trip") {
  const RunConfig cfg = parse_config_file(config_path("hyper23.cfg"));
  CHECK(cfg.kind == "hypertoric");
  REQUIRE(cfg.matrix.size() == 2);
  CHECK(cfg.matrix[0] == std::vector<long>{1, 0, 1});
  CHECK(cfg.matrix[1] == std::vector<long>{0, 1, 1});
  REQUIRE(cfg.theta.size() == 2);
  CHECK(cfg.c[0] == Rational(1, 3));
  CHECK(cfg.c[1] == Rational(2, 7));
  CHECK(cfg.max_degree == 6);
  CHECK(cfg.format == "json");
}

TEST_CASE("quiver-flavored config fields") {
  const RunConfig cfg = parse_config_file(config_path("cm_a1_n1.cfg"));
  CHECK(cfg.kind == "calogero-moser");
  CHECK(cfg.family == "affine-a");
  CHECK(cfg.ell == 1);
  CHECK(cfg.n == 1);
  const ReductionSetup s = build_setup(cfg);
  CHECK(s.provenance == "calogero-moser");
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_config_text("[setup]\nkind = hypertoric\nmatrix [[1]]\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("unknown and duplicate keys are rejected") {
  CHECK_THROWS_AS(
      parse_config_text("[setup]\nkind = hypertoric\nbogus = 1\n"),
      ParseError);
  CHECK_THROWS_AS(parse_config_text(
                      "[setup]\nkind = hypertoric\nmatrix = [[1]]\n"
                      "matrix = [[1]]\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_config_text("[mystery]\n"), ParseError);
}

TEST_CASE("invalid rationals are rejected") {
  CHECK_THROWS_AS(parse_config_text("[setup]\nkind = hypertoric\n"
                                    "matrix = [[1]]\nc = (1/0)\n"),
                  ParseError);
}

TEST_CASE("validate succeeds on shipped configs") {
  CliOptions opts;
  opts.out_path = "/tmp/qhr_cli_validate.json";
  CHECK(run_command("validate", config_path("m11.cfg"), opts) == 0);
  CHECK(run_command("validate", config_path("d4.cfg"), opts) == 0);
}

TEST_CASE("validate reports smoothness failures with exit 2") {
  const std::string path = write_temp(
      "nonsmooth.cfg",
      "[setup]\nkind = hypertoric\nmatrix = [[1]]\ntheta = (0)\nc = (0)\n"
      "[output]\nformat = json\n");
  CliOptions opts;
  opts.out_path = "/tmp/qhr_cli_nonsmooth.json";
  CHECK(run_command("validate", path, opts) == 2);
  const std::string report = slurp(opts.out_path);
  CHECK(report.find("smoothness") != std::string::npos);
}

TEST_CASE("flatness negative control exits 1") {
  CliOptions opts;
  opts.out_path = "/tmp/qhr_cli_dup.json";
  CHECK(run_command("flatness", config_path("duplicate_moment.cfg"), opts) ==
        1);
  CHECK(slurp(opts.out_path).find("\"first_failure\": 2") !=
        std::string::npos);
}

TEST_CASE("verify m1 end to end") {
  CliOptions opts;
  opts.out_path = "/tmp/qhr_cli_m1.json";
  CHECK(run_command("verify", config_path("m1.cfg"), opts) == 0);
  const std::string report = slurp(opts.out_path);
  CHECK(report.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("unknown command and missing config map to exit 3") {
  CliOptions opts;
  CHECK(run_command("frobnicate", config_path("m1.cfg"), opts) == 3);
  CHECK(run_command("verify", "/tmp/does_not_exist.cfg", opts) == 3);
}

TEST_CASE("parallel verification is byte-identical") {
  CliOptions a;
  a.out_path = "/tmp/qhr_cli_jobs1.json";
  a.jobs = 1;
  CliOptions b;
  b.out_path = "/tmp/qhr_cli_jobs8.json";
  b.jobs = 8;
  REQUIRE(run_command("verify", config_path("preproj_a1.cfg"), a) == 0);
  REQUIRE(run_command("verify", config_path("preproj_a1.cfg"), b) == 0);
  CHECK(slurp(a.out_path) == slurp(b.out_path));
}

TEST_CASE("cli max-degree override reaches the report") {
  CliOptions opts;
  opts.out_path = "/tmp/qhr_cli_md.json";
  opts.max_degree = 2;
  REQUIRE(run_command("oracle", config_path("m11.cfg"), opts) == 0);
  CHECK(slurp(opts.out_path).find("\"bound\": 2") != std::string::npos);
}
