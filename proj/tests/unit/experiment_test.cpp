#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "chebpol/errors.hpp"
#include "chebpol/experiment.hpp"
#include "chebpol/runner.hpp"

using namespace chebpol;
namespace fs = std::filesystem;

#ifndef CHEBPOL_FIXTURE_DIR
#define CHEBPOL_FIXTURE_DIR "."
#endif
#ifndef CHEBPOL_CLI_PATH
#define CHEBPOL_CLI_PATH ""
#endif

namespace {

std::string fixture(const std::string& name) {
  return std::string(CHEBPOL_FIXTURE_DIR) + "/" + name;
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("chebpol_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("config parsing and diagnostics") {
  ExperimentConfig cfg = ExperimentConfig::load(fixture("sigma_circle_s3.ini"));
  CHECK(cfg.task == "sigma");
  CHECK(cfg.set_kind == "circle");
  CHECK(cfg.s == 3.0);
  REQUIRE(cfg.schedule.size() == 4);
  CHECK(cfg.schedule.back() == 128);

  CHECK_THROWS_WITH_AS(ExperimentConfig::load(fixture("bad_kind.ini")),
                       doctest::Contains("set.kind"), InvalidArgumentError);

  CHECK_THROWS_WITH_AS(
      ExperimentConfig::parse("version = 1\ntask = solve\n[set]\nkind = circle\n"
                              "[schedule]\nN = 8 4\n"),
      doctest::Contains("schedule.N"), InvalidArgumentError);

  CHECK_THROWS_WITH_AS(
      ExperimentConfig::parse("task = solve\n[set]\nkind = circle\n"
                              "[schedule]\nN = 4\n"),
      doctest::Contains("version"), InvalidArgumentError);

  CHECK_THROWS_WITH_AS(
      ExperimentConfig::parse(
          "version = 1\ntask = solve\n[set]\nkind = circle\n"
          "[kernel]\nkind = weighted-riesz\ns = 3\n[schedule]\nN = 4\n"),
      doctest::Contains("weight.name"), InvalidArgumentError);

  CHECK_THROWS_AS(ExperimentConfig::load("/nonexistent/path.ini"),
                  InvalidArgumentError);
}

TEST_CASE("sigma run artifacts") {
  ExperimentConfig cfg = ExperimentConfig::load(fixture("sigma_circle_s3.ini"));
  fs::path dir = fresh_dir("sigma");
  RunOverrides ov;
  ov.out_dir = dir.string();
  RunOutcome out = run_experiment(cfg, ov);
  CHECK(out.exit_code == 0);
  REQUIRE(fs::exists(out.json_path));
  REQUIRE(fs::exists(out.csv_path));

  // CSV: header plus one row per scheduled N
  auto lines = read_lines(out.csv_path);
  REQUIRE(lines.size() == 1 + cfg.schedule.size());
  CHECK(lines[0] == "N,value,lower,upper,tau,ratio");

  std::ifstream jin(out.json_path);
  nlohmann::json doc = nlohmann::json::parse(jin);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["task"] == "sigma");
  REQUIRE(doc["records"].size() == cfg.schedule.size());
  for (const auto& rec : doc["records"]) {
    CHECK(rec["lower"].get<double>() <= rec["upper"].get<double>());
    CHECK(rec["ratio"].get<double>() > 0.0);
  }
  CHECK(doc.contains("estimate"));
  CHECK(doc["predicted_limit"]["provenance"] == "proved-constant");
  CHECK(doc["metadata"].contains("timing"));

  // the last normalized entry sits near the predicted constant already at
  // this small scale
  double ratio = doc["records"].back()["ratio"].get<double>();
  double predicted = doc["predicted_limit"]["value"].get<double>();
  CHECK(ratio == doctest::Approx(predicted).epsilon(2e-3));
}

TEST_CASE("reruns are byte-identical except the timing line") {
  ExperimentConfig cfg = ExperimentConfig::load(fixture("sigma_circle_s3.ini"));
  fs::path d1 = fresh_dir("det1"), d2 = fresh_dir("det2");
  RunOverrides o1, o2;
  o1.out_dir = d1.string();
  o2.out_dir = d2.string();
  run_experiment(cfg, o1);
  run_experiment(cfg, o2);

  auto a = read_lines(d1 / cfg.out_json);
  auto b = read_lines(d2 / cfg.out_json);
  REQUIRE(a.size() == b.size());
  int diffs = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) {
      ++diffs;
      CHECK(a[i].find("\"timing\"") != std::string::npos);
    }
  CHECK(diffs <= 1);

  auto ca = read_lines(d1 / cfg.out_csv);
  auto cb = read_lines(d2 / cfg.out_csv);
  CHECK(ca == cb);
}

TEST_CASE("solver task writes certified rows") {
  ExperimentConfig cfg = ExperimentConfig::load(fixture("solve_interval_log.ini"));
  fs::path dir = fresh_dir("solve");
  RunOverrides ov;
  ov.out_dir = dir.string();
  RunOutcome out = run_experiment(cfg, ov);
  CHECK(out.exit_code == 0);
  std::ifstream jin(out.json_path);
  nlohmann::json doc = nlohmann::json::parse(jin);
  REQUIRE(doc["records"].size() == 2);
  // N=2 log-kernel optimum is ln 2
  double v = doc["records"][0]["value"].get<double>();
  CHECK(v == doctest::Approx(std::log(2.0)).epsilon(1e-3));
}

TEST_CASE("cli round trip") {
  const std::string cli = CHEBPOL_CLI_PATH;
  if (cli.empty()) return;
  fs::path dir = fresh_dir("cli");
  std::string cmd = cli + " sigma --config " + fixture("sigma_circle_s3.ini") +
                    " --out " + dir.string() + " > " +
                    (dir / "stdout.txt").string() + " 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(dir / "sigma_circle_s3.json"));

  std::string bad = cli + " solve --config " + fixture("bad_kind.ini") +
                    " --out " + dir.string() + " > /dev/null 2>&1";
  int rc = std::system(bad.c_str());
  CHECK(rc != 0);
  CHECK_FALSE(fs::exists(dir / "result.json"));  // no partial artifacts
}

}  // TEST_SUITE
