#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chebpol/kernel.hpp"
#include "chebpol/set.hpp"
#include "chebpol/solver.hpp"

namespace chebpol {

/// One experiment = one plain-text config file: top-level key/value pairs
/// plus nested [section] tables. See docs/config.md for the schema.
struct ExperimentConfig {
  int version = 1;
  std::string task;  // solve | energy | sigma | distribution | limits

  // [set]
  std::string set_kind;
  double interval_a = -1.0, interval_b = 1.0;
  double radius = 1.0;
  int dim = 2;

  // [kernel]
  std::string kernel_kind = "riesz";
  double s = 2.0;
  double eps = 0.0;

  // [weight]
  std::optional<std::string> weight_name;
  double weight_value = 1.0;  // constant
  double weight_base = 2.0, weight_amp = 1.0;  // cosine / zcosine

  // [schedule]
  std::vector<std::size_t> schedule;

  // [solver]
  std::string method = "multistart";
  int restarts = 4;
  std::uint64_t seed = 1;
  long budget = 20000;
  double target_gap_rel = 1e-4;
  double target_gap_abs = 0.0;
  std::string configs_mode = "auto";  // auto | optimal | solver

  // [distribution]
  int bins = 8;
  double tolerance = 0.1;

  // [limits]
  std::vector<double> s_list;

  // [output]
  std::string out_json = "result.json";
  std::string out_csv = "result.csv";

  static ExperimentConfig load(const std::string& path);
  static ExperimentConfig parse(const std::string& text);

  Set make_set() const;
  std::optional<WeightSpec> make_weight() const;
  Kernel make_kernel() const;
  SolveOptions make_solve_options() const;
};

}  // namespace chebpol
