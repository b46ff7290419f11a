#pragma once

#include <optional>
#include <string>

#include "chebpol/experiment.hpp"

namespace chebpol {

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::string out_dir;  // artifacts land here (default: alongside the cwd)
};

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 2 budget exhausted with results
  std::string json_path;
  std::string csv_path;
};

/// Executes one experiment and writes its JSON document and CSV table
/// atomically (nothing is written on error). Deterministic up to the single
/// "timing" metadata field.
RunOutcome run_experiment(const ExperimentConfig& config,
                          const RunOverrides& overrides = {});

}  // namespace chebpol
