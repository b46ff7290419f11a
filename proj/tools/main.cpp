#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chebpol/errors.hpp"
#include "chebpol/experiment.hpp"
#include "chebpol/parallel.hpp"
#include "chebpol/runner.hpp"
#include "chebpol/verify.hpp"
#include "chebpol/version.hpp"

namespace {

int run_task(const std::string& task, const std::string& config_path,
             const std::string& out_dir, long long seed_override, bool has_seed) {
  chebpol::ExperimentConfig cfg = chebpol::ExperimentConfig::load(config_path);
  if (cfg.task != task) {
    std::cerr << "error: config declares task '" << cfg.task
              << "' but the '" << task << "' subcommand was invoked\n";
    return 1;
  }
  chebpol::RunOverrides ov;
  ov.out_dir = out_dir;
  if (has_seed) ov.seed = std::uint64_t(seed_override);
  chebpol::RunOutcome out = chebpol::run_experiment(cfg, ov);
  std::cout << "wrote " << out.json_path << " and " << out.csv_path << "\n";
  if (out.exit_code == 2)
    std::cout << "note: budget exhausted; results are best-so-far\n";
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete Riesz polarization constants and configurations"};
  app.set_version_flag("--version", chebpol::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  long long seed = 0;
  bool has_seed = false;
  int threads = 1;

  app.add_option("--threads", threads, "worker thread cap (results identical)");

  auto add_run_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", config_path, "experiment config file")
        ->required();
    sub->add_option("--out", out_dir, "output directory (default: cwd)");
    sub->add_option("--seed", seed, "override the config seed")
        ->each([&](const std::string&) { has_seed = true; });
    return sub;
  };

  add_run_sub("solve", "maximize the polarization objective over N-point sets");
  add_run_sub("energy", "minimize the pair energy");
  add_run_sub("sigma", "normalized polarization series and limit estimate");
  add_run_sub("distribution", "empirical vs predicted point distribution");
  add_run_sub("limits", "large-s covering/packing link diagnostics");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "suite name or 'all'");
  bool list = false;
  verify->add_flag("--list", list, "list suite names");

  CLI11_PARSE(app, argc, argv);
  chebpol::set_thread_cap(threads);

  try {
    if (verify->parsed()) {
      if (list) {
        for (const auto& n : chebpol::suite_names()) std::cout << n << "\n";
        return 0;
      }
      std::vector<std::string> todo;
      if (suite == "all")
        todo = chebpol::suite_names();
      else
        todo.push_back(suite);
      bool all_pass = true;
      for (const auto& name : todo) {
        chebpol::SuiteResult r = chebpol::run_suite(name);
        std::cout << chebpol::format_table(r);
        all_pass &= r.pass;
      }
      return all_pass ? 0 : 1;
    }
    for (const auto& name :
         {"solve", "energy", "sigma", "distribution", "limits"}) {
      CLI::App* sub = app.get_subcommand(name);
      if (sub->parsed()) return run_task(name, config_path, out_dir, seed, has_seed);
    }
  } catch (const chebpol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
