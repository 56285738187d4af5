#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "galwave/errors.hpp"
#include "galwave/scenarios.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& out_dir_override,
                bool seed_given, std::uint64_t seed_override) {
  galwave::ScenarioConfig cfg = galwave::load_scenario_config(config_path);
  if (!out_dir_override.empty()) cfg.out_dir = out_dir_override;
  if (seed_given) cfg.seed = seed_override;

  const galwave::ScenarioOutcome outcome = galwave::run_scenario(cfg);
  std::cout << "scenario: " << outcome.scenario << "\n";
  for (const auto& [name, value] : outcome.metrics) {
    std::cout << "  " << name << " = " << value;
    for (const auto& [tname, tol] : outcome.tolerances) {
      if (tname == name) std::cout << "  (tolerance " << tol << ")";
    }
    std::cout << "\n";
  }
  std::cout << "wrote " << outcome.csv_path << " and " << outcome.summary_path << "\n";
  std::cout << (outcome.pass ? "PASS" : "FAIL") << "\n";
  return outcome.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"galwave: Galilean-covariant Schrodinger experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir_override;
  std::uint64_t seed_override = 0;

  auto* run = app.add_subcommand("run", "run a scenario from a JSON config");
  run->add_option("--config", config_path, "path to the scenario config")->required();
  auto* out_opt = run->add_option("--out-dir", out_dir_override, "override the output directory");
  auto* seed_opt = run->add_option("--seed", seed_override, "override the RNG seed");

  auto* validate = app.add_subcommand("validate", "check a config without running it");
  validate->add_option("--config", config_path, "path to the scenario config")->required();

  app.add_subcommand("list-scenarios", "print the available scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list-scenarios")) {
      for (const auto& name : galwave::scenario_names()) std::cout << name << "\n";
      return 0;
    }
    if (app.got_subcommand("validate")) {
      galwave::load_scenario_config(config_path);
      std::cout << "OK\n";
      return 0;
    }
    return run_command(config_path, out_opt->count() ? out_dir_override : "",
                       seed_opt->count() > 0, seed_override);
  } catch (const galwave::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
