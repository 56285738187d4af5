#pragma once

// Config-driven experiment runner behind the command-line tool.  A scenario
// is parsed from a JSON document, runs deterministically under its seed, and
// emits one CSV of per-row results plus a summary JSON with metrics and the
// tolerances they were held to.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galwave/solver.hpp"
#include "galwave/types.hpp"

namespace galwave {

enum class Scenario { Covariance, OracleCompare, BundleProps, Uniqueness, Evolve };

const char* scenario_name(Scenario s);
std::vector<std::string> scenario_names();

/// Initial condition for solver-backed scenarios.
struct InitialWaveConfig {
  enum class Kind { GaussianPacket, PlaneWave } kind = Kind::GaussianPacket;
  Vec center;
  double width = 1.0;
  Vec k0;
  double t0 = 0.0;
  Vec k;  // plane wave; snapped to the nearest grid mode
};

struct ScenarioConfig {
  Scenario scenario = Scenario::Evolve;
  Params params{1.0, 1.0, 1};
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  std::optional<Vec> boost;
  int trials = 200;     // bundle-props
  int endpoints = 20;   // uniqueness
  std::optional<SolverConfig> solver;
  std::optional<InitialWaveConfig> initial;
  std::vector<std::pair<std::string, double>> tolerance_overrides;
};

/// Parse and validate a config document; throws ConfigError on any problem.
ScenarioConfig parse_scenario_config(const std::string& json_text);
ScenarioConfig load_scenario_config(const std::string& path);

struct ScenarioOutcome {
  std::string scenario;
  std::vector<std::pair<std::string, double>> metrics;      // name -> value
  std::vector<std::pair<std::string, double>> tolerances;   // name -> bound
  std::vector<std::string> failed_metrics;
  bool pass = false;
  double runtime_seconds = 0.0;
  std::optional<Vec> commensurate_boost_used;
  std::string csv_path;
  std::string summary_path;

  int exit_code() const { return pass ? 0 : 1; }
  double metric(const std::string& name) const;
};

/// Run a scenario and write <out_dir>/<scenario>.csv and <out_dir>/summary.json.
/// All floating-point output is printed with 17 significant digits; identical
/// config and seed produce byte-identical CSV.
ScenarioOutcome run_scenario(const ScenarioConfig& cfg);

}  // namespace galwave
