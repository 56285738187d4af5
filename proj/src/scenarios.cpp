#include "galwave/scenarios.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "galwave/bundle.hpp"
#include "galwave/errors.hpp"
#include "galwave/gauge.hpp"
#include "galwave/oracles.hpp"
#include "galwave/random.hpp"

namespace galwave {

using nlohmann::json;

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Covariance: return "covariance";
    case Scenario::OracleCompare: return "oracle-compare";
    case Scenario::BundleProps: return "bundle-props";
    case Scenario::Uniqueness: return "uniqueness";
    case Scenario::Evolve: return "evolve";
  }
  return "?";
}

std::vector<std::string> scenario_names() {
  return {"covariance", "oracle-compare", "bundle-props", "uniqueness", "evolve"};
}

namespace {

// ---------------------------------------------------------------------------
// Config parsing

Vec parse_vec(const json& j, const std::string& what, int expected_dim) {
  if (!j.is_array() || j.empty()) throw ConfigError(what + " must be a non-empty array");
  Vec v(static_cast<long>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ConfigError(what + " must contain numbers");
    v[static_cast<long>(i)] = j[i].get<double>();
  }
  if (expected_dim > 0 && v.size() != expected_dim) {
    throw ConfigError(what + " must have length " + std::to_string(expected_dim));
  }
  return v;
}

double require_number(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ConfigError(ctx + " requires numeric field '" + key + "'");
  }
  return j[key].get<double>();
}

InertialFrame parse_frame(const json& j, int dim) {
  InertialFrame f = fiducial_frame(dim);
  if (j.contains("origin_y")) f.origin.y = parse_vec(j["origin_y"], "frame.origin_y", dim);
  if (j.contains("origin_t")) f.origin.t = j["origin_t"].get<double>();
  if (j.contains("velocity")) f.velocity.w = parse_vec(j["velocity"], "frame.velocity", dim);
  return f;
}

Potential parse_potential(const json& j, int dim) {
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("potential requires string field 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "zero") return Potential::zero();
  if (kind == "uniform_field") {
    return Potential::uniform_field(parse_vec(j.at("gradient"), "potential.gradient", dim));
  }
  if (kind == "harmonic") {
    const double stiffness = require_number(j, "stiffness", "harmonic potential");
    if (!(stiffness > 0.0)) throw ConfigError("harmonic potential stiffness must be positive");
    InertialFrame frame = fiducial_frame(dim);
    if (j.contains("frame")) frame = parse_frame(j["frame"], dim);
    return Potential::harmonic(frame, stiffness);
  }
  if (kind == "tabulated") {
    TabulatedPotential tab;
    tab.dim = dim;
    tab.box_length = require_number(j, "box_length", "tabulated potential");
    tab.n_points = static_cast<int>(require_number(j, "n_points", "tabulated potential"));
    tab.frame = j.contains("frame") ? parse_frame(j["frame"], dim) : fiducial_frame(dim);
    const Vec re = parse_vec(j.at("values_re"), "potential.values_re", 0);
    Vec im = Vec::Zero(re.size());
    if (j.contains("values_im")) im = parse_vec(j["values_im"], "potential.values_im", 0);
    if (im.size() != re.size()) throw ConfigError("values_im must match values_re in length");
    long expected = 1;
    for (int a = 0; a < dim; ++a) expected *= tab.n_points;
    if (re.size() != expected) {
      throw ConfigError("tabulated potential needs n_points^dim sample values");
    }
    tab.values = re.cast<Complex>() + kI * im.cast<Complex>();
    return Potential::tabulated(std::move(tab));
  }
  throw ConfigError("unknown potential kind '" + kind + "'");
}

InitialWaveConfig parse_initial(const json& j, int dim) {
  InitialWaveConfig w;
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("initial wave requires string field 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "gaussian_packet") {
    w.kind = InitialWaveConfig::Kind::GaussianPacket;
    w.center = j.contains("center") ? parse_vec(j["center"], "initial.center", dim)
                                    : Vec(Vec::Zero(dim));
    w.width = require_number(j, "width", "gaussian_packet initial wave");
    if (!(w.width > 0.0)) throw ConfigError("initial wave width must be positive");
    w.k0 = j.contains("k0") ? parse_vec(j["k0"], "initial.k0", dim) : Vec(Vec::Zero(dim));
    w.t0 = j.contains("t0") ? j["t0"].get<double>() : 0.0;
  } else if (kind == "plane_wave") {
    w.kind = InitialWaveConfig::Kind::PlaneWave;
    w.k = parse_vec(j.at("k"), "initial.k", dim);
  } else {
    throw ConfigError("unknown initial wave kind '" + kind + "'");
  }
  return w;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

SolverConfig parse_solver(const json& j, const Params& params) {
  SolverConfig s;
  s.params = params;
  s.frame = fiducial_frame(params.dim);
  s.box_length = require_number(j, "box_length", "solver");
  if (!(s.box_length > 0.0)) throw ConfigError("solver.box_length must be positive");
  s.n_points = static_cast<int>(require_number(j, "n_points", "solver"));
  if (s.n_points < 8 || !is_power_of_two(s.n_points)) {
    throw ConfigError("solver.n_points must be a power of two, at least 8");
  }
  s.dt = require_number(j, "dt", "solver");
  s.t_final = require_number(j, "t_final", "solver");
  if (!(s.dt > 0.0) || !(s.t_final > 0.0) || s.dt > s.t_final) {
    throw ConfigError("solver requires 0 < dt <= t_final");
  }
  const double ratio = s.t_final / s.dt;
  if (std::abs(ratio - std::llround(ratio)) > 1e-9) {
    throw ConfigError("solver.t_final must be an integer multiple of dt");
  }
  if (j.contains("record_every")) {
    s.record_every = static_cast<int>(j["record_every"].get<double>());
    if (s.record_every < 1) throw ConfigError("solver.record_every must be positive");
  }
  if (j.contains("frame")) s.frame = parse_frame(j["frame"], params.dim);
  if (j.contains("potential")) s.potential = parse_potential(j["potential"], params.dim);
  return s;
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  ScenarioConfig cfg;
  if (!j.contains("scenario") || !j["scenario"].is_string()) {
    throw ConfigError("config requires string field 'scenario'");
  }
  const std::string name = j["scenario"].get<std::string>();
  const auto names = scenario_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ConfigError("unknown scenario '" + name + "'");
  cfg.scenario = static_cast<Scenario>(it - names.begin());

  if (j.contains("params")) {
    const json& p = j["params"];
    const double hbar = p.contains("hbar") ? p["hbar"].get<double>() : 1.0;
    const double mass = p.contains("mass") ? p["mass"].get<double>() : 1.0;
    const int dim = p.contains("dim") ? p["dim"].get<int>() : 1;
    try {
      cfg.params = Params(hbar, mass, dim);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
  if (j.contains("boost")) cfg.boost = parse_vec(j["boost"], "boost", cfg.params.dim);
  if (j.contains("trials")) {
    cfg.trials = j["trials"].get<int>();
    if (cfg.trials < 1) throw ConfigError("trials must be positive");
  }
  if (j.contains("endpoints")) {
    cfg.endpoints = j["endpoints"].get<int>();
    if (cfg.endpoints < 1) throw ConfigError("endpoints must be positive");
  }
  if (j.contains("tolerances")) {
    if (!j["tolerances"].is_object()) throw ConfigError("tolerances must be an object");
    for (const auto& [key, value] : j["tolerances"].items()) {
      if (!value.is_number()) throw ConfigError("tolerances must map names to numbers");
      cfg.tolerance_overrides.emplace_back(key, value.get<double>());
    }
  }
  if (j.contains("solver")) {
    cfg.solver = parse_solver(j["solver"], cfg.params);
    if (j["solver"].contains("initial")) {
      cfg.initial = parse_initial(j["solver"]["initial"], cfg.params.dim);
    }
  }

  const bool needs_solver = cfg.scenario == Scenario::Covariance ||
                            cfg.scenario == Scenario::OracleCompare ||
                            cfg.scenario == Scenario::Evolve;
  if (needs_solver) {
    if (!cfg.solver) throw ConfigError("this scenario requires a 'solver' section");
    if (!cfg.initial) throw ConfigError("this scenario requires solver.initial");
  }
  if (cfg.scenario == Scenario::Covariance && !cfg.boost) {
    throw ConfigError("covariance scenario requires 'boost'");
  }
  if (cfg.scenario == Scenario::OracleCompare) {
    if (cfg.initial->kind != InitialWaveConfig::Kind::GaussianPacket) {
      throw ConfigError("oracle-compare requires a gaussian_packet initial wave");
    }
    if (!std::holds_alternative<ZeroPotential>(cfg.solver->potential.kind)) {
      throw ConfigError("oracle-compare requires the zero potential");
    }
  }
  return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_config(buf.str());
}

namespace {

// ---------------------------------------------------------------------------
// Deterministic output formatting

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out_ << ',';
      out_ << columns[i];
    }
    out_ << '\n';
  }

  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out_ << ',';
      out_ << fmt17(values[i]);
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

void write_summary(const ScenarioOutcome& o, const Params& params, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "{\n";
  out << "  \"scenario\": \"" << o.scenario << "\",\n";
  out << "  \"params\": {\"hbar\": " << fmt17(params.hbar) << ", \"mass\": " << fmt17(params.mass)
      << ", \"dim\": " << params.dim << "},\n";
  out << "  \"metrics\": {";
  for (std::size_t i = 0; i < o.metrics.size(); ++i) {
    if (i) out << ", ";
    out << '"' << o.metrics[i].first << "\": " << fmt17(o.metrics[i].second);
  }
  out << "},\n";
  out << "  \"tolerances\": {";
  for (std::size_t i = 0; i < o.tolerances.size(); ++i) {
    if (i) out << ", ";
    out << '"' << o.tolerances[i].first << "\": " << fmt17(o.tolerances[i].second);
  }
  out << "},\n";
  out << "  \"failed_metrics\": [";
  for (std::size_t i = 0; i < o.failed_metrics.size(); ++i) {
    if (i) out << ", ";
    out << '"' << o.failed_metrics[i] << '"';
  }
  out << "],\n";
  out << "  \"pass\": " << (o.pass ? "true" : "false") << ",\n";
  out << "  \"runtime_seconds\": " << fmt17(o.runtime_seconds);
  if (o.commensurate_boost_used) {
    out << ",\n  \"commensurate_boost_used\": [";
    const Vec& v = *o.commensurate_boost_used;
    for (int a = 0; a < v.size(); ++a) {
      if (a) out << ", ";
      out << fmt17(v[a]);
    }
    out << "]";
  }
  out << "\n}\n";
}

// Tolerance table: scenario defaults, then config overrides.
class Metrics {
 public:
  explicit Metrics(const std::vector<std::pair<std::string, double>>& overrides)
      : overrides_(overrides) {}

  void add(const std::string& name, double value) { values_.emplace_back(name, value); }

  void add_bounded(const std::string& name, double value, double default_tol) {
    values_.emplace_back(name, value);
    double tol = default_tol;
    for (const auto& [key, bound] : overrides_) {
      if (key == name) tol = bound;
    }
    tolerances_.emplace_back(name, tol);
  }

  void finish(ScenarioOutcome& o) const {
    o.metrics = values_;
    o.tolerances = tolerances_;
    o.pass = true;
    for (const auto& [name, tol] : tolerances_) {
      for (const auto& [mname, value] : values_) {
        if (mname == name && !(value <= tol)) {
          o.pass = false;
          o.failed_metrics.push_back(name);
        }
      }
    }
  }

 private:
  std::vector<std::pair<std::string, double>> values_;
  std::vector<std::pair<std::string, double>> tolerances_;
  const std::vector<std::pair<std::string, double>>& overrides_;
};

GridWave build_initial(const ScenarioConfig& cfg) {
  const SolverConfig& s = *cfg.solver;
  const GridSpec spec{s.box_length, s.n_points, cfg.params.dim, 0.0};
  const InitialWaveConfig& w = *cfg.initial;
  if (w.kind == InitialWaveConfig::Kind::GaussianPacket) {
    return sample_closed_form(ClosedFormWave::gaussian_packet(w.center, w.width, w.k0, w.t0), spec,
                              cfg.params);
  }
  // Plane-wave wavenumbers are snapped to exact grid modes.
  Vec k(w.k.size());
  for (int a = 0; a < k.size(); ++a) {
    k[a] = 2.0 * kPi * std::round(w.k[a] * s.box_length / (2.0 * kPi)) / s.box_length;
  }
  const double omega = cfg.params.hbar * k.squaredNorm() / (2.0 * cfg.params.mass);
  return sample_closed_form(ClosedFormWave::plane_wave(k, omega), spec, cfg.params);
}

// ---------------------------------------------------------------------------
// Scenario bodies

void run_covariance(const ScenarioConfig& cfg, Metrics& metrics, CsvWriter& csv,
                    ScenarioOutcome& outcome) {
  const SolverConfig& s = *cfg.solver;
  const GridWave initial = build_initial(cfg);
  const Vec snapped = snap_to_commensurate(*cfg.boost, s.box_length, cfg.params);
  outcome.commensurate_boost_used = snapped;

  const CovarianceReport report = covariance_experiment(initial, snapped, s);
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    csv.row({report.times[i], report.l2_error[i], report.linf_error[i]});
  }
  const bool free_case = std::holds_alternative<ZeroPotential>(s.potential.kind);
  const double default_tol = free_case ? 1e-6 : 1e-5;
  metrics.add_bounded("final_l2_error", report.l2_error.back(), default_tol);
  metrics.add_bounded("max_l2_error", *std::max_element(report.l2_error.begin(),
                                                        report.l2_error.end()),
                      default_tol);
  metrics.add("final_linf_error", report.linf_error.back());
}

void run_oracle_compare(const ScenarioConfig& cfg, Metrics& metrics, CsvWriter& csv) {
  const SolverConfig& s = *cfg.solver;
  const InitialWaveConfig& w = *cfg.initial;
  const GridWave initial = build_initial(cfg);
  const EvolutionResult result = evolve(initial, s);

  const ClosedFormWave oracle = ClosedFormWave::gaussian_packet(w.center, w.width, w.k0, w.t0);
  double max_err = 0.0;
  double final_err = 0.0;
  for (const GridWave& snap : result.snapshots) {
    GridSpec spec = snap.spec();
    const GridWave reference = sample_closed_form(oracle, spec, cfg.params);
    final_err = l2_relative_error(snap, reference);
    max_err = std::max(max_err, final_err);
    csv.row({snap.time, final_err});
  }
  metrics.add_bounded("final_l2_error_vs_oracle", final_err, 1e-6);
  metrics.add("max_l2_error_vs_oracle", max_err);

  double drift = 0.0;
  for (double n : result.norms) drift = std::max(drift, std::abs(n / result.norms.front() - 1.0));
  metrics.add_bounded("norm_drift", drift, 1e-12);
}

void run_evolve(const ScenarioConfig& cfg, Metrics& metrics, CsvWriter& csv) {
  const SolverConfig& s = *cfg.solver;
  const GridWave initial = build_initial(cfg);
  const EvolutionResult result = evolve(initial, s);
  for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
    csv.row({result.snapshots[i].time, result.norms[i], result.energies[i]});
  }
  double drift = 0.0;
  for (double n : result.norms) drift = std::max(drift, std::abs(n / result.norms.front() - 1.0));
  metrics.add_bounded("norm_drift", drift, 1e-12);
  metrics.add_bounded("boundary_tail", result.max_boundary_tail, 1e-12);
  metrics.add_bounded("kinetic_phase_rotation", result.kinetic_phase_rotation, kPi);
}

void run_bundle_props(const ScenarioConfig& cfg, Metrics& metrics, CsvWriter& csv) {
  Rng rng(cfg.seed);
  const Params& p = cfg.params;
  const int dim = p.dim;
  double worst = 0.0;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Event x0{rng.uniform_vec(dim, -2.0, 2.0), rng.uniform(-1.0, 1.0)};
    const Event x{rng.uniform_vec(dim, -3.0, 3.0), rng.uniform(-2.0, 2.0)};
    const Velocity u{rng.uniform_vec(dim, -3.0, 3.0)};
    const Velocity u2{rng.uniform_vec(dim, -3.0, 3.0)};
    const Vec v = rng.uniform_vec(dim, -3.0, 3.0);
    const Vec v2 = rng.uniform_vec(dim, -3.0, 3.0);
    const Vec w1 = rng.uniform_vec(dim, -3.0, 3.0);
    const Vec w2 = rng.uniform_vec(dim, -3.0, 3.0);
    const BundleElement e1{u, x, rng.uniform_complex(1.0)};
    const BundleElement e2{u2, x, rng.uniform_complex(1.0)};

    double defect = 0.0;
    // Action composition.
    defect = std::max(defect,
                      std::abs(act(v2, act(v, e1, p, x0), p, x0).z - act(v + v2, e1, p, x0).z));
    // Inverse action.
    defect = std::max(defect, std::abs(act(-v, act(v, e1, p, x0), p, x0).z - e1.z));
    // Addition is representative-independent.
    const BundleElement sum = add(e1, e2, p, x0);
    const BundleElement sum_shifted = add(act(w1, e1, p, x0), act(w2, e2, p, x0), p, x0);
    defect = std::max(defect,
                      std::abs(normalize_to(u, sum_shifted, p, x0).z - normalize_to(u, sum, p, x0).z));
    // Scaling commutes with the action.
    const Complex a = rng.uniform_complex(1.0);
    defect = std::max(defect, std::abs(scale(a, act(v, e1, p, x0)).z - act(v, scale(a, e1), p, x0).z));
    // Fiber norm is orbit-constant.
    defect = std::max(defect, std::abs(fiber_norm(act(v, e1, p, x0)) - fiber_norm(e1)));
    // Trivialization is representative-independent.
    const TrivializedElement t1 = trivialize(u2, e1, p, x0);
    const TrivializedElement t2 = trivialize(u2, act(w1, e1, p, x0), p, x0);
    defect = std::max(defect, std::abs(t1.z - t2.z));
    // Transitions between trivializations equal the gauge transition maps.
    const TrivializedElement from = trivialize(u, e1, p, x0);
    const TrivializedElement to = trivialize(Velocity{u.w + v}, e1, p, x0);
    const auto [ty, tt, tz] = transition_map(u, v, p)(from.y, from.t, from.z);
    defect = std::max(defect, std::abs(to.z - tz));
    defect = std::max(defect, (to.y - ty).lpNorm<Eigen::Infinity>());
    defect = std::max(defect, std::abs(to.t - tt));

    worst = std::max(worst, defect);
    csv.row({static_cast<double>(trial), defect});
  }
  metrics.add_bounded("max_defect", worst, 1e-12);
}

void run_uniqueness(const ScenarioConfig& cfg, Metrics& metrics, CsvWriter& csv,
                    ScenarioOutcome& outcome) {
  const Params& p = cfg.params;
  const int dim = p.dim;
  Vec v = cfg.boost ? *cfg.boost : Vec(Vec::Constant(dim, 2.0));
  outcome.commensurate_boost_used.reset();
  const Vec v2 = 0.5 * v + Vec::Constant(dim, 0.5);

  const GaugePhase closed_form{v, p};
  const ClosedFormWave unit = ClosedFormWave::constant(Complex{1.0, 0.0}, dim);
  const auto probes = halton_probes(dim, cfg.endpoints, 5.0, 2.0);

  double max_quad_err = 0.0, max_c0 = 0.0, max_c1 = 0.0;
  int index = 0;
  for (const auto& [y, t] : probes) {
    const Vec origin = Vec::Zero(dim);
    // Two polylines from the origin to the endpoint: space-then-time and
    // time-then-space.
    const std::vector<PathPoint> path_a{{origin, 0.0}, {y, 0.0}, {y, t}};
    const std::vector<PathPoint> path_b{{origin, 0.0}, {origin, t}, {y, t}};
    const Complex expected = closed_form(y, t);
    const double quad_err =
        std::max(std::abs(reconstruct_gauge_phase_along(v, p, path_a) - expected),
                 std::abs(reconstruct_gauge_phase_along(v, p, path_b) - expected));

    const std::vector<std::pair<Vec, double>> one_probe{{y, t}};
    const double c0 = representation_defect(v, v2, Complex{0.0, 0.0}, unit, p, one_probe);
    const double c1 = representation_defect(v, v2, Complex{1.0, 0.0}, unit, p, one_probe);

    max_quad_err = std::max(max_quad_err, quad_err);
    max_c0 = std::max(max_c0, c0);
    max_c1 = std::max(max_c1, c1);
    csv.row({static_cast<double>(index++), quad_err, c0, c1});
  }

  const double expected_c1 = std::abs(std::exp(2.0) - std::exp(1.0));
  metrics.add_bounded("max_quadrature_error", max_quad_err, 1e-10);
  metrics.add_bounded("max_defect_c0", max_c0, 1e-12);
  metrics.add("max_defect_c1", max_c1);
  metrics.add_bounded("defect_c1_deviation", std::abs(max_c1 - expected_c1), 1e-8);
}

std::vector<std::string> csv_columns(Scenario s) {
  switch (s) {
    case Scenario::Covariance: return {"t", "l2_error", "linf_error"};
    case Scenario::OracleCompare: return {"t", "l2_error_vs_oracle"};
    case Scenario::BundleProps: return {"trial", "max_defect"};
    case Scenario::Uniqueness: return {"probe_index", "quadrature_error", "defect_c0", "defect_c1"};
    case Scenario::Evolve: return {"t", "norm", "energy"};
  }
  return {};
}

}  // namespace

double ScenarioOutcome::metric(const std::string& name) const {
  for (const auto& [key, value] : metrics) {
    if (key == name) return value;
  }
  throw std::out_of_range("no metric named '" + name + "'");
}

ScenarioOutcome run_scenario(const ScenarioConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  std::filesystem::create_directories(cfg.out_dir);
  ScenarioOutcome outcome;
  outcome.scenario = scenario_name(cfg.scenario);
  outcome.csv_path = cfg.out_dir + "/" + outcome.scenario + ".csv";
  outcome.summary_path = cfg.out_dir + "/summary.json";

  Metrics metrics(cfg.tolerance_overrides);
  CsvWriter csv(outcome.csv_path, csv_columns(cfg.scenario));

  switch (cfg.scenario) {
    case Scenario::Covariance: run_covariance(cfg, metrics, csv, outcome); break;
    case Scenario::OracleCompare: run_oracle_compare(cfg, metrics, csv); break;
    case Scenario::BundleProps: run_bundle_props(cfg, metrics, csv); break;
    case Scenario::Uniqueness: run_uniqueness(cfg, metrics, csv, outcome); break;
    case Scenario::Evolve: run_evolve(cfg, metrics, csv); break;
  }

  metrics.finish(outcome);
  outcome.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_summary(outcome, cfg.params, outcome.summary_path);
  return outcome;
}

}  // namespace galwave
