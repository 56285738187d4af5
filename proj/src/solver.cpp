#include "galwave/solver.hpp"

#include <cmath>

#include "galwave/errors.hpp"
#include "galwave/fft.hpp"
#include "galwave/gauge.hpp"

namespace galwave {

namespace {

long steps_for(const SolverConfig& cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.t_final > 0.0) || cfg.dt > cfg.t_final + 1e-15) {
    throw std::invalid_argument("evolve: need 0 < dt <= t_final");
  }
  const double ratio = cfg.t_final / cfg.dt;
  const long n = static_cast<long>(std::llround(ratio));
  if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9) {
    throw std::invalid_argument("evolve: t_final must be an integer multiple of dt");
  }
  return n;
}

// Real potential samples over the grid at a fixed time, read through the
// evolution frame's chart.
Vec potential_on_grid(const Potential& U, const InertialFrame& frame, const GridSpec& g,
                      double time) {
  const long total = fft::grid_size(g.n_points, g.dim);
  Vec values(total);
  const double h = g.box_length / g.n_points;
  int modes[3];
  Vec y(g.dim);
  for (long j = 0; j < total; ++j) {
    fft::decode_index(j, g.n_points, g.dim, modes);
    for (int a = 0; a < g.dim; ++a) y[a] = -0.5 * g.box_length + modes[a] * h;
    values[j] = potential_value(U, chart_inverse(frame, y, time)).real();
  }
  return values;
}

double energy_expectation(const CVec& samples, const Vec& k2, const Vec& u_values, int n, int dim,
                          double cell, const Params& p) {
  CVec kinetic_spectrum = samples;
  fft::forward(kinetic_spectrum, n, dim);
  kinetic_spectrum.array() *= k2.array().cast<Complex>();
  fft::inverse(kinetic_spectrum, n, dim);
  const double kinetic =
      (p.hbar * p.hbar / (2.0 * p.mass)) * samples.dot(kinetic_spectrum).real() * cell;
  const double potential = (samples.cwiseAbs2().array() * u_values.array()).sum() * cell;
  const double norm2 = samples.squaredNorm() * cell;
  return (kinetic + potential) / norm2;
}

}  // namespace

EvolutionResult evolve(const GridWave& initial, const SolverConfig& cfg) {
  if (!potential_is_real(cfg.potential)) {
    throw ComplexPotentialRejected("evolve: potential must be real-valued");
  }
  if (initial.box_length != cfg.box_length || initial.n_points != cfg.n_points ||
      initial.dim != cfg.params.dim) {
    throw GridMismatch("evolve: initial data does not match the configured grid");
  }
  if (cfg.n_points < 8) throw std::invalid_argument("evolve: n_points must be at least 8");
  const long n_steps = steps_for(cfg);
  const int n = cfg.n_points;
  const int dim = cfg.params.dim;
  const double dt = cfg.dt;
  const double cell = std::pow(initial.grid_step(), dim);

  const Vec k2 = fft::wavenumber_squared(n, dim, cfg.box_length);
  const double kinetic_scale = cfg.params.hbar / (2.0 * cfg.params.mass);
  const CVec kinetic_factor =
      (-kI * kinetic_scale * dt * k2.array().cast<Complex>()).exp().matrix();

  EvolutionResult result;
  result.kinetic_phase_rotation = kinetic_scale * k2.maxCoeff() * dt;

  GridWave state = initial;
  const GridSpec geometry = initial.spec();

  const auto record = [&](const GridWave& w, double time) {
    result.snapshots.push_back(w);
    result.snapshots.back().time = time;
    result.norms.push_back(l2_norm(w));
    const Vec u_now = potential_on_grid(cfg.potential, cfg.frame, geometry, time);
    result.energies.push_back(
        energy_expectation(w.samples, k2, u_now, n, dim, cell, cfg.params));
    result.max_boundary_tail = std::max(result.max_boundary_tail, boundary_tail(w));
  };

  record(state, initial.time);
  for (long step = 0; step < n_steps; ++step) {
    const double t_mid = initial.time + (step + 0.5) * dt;
    const Vec u_mid = potential_on_grid(cfg.potential, cfg.frame, geometry, t_mid);
    const CVec half_potential =
        (-kI * (0.5 * dt / cfg.params.hbar) * u_mid.array().cast<Complex>()).exp().matrix();

    state.samples.array() *= half_potential.array();
    fft::forward(state.samples, n, dim);
    state.samples.array() *= kinetic_factor.array();
    fft::inverse(state.samples, n, dim);
    state.samples.array() *= half_potential.array();

    const double time = initial.time + (step + 1) * dt;
    state.time = time;
    if ((step + 1) % cfg.record_every == 0 || step + 1 == n_steps) record(state, time);
  }
  return result;
}

CovarianceReport covariance_experiment(const GridWave& initial, const Vec& v,
                                       const SolverConfig& cfg) {
  if (!is_box_commensurate(v, cfg.box_length, cfg.params)) {
    throw IncommensurateBoost("covariance_experiment: boost is not box-commensurate");
  }

  // Run A: the problem as configured.  Run B: boosted initial data, evolved
  // in the inertial frame whose problem the boost maps onto (velocity u - v,
  // same origin, same event-level potential).
  const EvolutionResult run_a = evolve(initial, cfg);

  SolverConfig cfg_b = cfg;
  cfg_b.frame = boosted_frame(cfg.frame, (-v).eval());
  const GridWave initial_b = boost(v, initial, cfg.params);
  const EvolutionResult run_b = evolve(initial_b, cfg_b);

  CovarianceReport report;
  report.boost = v;
  for (std::size_t i = 0; i < run_a.snapshots.size(); ++i) {
    const GridWave boosted_a = boost(v, run_a.snapshots[i], cfg.params);
    const GridWave& b = run_b.snapshots[i];
    report.times.push_back(b.time);
    report.l2_error.push_back(l2_relative_error(boosted_a, b));
    report.linf_error.push_back((boosted_a.samples - b.samples).cwiseAbs().maxCoeff() /
                                b.samples.cwiseAbs().maxCoeff());
  }
  return report;
}

}  // namespace galwave
