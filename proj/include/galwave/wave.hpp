#pragma once

// Wavefunction representations: a small closed-form expression tree used by
// the exact-algebra paths (boosts, operator residuals, oracles) and a
// periodic-grid sampling used by the spectral solver.

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "galwave/types.hpp"

namespace galwave {

struct ClosedFormWave;

/// exp(i (k.y - omega t)); the frequency is free, not tied to a dispersion law.
struct PlaneWave {
  Vec k;
  double omega;
};

/// Normalized free Gaussian packet; `width` is the position-space standard
/// deviation at t = t0 and k0 the carrier wavenumber.  Its time evolution is
/// the exact free solution (see oracles.hpp for the evaluator).
struct GaussianPacket {
  Vec center;
  double width;
  Vec k0;
  double t0;
};

struct LinearCombination {
  std::vector<std::pair<Complex, ClosedFormWave>> terms;
};

/// Lazily boosted wave: evaluates to exp(F_v(y,t)) * inner(y - v t, t),
/// where F_v is the boost gauge phase with integration constant c.
struct BoostedWave {
  Vec v;
  Complex c;
  std::shared_ptr<const ClosedFormWave> inner;
};

struct ClosedFormWave {
  std::variant<PlaneWave, GaussianPacket, LinearCombination, BoostedWave> node;

  static ClosedFormWave plane_wave(Vec k, double omega) {
    return ClosedFormWave{PlaneWave{std::move(k), omega}};
  }
  static ClosedFormWave gaussian_packet(Vec center, double width, Vec k0, double t0) {
    return ClosedFormWave{GaussianPacket{std::move(center), width, std::move(k0), t0}};
  }
  static ClosedFormWave superpose(std::vector<std::pair<Complex, ClosedFormWave>> terms) {
    return ClosedFormWave{LinearCombination{std::move(terms)}};
  }
  /// Constant wave a (a plane wave with k = 0 scaled by a).
  static ClosedFormWave constant(Complex a, int dim) {
    return superpose({{a, plane_wave(Vec::Zero(dim), 0.0)}});
  }
};

Complex eval(const ClosedFormWave& w, const Vec& y, double t, const Params& p);

/// Uniform periodic grid geometry: `n_points` samples per axis on
/// [-box_length/2, box_length/2) in each of `dim` axes.
struct GridSpec {
  double box_length;
  int n_points;
  int dim;
  double time;
};

/// Complex samples over a uniform periodic grid at a fixed time.  Samples are
/// flattened row-major (axis 0 slowest).  n_points must be a power of two.
struct GridWave {
  CVec samples;
  double box_length;
  int n_points;
  int dim;
  double time;

  GridWave(CVec samples_, double box_length_, int n_points_, int dim_, double time_);

  double grid_step() const { return box_length / n_points; }
  /// Coordinate of sample index i along one axis.
  double coord(int i) const { return -0.5 * box_length + i * grid_step(); }
  GridSpec spec() const { return GridSpec{box_length, n_points, dim, time}; }
};

bool same_geometry(const GridWave& a, const GridWave& b);

/// Discrete L2 norm, sqrt(h^dim * sum |psi|^2).
double l2_norm(const GridWave& w);

/// Relative discrete L2 distance ||a - b|| / ||b||.
double l2_relative_error(const GridWave& a, const GridWave& b);

/// Spectral first moment <k> per axis of |fft(psi)|^2.
Vec expected_momentum(const GridWave& w);

/// Largest |psi| on the grid faces (first and last sample along each axis);
/// wrap-around artifacts stay below this level.
double boundary_tail(const GridWave& w);

/// Sample a closed-form wave on a grid.
GridWave sample_closed_form(const ClosedFormWave& w, const GridSpec& g, const Params& p);

}  // namespace galwave
