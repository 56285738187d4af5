#pragma once

// The Schrodinger operator
//   S psi = i hbar d_t psi + (hbar^2 / 2m) Laplacian psi - U psi
// applied to closed-form waves by finite differences at probe points and to
// grid-wave pairs spectrally, plus the numerical check of its boost
// invariance.  Potentials are functions on events, so the same physical U
// can be expressed in any frame through that frame's chart.

#include <utility>
#include <variant>
#include <vector>

#include "galwave/spacetime.hpp"
#include "galwave/types.hpp"
#include "galwave/wave.hpp"

namespace galwave {

struct ZeroPotential {};

/// U(x) = gradient . y(x) in fiducial spatial coordinates.
struct UniformFieldPotential {
  Vec gradient;
};

/// U(x) = (stiffness / 2) |spatial chart of x in worldline_frame|^2; the well
/// is attached to the frame's origin worldline and static in that frame.
struct HarmonicPotential {
  InertialFrame worldline_frame;
  double stiffness;
};

/// Samples on a periodic spatial grid, static in `frame`, evaluated by
/// periodic multilinear interpolation of the event's chart coordinates.
/// Samples may be complex; only the operator module accepts complex values.
struct TabulatedPotential {
  InertialFrame frame;
  double box_length;
  int n_points;
  int dim;
  CVec values;
};

struct Potential {
  std::variant<ZeroPotential, UniformFieldPotential, HarmonicPotential, TabulatedPotential> kind;

  static Potential zero() { return Potential{ZeroPotential{}}; }
  static Potential uniform_field(Vec gradient) {
    return Potential{UniformFieldPotential{std::move(gradient)}};
  }
  static Potential harmonic(InertialFrame worldline_frame, double stiffness) {
    return Potential{HarmonicPotential{std::move(worldline_frame), stiffness}};
  }
  static Potential tabulated(TabulatedPotential t) { return Potential{std::move(t)}; }
};

Complex potential_value(const Potential& U, const Event& x);
bool potential_is_real(const Potential& U);

/// Values of S psi at probe points, with the stencil step used.
struct OperatorResidual {
  CVec values;
  double stencil_step;
};

/// Central second-order finite-difference evaluation of S psi at each probe
/// (y, t), with the potential read through the frame's chart; error O(h^2)
/// for smooth psi.
OperatorResidual apply_operator(const ClosedFormWave& psi, const Potential& U,
                                const InertialFrame& frame,
                                const std::vector<std::pair<Vec, double>>& probes,
                                const Params& p, double h);

/// Residual of the free operator on two consecutive time slices: forward
/// time difference (midpoint-centered) plus the spectral Laplacian of the
/// slice average; O(dt^2) in time, spectral in space.
OperatorResidual apply_free_operator(const GridWave& psi, const GridWave& psi_next, double dt,
                                     const Params& p);

/// Maximum over probes of |S'(T_v psi)(y,t) - exp(F_v(y,t)) (S psi)(y - v t, t)|,
/// where S carries the potential expressed in `frame` and S' the same
/// event-level potential expressed in the matching boosted frame.  Bounded by
/// C h^2 for smooth probe waves.
double invariance_defect(const ClosedFormWave& psi, const Vec& v, const Potential& U,
                         const InertialFrame& frame,
                         const std::vector<std::pair<Vec, double>>& probes, const Params& p,
                         double h);

}  // namespace galwave
