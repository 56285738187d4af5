#pragma once

// Galilean boost gauge machinery: the multiplicative phase picked up by a
// wavefunction under a boost, the boost representation on closed-form and
// grid wavefunctions, and the coordinate transition maps between inertial
// trivializations.

#include <tuple>
#include <utility>
#include <vector>

#include "galwave/spacetime.hpp"
#include "galwave/types.hpp"
#include "galwave/wave.hpp"

namespace galwave {

/// Boost gauge phase
///   F_v(y, t) = (i m / hbar) (v.y - (t/2) |v|^2) + c.
/// The integration constant c defaults to 0, the unique value for which the
/// boosts compose as a representation.
struct GaugePhase {
  Vec v;
  Params params;
  Complex c{0.0, 0.0};

  Complex operator()(const Vec& y, double t) const {
    const double real_part = v.dot(y) - 0.5 * t * v.squaredNorm();
    return kI * (params.mass / params.hbar) * real_part + c;
  }
};

/// Boost of a closed-form wave: (y, t) -> exp(F_v(y, t)) psi(y - v t, t).
/// On a plane wave with the free dispersion this shifts k by m v / hbar.
ClosedFormWave boost(const Vec& v, const ClosedFormWave& psi, const Params& p);

/// Boost carrying an explicit integration constant in the phase.
ClosedFormWave boost_with_constant(const Vec& v, Complex c, const ClosedFormWave& psi,
                                   const Params& p);

/// True iff exp(i m v.y / hbar) is periodic on the box: m v_a L / hbar must be
/// a multiple of 2*pi on every axis.
bool is_box_commensurate(const Vec& v, double box_length, const Params& p, double tol = 1e-9);

/// Nearest velocity satisfying the box periodicity constraint.
Vec snap_to_commensurate(const Vec& v, double box_length, const Params& p);

/// Boost of grid samples at the wave's own time: spectral translation of the
/// argument by v*t followed by the pointwise gauge phase.  Exact for
/// band-limited data; preserves the discrete L2 norm.  Throws
/// IncommensurateBoost if the phase would break periodicity.
GridWave boost(const Vec& v, const GridWave& psi, const Params& p);

/// Transition between the inertial trivializations at velocities u and u + v,
/// as a map on chart coordinates and fiber values:
///   (y, t, z) -> (y - v t, t, exp(F_v(y, t)) z).
/// The map itself is the same for every source velocity u; u is kept to name
/// the pair of trivializations being connected.
struct TransitionMap {
  Velocity from;
  Vec v;
  GaugePhase phase;

  std::tuple<Vec, double, Complex> operator()(const Vec& y, double t, Complex z) const {
    return {y - t * v, t, std::exp(phase(y, t)) * z};
  }
};

TransitionMap transition_map(const Velocity& u, const Vec& v, const Params& p);

/// Maximum pointwise composition defect |T_v(T_v' psi) - T_{v+v'} psi| over a
/// probe set, with both boosts carrying the integration constant c.  Zero
/// (to rounding) exactly when exp(c) = 1.
double representation_defect(const Vec& v, const Vec& v_prime, Complex c,
                             const ClosedFormWave& psi, const Params& p,
                             const std::vector<std::pair<Vec, double>>& probes);

/// Same, over the default probe set (100 quasi-random points, |y| <= 5, t in [0, 2]).
double representation_defect(const Vec& v, const Vec& v_prime, Complex c,
                             const ClosedFormWave& psi, const Params& p);

}  // namespace galwave
