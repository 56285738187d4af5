#pragma once

// The boost line bundle over space-time and its phase-space reductions.
//
// Elements are stored as representatives (u, x, z) of orbits of the additive
// boost action on velocity-event-fiber triples; the action multiplies the
// fiber value by a unit-modulus phase depending on (u, x, v) and a fixed
// reference event x0.  Orbit operations (addition, trivialization) normalize
// representatives to a chosen base velocity, which makes representative
// independence the executable form of well-definedness.  Transitions between
// the inertial trivializations reproduce the gauge module's boost maps.

#include <functional>

#include "galwave/spacetime.hpp"
#include "galwave/types.hpp"
#include "galwave/wave.hpp"

namespace galwave {

/// Representative (u, x, z) of a bundle element over event x.
struct BundleElement {
  Velocity u;
  Event x;
  Complex z;
};

/// A bundle element expressed in the trivialization at some velocity:
/// chart coordinates of its base event plus the fiber value.
struct TrivializedElement {
  Vec y;
  double t;
  Complex z;
};

/// Representative (u, x, p) of an affine covector; p holds components dual
/// to the fiducial (y, t) coordinates (p.y spatial, p.t temporal).
struct AffinePhasePoint {
  Velocity u;
  Event x;
  SpacetimeVector p;
};

/// Boost action on representatives: base velocity shifts by v, the fiber
/// value picks up the unit-modulus phase
///   exp[(i m / hbar) (<v | x - x0 - tau(x - x0) u> - (tau(x - x0)/2) |v|^2)].
BundleElement act(const Vec& v, const BundleElement& e, const Params& p, const Event& x0);

/// Representative of the same orbit with base velocity u_base.
BundleElement normalize_to(const Velocity& u_base, const BundleElement& e, const Params& p,
                           const Event& x0);

/// Fiberwise addition; both summands must sit over the same event.  The right
/// summand is normalized to the left one's base velocity before the fiber
/// values are added, so the result is representative-independent.
BundleElement add(const BundleElement& e1, const BundleElement& e2, const Params& p,
                  const Event& x0);

inline BundleElement scale(Complex a, const BundleElement& e) {
  return BundleElement{e.u, e.x, a * e.z};
}

/// |z| of any representative; the action phases are unit modulus, so this is
/// well defined on orbits.
inline double fiber_norm(const BundleElement& e) { return std::abs(e.z); }

/// Expression of an orbit in the trivialization at velocity u: normalize the
/// representative to base u and read off chart coordinates and fiber value.
/// Composites trivialize(u+v) o trivialize(u)^-1 equal gauge transition maps.
TrivializedElement trivialize(const Velocity& u, const BundleElement& e, const Params& p,
                              const Event& x0);

/// Sample a section of the bundle as a grid wavefunction in the
/// trivialization at velocity u.  The section must return elements in the
/// fiber over its argument (FiberMismatch otherwise).
GridWave sample_section(const Velocity& u, const std::function<BundleElement(const Event&)>& section,
                        const GridSpec& region, const Params& p, const Event& x0);

/// Additive level shift of the reduced (R,+)-bundle when the base velocity
/// changes from u_from to u_to over event x: the real number r' - r with
/// exp(i (r' - r) / hbar) equal to the boost action's fiber phase.
double base_change_phase(const Velocity& u_from, const Velocity& u_to, const Event& x,
                         const Params& p, const Event& x0);

/// Velocity-difference pairing governing the transformation of momenta
/// between frames: <u_new - u_old | v - tau(v) (u_new + u_old) / 2>.
/// Linear in v, antisymmetric under swapping the velocities.
double momentum_transition_form(const Velocity& u_new, const Velocity& u_old,
                                const SpacetimeVector& v);

/// Covector increment for a change of base velocity, evaluated on v:
///   (1/2) |u_new - u_old|^2 tau(v) - <v - tau(v) u_old | u_new - u_old>,
/// which equals -momentum_transition_form(u_new, u_old, v).
double covector_increment_form(const Velocity& u_old, const Velocity& u_new,
                               const SpacetimeVector& v);

/// Rebase an affine covector representative to a new velocity:
/// p' = p + m * (increment form), applied on the dual basis.
AffinePhasePoint rebase_covector(const AffinePhasePoint& q, const Velocity& u_new, const Params& p,
                                 const Event& x0);

}  // namespace galwave
