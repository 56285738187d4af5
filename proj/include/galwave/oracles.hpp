#pragma once

// Analytic ground truth: exact free solutions (plane wave, spreading
// Gaussian) and a quadrature reconstruction of the boost gauge phase from
// its defining first-order system.  These back the solver and gauge modules
// through independent code paths.

#include <functional>
#include <vector>

#include "galwave/types.hpp"
#include "galwave/wave.hpp"

namespace galwave {

/// Exact free evolution of a normalized Gaussian packet.  The packet has
/// position-space standard deviation `width` at t = t0 and carrier k0; at any
/// other time its variance per axis is width^2 * (1 + (hbar (t-t0) / (2 m width^2))^2).
Complex gaussian_packet_eval(const GaussianPacket& g, const Vec& y, double t, const Params& p);

/// exp(i (k.y - omega t)) with omega = hbar |k|^2 / (2 m), the free dispersion.
Complex plane_wave_eval(const Vec& k, const Vec& y, double t, const Params& p);

struct PathPoint {
  Vec y;
  double t;
};

/// Number of composite-trapezoid steps per polyline segment.
inline constexpr int kQuadratureSteps = 10000;

/// Line-integrate the gauge-phase differential along a polyline.  The
/// integrand comes from the defining equations d_y F = i m v / hbar and
/// d_t F = -i m |v|^2 / (2 hbar), not from the closed form; the first
/// waypoint must be the chart origin (F(0,0) = 0 normalization).
Complex reconstruct_gauge_phase_along(const Vec& v, const Params& p,
                                      const std::vector<PathPoint>& waypoints);

/// Evaluator (y, t) -> F(y, t) that integrates along `path` and then a final
/// straight segment from the path's end to the requested point.
std::function<Complex(const Vec&, double)> reconstruct_gauge_phase(const Vec& v, const Params& p,
                                                                   std::vector<PathPoint> path);

}  // namespace galwave
