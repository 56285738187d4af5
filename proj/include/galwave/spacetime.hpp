#pragma once

// Flat Newtonian space-time with a fixed fiducial chart.
//
// Every affine object is stored in coordinates of one fiducial inertial
// frame (origin event 0, velocity 0).  Observable quantities are always
// chart-relative, so the fiducial choice never leaks into results.
// A point of space-time is an Event; differences of events split into a
// spatial part (carrying the Euclidean metric) and a time part (the clock
// form).  Velocities are stored as offsets from the fiducial velocity.

#include <cmath>
#include <utility>

#include "galwave/errors.hpp"
#include "galwave/types.hpp"

namespace galwave {

struct Event {
  Vec y;     // fiducial spatial coordinates
  double t;  // fiducial time coordinate
};

/// Element of the simultaneity subspace (kernel of the clock form).
struct SpatialVector {
  Vec w;
  double norm() const { return w.norm(); }
};

/// Inertial velocity, stored as the spatial offset from the fiducial one.
struct Velocity {
  Vec w;
};

struct InertialFrame {
  Event origin;
  Velocity velocity;
};

/// Vector in the model space of space-time: spatial components plus the
/// value of the clock form on it.  Also used as a container for covector
/// components dual to (y, t).
struct SpacetimeVector {
  Vec y;
  double t;
};

/// Coordinate form of a change of inertial frame,
/// (y, t) -> (y - dy - v t, t - dt).
struct FrameChange {
  Vec dy;
  double dt;
  Vec v;  // relative velocity of the target frame
};

inline Event event(Vec y, double t) { return Event{std::move(y), t}; }

inline InertialFrame fiducial_frame(int dim) {
  return InertialFrame{Event{Vec::Zero(dim), 0.0}, Velocity{Vec::Zero(dim)}};
}

/// Same origin, velocity shifted by dv (a pure boost of the frame).
inline InertialFrame boosted_frame(const InertialFrame& f, const Vec& dv) {
  return InertialFrame{f.origin, Velocity{f.velocity.w + dv}};
}

/// Coordinates of an event in the chart attached to a frame:
/// spatial part of (x - x0) after removing the drift t * u, and elapsed time.
inline std::pair<Vec, double> chart(const InertialFrame& f, const Event& e) {
  const double dt = e.t - f.origin.t;
  return {e.y - f.origin.y - dt * f.velocity.w, dt};
}

/// Event whose chart coordinates in frame f are (y, t).
inline Event chart_inverse(const InertialFrame& f, const Vec& y, double t) {
  return Event{f.origin.y + y + t * f.velocity.w, f.origin.t + t};
}

/// Coordinate map taking chart(a, e) to chart(b, e) for every event e.
/// The displacement dy is measured with the target frame's velocity; that is
/// what makes the returned map exact for all events, including those off the
/// origins' simultaneity slice.
inline FrameChange frame_change(const InertialFrame& a, const InertialFrame& b) {
  const double dt = b.origin.t - a.origin.t;
  const Vec dy = b.origin.y - a.origin.y - dt * b.velocity.w;
  return FrameChange{dy, dt, b.velocity.w - a.velocity.w};
}

inline std::pair<Vec, double> apply(const FrameChange& c, const Vec& y, double t) {
  return {y - c.dy - t * c.v, t - c.dt};
}

inline FrameChange inverse(const FrameChange& c) {
  // Solve (y', t') = (y - dy - v t, t - dt) for (y, t).
  return FrameChange{-c.dy - c.dt * c.v, -c.dt, -c.v};
}

/// Composition second(first(.)).
inline FrameChange compose(const FrameChange& second, const FrameChange& first) {
  return FrameChange{first.dy + second.dy - first.dt * second.v, first.dt + second.dt,
                     first.v + second.v};
}

/// Clock form on the difference of two events; frame-independent.
inline double time_between(const Event& e1, const Event& e2) { return e1.t - e2.t; }

inline constexpr double kSimultaneityTol = 1e-12;

/// Euclidean distance of two simultaneous events.  The metric only exists on
/// the simultaneity subspace, hence the precondition.
inline double distance(const Event& e1, const Event& e2) {
  const double dt = time_between(e1, e2);
  if (std::abs(dt) > kSimultaneityTol) {
    throw NonSimultaneousEvents("distance: events are not simultaneous, dt = " +
                                std::to_string(dt));
  }
  return (e1.y - e2.y).norm();
}

}  // namespace galwave
