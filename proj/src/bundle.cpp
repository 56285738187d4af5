#include "galwave/bundle.hpp"

#include <cmath>
#include <sstream>

#include "galwave/errors.hpp"
#include "galwave/fft.hpp"

namespace galwave {

namespace {

// Exponent (in units of hbar) of the action phase picked up when boosting a
// representative at base velocity u over event x by v:
//   m (<v | x - x0 - tau(x - x0) u> - (tau(x - x0) / 2) |v|^2).
double action_exponent(const Vec& v, const Velocity& u, const Event& x, const Params& p,
                       const Event& x0) {
  const Vec dx = x.y - x0.y;
  const double tau = x.t - x0.t;
  return p.mass * (v.dot(dx - tau * u.w) - 0.5 * tau * v.squaredNorm());
}

}  // namespace

BundleElement act(const Vec& v, const BundleElement& e, const Params& p, const Event& x0) {
  const Complex multiplier = std::exp(kI * action_exponent(v, e.u, e.x, p, x0) / p.hbar);
  return BundleElement{Velocity{e.u.w + v}, e.x, e.z * multiplier};
}

BundleElement normalize_to(const Velocity& u_base, const BundleElement& e, const Params& p,
                           const Event& x0) {
  BundleElement shifted = act(u_base.w - e.u.w, e, p, x0);
  shifted.u = u_base;  // avoid residual rounding in the base velocity
  return shifted;
}

BundleElement add(const BundleElement& e1, const BundleElement& e2, const Params& p,
                  const Event& x0) {
  if (e1.x.t != e2.x.t || (e1.x.y.array() != e2.x.y.array()).any()) {
    throw DifferentFibers("add: summands lie over different events");
  }
  const BundleElement e2_rebased = normalize_to(e1.u, e2, p, x0);
  return BundleElement{e1.u, e1.x, e1.z + e2_rebased.z};
}

TrivializedElement trivialize(const Velocity& u, const BundleElement& e, const Params& p,
                              const Event& x0) {
  const BundleElement rep = normalize_to(u, e, p, x0);
  const auto [y, t] = chart(InertialFrame{x0, u}, rep.x);
  return TrivializedElement{y, t, rep.z};
}

GridWave sample_section(const Velocity& u, const std::function<BundleElement(const Event&)>& section,
                        const GridSpec& region, const Params& p, const Event& x0) {
  const InertialFrame frame{x0, u};
  const long total = fft::grid_size(region.n_points, region.dim);
  CVec samples(total);
  const double h = region.box_length / region.n_points;
  int modes[3];
  Vec y(region.dim);
  for (long j = 0; j < total; ++j) {
    fft::decode_index(j, region.n_points, region.dim, modes);
    for (int a = 0; a < region.dim; ++a) y[a] = -0.5 * region.box_length + modes[a] * h;
    const Event x = chart_inverse(frame, y, region.time);
    const BundleElement e = section(x);
    if ((e.x.y - x.y).lpNorm<Eigen::Infinity>() > 1e-9 || std::abs(e.x.t - x.t) > 1e-9) {
      throw FiberMismatch("sample_section: section value lies over a different event");
    }
    samples[j] = trivialize(u, e, p, x0).z;
  }
  return GridWave(std::move(samples), region.box_length, region.n_points, region.dim, region.time);
}

double base_change_phase(const Velocity& u_from, const Velocity& u_to, const Event& x,
                         const Params& p, const Event& x0) {
  return action_exponent(u_to.w - u_from.w, u_from, x, p, x0);
}

double momentum_transition_form(const Velocity& u_new, const Velocity& u_old,
                                const SpacetimeVector& v) {
  const Vec diff = u_new.w - u_old.w;
  const Vec mean = 0.5 * (u_new.w + u_old.w);
  return diff.dot(v.y - v.t * mean);
}

double covector_increment_form(const Velocity& u_old, const Velocity& u_new,
                               const SpacetimeVector& v) {
  const Vec diff = u_new.w - u_old.w;
  return 0.5 * diff.squaredNorm() * v.t - (v.y - v.t * u_old.w).dot(diff);
}

AffinePhasePoint rebase_covector(const AffinePhasePoint& q, const Velocity& u_new, const Params& p,
                                 const Event& x0) {
  (void)x0;  // the increment form is constant in x
  const Vec diff = u_new.w - q.u.w;
  SpacetimeVector shifted = q.p;
  // Increment form on the dual basis: spatial basis vectors have tau = 0,
  // the time basis vector has tau = 1.
  shifted.y -= p.mass * diff;
  shifted.t += p.mass * (0.5 * diff.squaredNorm() + q.u.w.dot(diff));
  return AffinePhasePoint{u_new, q.x, shifted};
}

}  // namespace galwave
