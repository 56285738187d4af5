#include "galwave/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace galwave {

// Product of 1-D spreading Gaussians.  Per axis, with a = y - center,
// s2 = width^2 and alpha = 1 + i hbar (t - t0) / (2 m s2),
//   psi = (2 pi s2)^(-1/4) alpha^(-1/2)
//         * exp( (4 s2^2 k0^2 + 4 i s2 k0 a - a^2) / (4 s2 alpha) - s2 k0^2 ),
// obtained by evolving the t0 spectrum under the free dispersion.  The
// packet stays L2-normalized for all t; |psi|^2 has variance s2 |alpha|^2.
Complex gaussian_packet_eval(const GaussianPacket& g, const Vec& y, double t, const Params& p) {
  if (!(g.width > 0.0)) throw std::invalid_argument("gaussian_packet_eval: width must be positive");
  const double s2 = g.width * g.width;
  const Complex alpha = 1.0 + kI * p.hbar * (t - g.t0) / (2.0 * p.mass * s2);
  const double prefactor = std::pow(2.0 * kPi * s2, -0.25);

  Complex result{1.0, 0.0};
  const Complex inv_alpha_sqrt = 1.0 / std::sqrt(alpha);
  for (int a = 0; a < y.size(); ++a) {
    const double da = y[a] - g.center[a];
    const double k0 = g.k0[a];
    const Complex exponent =
        (4.0 * s2 * s2 * k0 * k0 + 4.0 * kI * s2 * k0 * da - da * da) / (4.0 * s2 * alpha) -
        s2 * k0 * k0;
    result *= prefactor * inv_alpha_sqrt * std::exp(exponent);
  }
  return result;
}

Complex plane_wave_eval(const Vec& k, const Vec& y, double t, const Params& p) {
  const double omega = p.hbar * k.squaredNorm() / (2.0 * p.mass);
  return std::exp(kI * (k.dot(y) - omega * t));
}

namespace {

// Composite trapezoid of f over [0, 1] with kQuadratureSteps panels.
template <typename F>
Complex trapezoid_unit(const F& f) {
  const int n = kQuadratureSteps;
  Complex sum = 0.5 * (f(0.0) + f(1.0));
  for (int i = 1; i < n; ++i) sum += f(static_cast<double>(i) / n);
  return sum / static_cast<double>(n);
}

}  // namespace

Complex reconstruct_gauge_phase_along(const Vec& v, const Params& p,
                                      const std::vector<PathPoint>& waypoints) {
  if (waypoints.empty()) throw std::invalid_argument("reconstruct_gauge_phase: empty path");
  if (waypoints.front().y.norm() != 0.0 || waypoints.front().t != 0.0) {
    throw std::invalid_argument("reconstruct_gauge_phase: path must start at the chart origin");
  }

  // Right-hand sides of the defining first-order system, as functions of the
  // evaluation point.  They happen to be constant, but the quadrature does
  // not rely on that.
  const auto grad_y = [&](const Vec& /*y*/, double /*t*/) -> CVec {
    return (kI * (p.mass / p.hbar) * v).eval();
  };
  const auto d_t = [&](const Vec& /*y*/, double /*t*/) -> Complex {
    return -kI * (p.mass / (2.0 * p.hbar)) * v.squaredNorm();
  };

  Complex value{0.0, 0.0};
  for (std::size_t s = 1; s < waypoints.size(); ++s) {
    const PathPoint& a = waypoints[s - 1];
    const PathPoint& b = waypoints[s];
    const Vec dy = b.y - a.y;
    const double dt = b.t - a.t;
    value += trapezoid_unit([&](double u) -> Complex {
      const Vec y = a.y + u * dy;
      const double t = a.t + u * dt;
      // cwiseProduct, not dot(): Eigen's complex dot conjugates the left factor
      return grad_y(y, t).cwiseProduct(dy.cast<Complex>()).sum() + d_t(y, t) * dt;
    });
  }
  return value;
}

std::function<Complex(const Vec&, double)> reconstruct_gauge_phase(const Vec& v, const Params& p,
                                                                   std::vector<PathPoint> path) {
  if (path.empty()) path.push_back(PathPoint{Vec::Zero(v.size()), 0.0});
  return [v, p, path = std::move(path)](const Vec& y, double t) -> Complex {
    std::vector<PathPoint> full = path;
    full.push_back(PathPoint{y, t});
    return reconstruct_gauge_phase_along(v, p, full);
  };
}

}  // namespace galwave
