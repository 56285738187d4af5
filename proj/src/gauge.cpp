#include "galwave/gauge.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "galwave/errors.hpp"
#include "galwave/fft.hpp"
#include "galwave/random.hpp"

namespace galwave {

ClosedFormWave boost_with_constant(const Vec& v, Complex c, const ClosedFormWave& psi,
                                   const Params& p) {
  (void)p;
  return ClosedFormWave{BoostedWave{v, c, std::make_shared<const ClosedFormWave>(psi)}};
}

ClosedFormWave boost(const Vec& v, const ClosedFormWave& psi, const Params& p) {
  return boost_with_constant(v, Complex{0.0, 0.0}, psi, p);
}

bool is_box_commensurate(const Vec& v, double box_length, const Params& p, double tol) {
  for (int a = 0; a < v.size(); ++a) {
    const double q = p.mass * v[a] * box_length / (2.0 * kPi * p.hbar);
    if (std::abs(q - std::round(q)) > tol) return false;
  }
  return true;
}

Vec snap_to_commensurate(const Vec& v, double box_length, const Params& p) {
  Vec snapped(v.size());
  for (int a = 0; a < v.size(); ++a) {
    const double q = std::round(p.mass * v[a] * box_length / (2.0 * kPi * p.hbar));
    snapped[a] = 2.0 * kPi * p.hbar * q / (p.mass * box_length);
  }
  return snapped;
}

GridWave boost(const Vec& v, const GridWave& psi, const Params& p) {
  if (p.dim != psi.dim || v.size() != psi.dim) {
    throw GridMismatch("boost: dimension mismatch between velocity and grid");
  }
  if (!is_box_commensurate(v, psi.box_length, p)) {
    std::ostringstream msg;
    msg << "boost: velocity is not box-commensurate (m v L / hbar must be a multiple of 2*pi); "
        << "nearest admissible velocity:";
    const Vec snapped = snap_to_commensurate(v, psi.box_length, p);
    for (int a = 0; a < snapped.size(); ++a) msg << ' ' << snapped[a];
    throw IncommensurateBoost(msg.str());
  }

  CVec samples = psi.samples;
  const int n = psi.n_points;
  const int dim = psi.dim;

  // Argument shift psi(y - v t): multiply the spectrum by exp(-i k . (v t)).
  const Vec shift = v * psi.time;
  if (shift.squaredNorm() > 0.0) {
    fft::forward(samples, n, dim);
    const Eigen::MatrixXd k = fft::wavenumbers(n, dim, psi.box_length);
    for (long j = 0; j < samples.size(); ++j) {
      samples[j] *= std::exp(-kI * k.row(j).dot(shift));
    }
    fft::inverse(samples, n, dim);
  }

  // Pointwise gauge phase exp(F_v(y, t)); periodic on the box by the
  // commensurability precondition.
  const GaugePhase phase{v, p};
  const double h = psi.grid_step();
  int modes[3];
  Vec y(dim);
  for (long j = 0; j < samples.size(); ++j) {
    fft::decode_index(j, n, dim, modes);
    for (int a = 0; a < dim; ++a) y[a] = -0.5 * psi.box_length + modes[a] * h;
    samples[j] *= std::exp(phase(y, psi.time));
  }
  return GridWave(std::move(samples), psi.box_length, n, dim, psi.time);
}

TransitionMap transition_map(const Velocity& u, const Vec& v, const Params& p) {
  return TransitionMap{u, v, GaugePhase{v, p}};
}

double representation_defect(const Vec& v, const Vec& v_prime, Complex c,
                             const ClosedFormWave& psi, const Params& p,
                             const std::vector<std::pair<Vec, double>>& probes) {
  const ClosedFormWave twice = boost_with_constant(v, c, boost_with_constant(v_prime, c, psi, p), p);
  const ClosedFormWave once = boost_with_constant(v + v_prime, c, psi, p);
  double defect = 0.0;
  for (const auto& [y, t] : probes) {
    defect = std::max(defect, std::abs(eval(twice, y, t, p) - eval(once, y, t, p)));
  }
  return defect;
}

double representation_defect(const Vec& v, const Vec& v_prime, Complex c,
                             const ClosedFormWave& psi, const Params& p) {
  return representation_defect(v, v_prime, c, psi, p, halton_probes(p.dim, 100, 5.0, 2.0));
}

}  // namespace galwave
