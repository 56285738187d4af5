#include "galwave/wave.hpp"

#include <cmath>
#include <stdexcept>

#include "galwave/fft.hpp"
#include "galwave/gauge.hpp"
#include "galwave/oracles.hpp"

namespace galwave {

Complex eval(const ClosedFormWave& w, const Vec& y, double t, const Params& p) {
  return std::visit(
      [&](const auto& node) -> Complex {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PlaneWave>) {
          return std::exp(kI * (node.k.dot(y) - node.omega * t));
        } else if constexpr (std::is_same_v<T, GaussianPacket>) {
          return gaussian_packet_eval(node, y, t, p);
        } else if constexpr (std::is_same_v<T, LinearCombination>) {
          Complex sum{0.0, 0.0};
          for (const auto& [coeff, term] : node.terms) sum += coeff * eval(term, y, t, p);
          return sum;
        } else {
          static_assert(std::is_same_v<T, BoostedWave>);
          const GaugePhase phase{node.v, p, node.c};
          return std::exp(phase(y, t)) * eval(*node.inner, y - t * node.v, t, p);
        }
      },
      w.node);
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

GridWave::GridWave(CVec samples_, double box_length_, int n_points_, int dim_, double time_)
    : samples(std::move(samples_)),
      box_length(box_length_),
      n_points(n_points_),
      dim(dim_),
      time(time_) {
  if (!(box_length > 0.0)) throw std::invalid_argument("GridWave: box_length must be positive");
  if (dim < 1 || dim > 3) throw std::invalid_argument("GridWave: dim must be 1, 2 or 3");
  if (!is_power_of_two(n_points)) {
    throw std::invalid_argument("GridWave: n_points must be a power of two");
  }
  if (samples.size() != fft::grid_size(n_points, dim)) {
    throw std::invalid_argument("GridWave: sample count must be n_points^dim");
  }
}

bool same_geometry(const GridWave& a, const GridWave& b) {
  return a.box_length == b.box_length && a.n_points == b.n_points && a.dim == b.dim;
}

double l2_norm(const GridWave& w) {
  const double cell = std::pow(w.grid_step(), w.dim);
  return std::sqrt(cell * w.samples.squaredNorm());
}

double l2_relative_error(const GridWave& a, const GridWave& b) {
  if (!same_geometry(a, b)) throw std::invalid_argument("l2_relative_error: geometry mismatch");
  return std::sqrt((a.samples - b.samples).squaredNorm() / b.samples.squaredNorm());
}

Vec expected_momentum(const GridWave& w) {
  CVec spectrum = w.samples;
  fft::forward(spectrum, w.n_points, w.dim);
  const Eigen::MatrixXd k = fft::wavenumbers(w.n_points, w.dim, w.box_length);
  const Vec weights = spectrum.cwiseAbs2();
  return (k.transpose() * weights) / weights.sum();
}

double boundary_tail(const GridWave& w) {
  const long total = w.samples.size();
  int modes[3];
  double tail = 0.0;
  for (long j = 0; j < total; ++j) {
    fft::decode_index(j, w.n_points, w.dim, modes);
    bool on_face = false;
    for (int a = 0; a < w.dim; ++a) {
      if (modes[a] == 0 || modes[a] == w.n_points - 1) on_face = true;
    }
    if (on_face) tail = std::max(tail, std::abs(w.samples[j]));
  }
  return tail;
}

GridWave sample_closed_form(const ClosedFormWave& w, const GridSpec& g, const Params& p) {
  if (p.dim != g.dim) throw std::invalid_argument("sample_closed_form: dim mismatch");
  const long total = fft::grid_size(g.n_points, g.dim);
  CVec samples(total);
  const double h = g.box_length / g.n_points;
  int modes[3];
  Vec y(g.dim);
  for (long j = 0; j < total; ++j) {
    fft::decode_index(j, g.n_points, g.dim, modes);
    for (int a = 0; a < g.dim; ++a) y[a] = -0.5 * g.box_length + modes[a] * h;
    samples[j] = eval(w, y, g.time, p);
  }
  return GridWave(std::move(samples), g.box_length, g.n_points, g.dim, g.time);
}

}  // namespace galwave
