#include "galwave/schrodinger_op.hpp"

#include <cmath>

#include "galwave/errors.hpp"
#include "galwave/fft.hpp"
#include "galwave/gauge.hpp"

namespace galwave {

namespace {

Complex tabulated_value(const TabulatedPotential& tab, const Event& x) {
  const auto [y, t] = chart(tab.frame, x);
  (void)t;  // static in its own frame
  const double h = tab.box_length / tab.n_points;
  // Fractional grid position, wrapped onto [0, n) per axis.
  int base[3];
  double frac[3];
  for (int a = 0; a < tab.dim; ++a) {
    double pos = (y[a] + 0.5 * tab.box_length) / h;
    pos -= std::floor(pos / tab.n_points) * tab.n_points;
    base[a] = static_cast<int>(std::floor(pos)) % tab.n_points;
    frac[a] = pos - std::floor(pos);
  }
  // Multilinear interpolation over the 2^dim surrounding corners.
  Complex value{0.0, 0.0};
  const int corners = 1 << tab.dim;
  for (int corner = 0; corner < corners; ++corner) {
    long flat = 0;
    double weight = 1.0;
    for (int a = 0; a < tab.dim; ++a) {
      const int up = (corner >> a) & 1;
      const int idx = (base[a] + up) % tab.n_points;
      flat = flat * tab.n_points + idx;
      weight *= up ? frac[a] : 1.0 - frac[a];
    }
    value += weight * tab.values[flat];
  }
  return value;
}

}  // namespace

Complex potential_value(const Potential& U, const Event& x) {
  return std::visit(
      [&](const auto& kind) -> Complex {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, ZeroPotential>) {
          return Complex{0.0, 0.0};
        } else if constexpr (std::is_same_v<T, UniformFieldPotential>) {
          return Complex{kind.gradient.dot(x.y), 0.0};
        } else if constexpr (std::is_same_v<T, HarmonicPotential>) {
          const auto [y, t] = chart(kind.worldline_frame, x);
          (void)t;
          return Complex{0.5 * kind.stiffness * y.squaredNorm(), 0.0};
        } else {
          static_assert(std::is_same_v<T, TabulatedPotential>);
          return tabulated_value(kind, x);
        }
      },
      U.kind);
}

bool potential_is_real(const Potential& U) {
  if (const auto* tab = std::get_if<TabulatedPotential>(&U.kind)) {
    return tab->values.imag().cwiseAbs().maxCoeff() == 0.0;
  }
  return true;
}

OperatorResidual apply_operator(const ClosedFormWave& psi, const Potential& U,
                                const InertialFrame& frame,
                                const std::vector<std::pair<Vec, double>>& probes,
                                const Params& p, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("apply_operator: stencil step must be positive");
  CVec values(static_cast<long>(probes.size()));
  const double kinetic = p.hbar * p.hbar / (2.0 * p.mass);
  long i = 0;
  for (const auto& [y, t] : probes) {
    const Complex center = eval(psi, y, t, p);
    const Complex dt = (eval(psi, y, t + h, p) - eval(psi, y, t - h, p)) / (2.0 * h);
    Complex laplacian{0.0, 0.0};
    Vec yp = y;
    for (int a = 0; a < y.size(); ++a) {
      yp[a] = y[a] + h;
      const Complex plus = eval(psi, yp, t, p);
      yp[a] = y[a] - h;
      const Complex minus = eval(psi, yp, t, p);
      yp[a] = y[a];
      laplacian += (plus - 2.0 * center + minus) / (h * h);
    }
    const Complex u_val = potential_value(U, chart_inverse(frame, y, t));
    values[i++] = kI * p.hbar * dt + kinetic * laplacian - u_val * center;
  }
  return OperatorResidual{std::move(values), h};
}

OperatorResidual apply_free_operator(const GridWave& psi, const GridWave& psi_next, double dt,
                                     const Params& p) {
  if (!same_geometry(psi, psi_next)) {
    throw GridMismatch("apply_free_operator: slices have different grid geometry");
  }
  if (std::abs((psi_next.time - psi.time) - dt) > 1e-12) {
    throw GridMismatch("apply_free_operator: slice spacing does not match dt");
  }
  // i hbar (psi2 - psi1)/dt, centered at the midpoint, plus the spectral
  // Laplacian of the slice average.
  CVec mid_spectrum = 0.5 * (psi.samples + psi_next.samples);
  fft::forward(mid_spectrum, psi.n_points, psi.dim);
  const Vec k2 = fft::wavenumber_squared(psi.n_points, psi.dim, psi.box_length);
  mid_spectrum.array() *= -k2.array();
  fft::inverse(mid_spectrum, psi.n_points, psi.dim);

  const double kinetic = p.hbar * p.hbar / (2.0 * p.mass);
  CVec values = kI * p.hbar / dt * (psi_next.samples - psi.samples) + kinetic * mid_spectrum;
  return OperatorResidual{std::move(values), dt};
}

double invariance_defect(const ClosedFormWave& psi, const Vec& v, const Potential& U,
                         const InertialFrame& frame,
                         const std::vector<std::pair<Vec, double>>& probes, const Params& p,
                         double h) {
  // The boost by v maps the problem posed in `frame` onto the one posed in
  // the frame moving at -v relative to it: T_v intertwines the operator with
  // potential U o chart(frame)^-1 and the operator with potential
  // U o chart(companion)^-1, companion velocity = u - v.
  const InertialFrame companion = boosted_frame(frame, (-v).eval());
  const ClosedFormWave boosted = boost(v, psi, p);
  const OperatorResidual lhs = apply_operator(boosted, U, companion, probes, p, h);

  std::vector<std::pair<Vec, double>> shifted;
  shifted.reserve(probes.size());
  for (const auto& [y, t] : probes) shifted.emplace_back(y - t * v, t);
  const OperatorResidual rhs = apply_operator(psi, U, frame, shifted, p, h);

  const GaugePhase phase{v, p};
  double defect = 0.0;
  for (long i = 0; i < lhs.values.size(); ++i) {
    const auto& [y, t] = probes[static_cast<std::size_t>(i)];
    defect = std::max(defect, std::abs(lhs.values[i] - std::exp(phase(y, t)) * rhs.values[i]));
  }
  return defect;
}

}  // namespace galwave
