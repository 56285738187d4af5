#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace galwave {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Global physical constants of a model instance. Units are unconstrained;
/// the defaults give natural units in three spatial dimensions.
struct Params {
  double hbar = 1.0;
  double mass = 1.0;
  int dim = 3;

  Params() = default;
  Params(double hbar_, double mass_, int dim_) : hbar(hbar_), mass(mass_), dim(dim_) {
    if (!(hbar > 0.0)) throw std::invalid_argument("Params: hbar must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("Params: mass must be positive");
    if (dim < 1 || dim > 3) throw std::invalid_argument("Params: dim must be 1, 2 or 3");
  }
};

}  // namespace galwave
