#pragma once

// Thin n-dimensional wrappers around Eigen's 1-D FFT for flattened row-major
// grids with the same point count along every axis.  Forward transforms are
// unscaled; the inverse carries the 1/N factor, so inverse(forward(x)) == x.

#include <vector>

#include "galwave/types.hpp"

namespace galwave::fft {

/// Wavenumber of mode index j (0-based) on an n-point box of length L,
/// in the standard order: 0, 1, ..., n/2-1, -n/2, ..., -1 times 2*pi/L.
inline double wavenumber(int j, int n, double L) {
  const int f = (j < n / 2) ? j : j - n;
  return 2.0 * kPi * f / L;
}

long grid_size(int n, int dim);

void forward(CVec& data, int n, int dim);
void inverse(CVec& data, int n, int dim);

/// Decode a flat row-major index into per-axis mode indices.
void decode_index(long flat, int n, int dim, int* modes);

/// Squared wavenumber |k|^2 for every mode of an n^dim grid.
Vec wavenumber_squared(int n, int dim, double L);

/// Per-axis wavenumbers as dim columns, one row per mode of the n^dim grid.
Eigen::MatrixXd wavenumbers(int n, int dim, double L);

}  // namespace galwave::fft
