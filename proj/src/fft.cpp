#include "galwave/fft.hpp"

#include <unsupported/Eigen/FFT>

#include <stdexcept>

namespace galwave::fft {

long grid_size(int n, int dim) {
  long total = 1;
  for (int a = 0; a < dim; ++a) total *= n;
  return total;
}

namespace {

// Transform every line of the flattened row-major grid along one axis.
void transform_axis(CVec& data, int n, int dim, int axis, bool forward_dir) {
  Eigen::FFT<double> engine;
  const long total = grid_size(n, dim);
  long stride = 1;
  for (int a = axis + 1; a < dim; ++a) stride *= n;
  const long block = stride * n;

  CVec line(n), out(n);
  for (long base = 0; base < total; base += block) {
    for (long offset = 0; offset < stride; ++offset) {
      const long start = base + offset;
      for (int j = 0; j < n; ++j) line[j] = data[start + j * stride];
      if (forward_dir) {
        engine.fwd(out, line);
      } else {
        engine.inv(out, line);
      }
      for (int j = 0; j < n; ++j) data[start + j * stride] = out[j];
    }
  }
}

}  // namespace

void forward(CVec& data, int n, int dim) {
  if (data.size() != grid_size(n, dim)) throw std::invalid_argument("fft: size mismatch");
  for (int a = 0; a < dim; ++a) transform_axis(data, n, dim, a, true);
}

void inverse(CVec& data, int n, int dim) {
  if (data.size() != grid_size(n, dim)) throw std::invalid_argument("fft: size mismatch");
  for (int a = 0; a < dim; ++a) transform_axis(data, n, dim, a, false);
}

void decode_index(long flat, int n, int dim, int* modes) {
  for (int a = dim - 1; a >= 0; --a) {
    modes[a] = static_cast<int>(flat % n);
    flat /= n;
  }
}

Vec wavenumber_squared(int n, int dim, double L) {
  const long total = grid_size(n, dim);
  Vec k2(total);
  int modes[3] = {0, 0, 0};
  for (long j = 0; j < total; ++j) {
    decode_index(j, n, dim, modes);
    double s = 0.0;
    for (int a = 0; a < dim; ++a) {
      const double k = wavenumber(modes[a], n, L);
      s += k * k;
    }
    k2[j] = s;
  }
  return k2;
}

Eigen::MatrixXd wavenumbers(int n, int dim, double L) {
  const long total = grid_size(n, dim);
  Eigen::MatrixXd k(total, dim);
  int modes[3] = {0, 0, 0};
  for (long j = 0; j < total; ++j) {
    decode_index(j, n, dim, modes);
    for (int a = 0; a < dim; ++a) k(j, a) = wavenumber(modes[a], n, L);
  }
  return k;
}

}  // namespace galwave::fft
