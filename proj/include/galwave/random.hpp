#pragma once

// Deterministic sampling helpers.  Randomized property trials go through Rng
// (a fixed-seed mt19937_64 with a portable bits-to-double mapping, so runs
// are reproducible independent of the standard library's distributions) and
// quasi-random probe sets come from a Halton sequence.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "galwave/types.hpp"

namespace galwave {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1), using the top 53 bits of the generator.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Vec uniform_vec(int n, double lo, double hi) {
    Vec out(n);
    for (int i = 0; i < n; ++i) out[i] = uniform(lo, hi);
    return out;
  }

  Complex uniform_complex(double radius) {
    return Complex{uniform(-radius, radius), uniform(-radius, radius)};
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

/// k-th element of the van der Corput sequence in the given base (k >= 0).
inline double van_der_corput(std::uint64_t k, unsigned base) {
  double x = 0.0, f = 1.0 / base;
  for (std::uint64_t n = k + 1; n > 0; n /= base) {
    x += f * static_cast<double>(n % base);
    f /= base;
  }
  return x;
}

/// Deterministic quasi-random probe set: `count` points with spatial part in
/// [-y_halfwidth, y_halfwidth]^dim and time in [0, t_max].
inline std::vector<std::pair<Vec, double>> halton_probes(int dim, int count, double y_halfwidth,
                                                         double t_max) {
  static const unsigned bases[4] = {2, 3, 5, 7};
  std::vector<std::pair<Vec, double>> probes;
  probes.reserve(count);
  for (int k = 0; k < count; ++k) {
    Vec y(dim);
    for (int a = 0; a < dim; ++a) {
      y[a] = y_halfwidth * (2.0 * van_der_corput(k, bases[a]) - 1.0);
    }
    const double t = t_max * van_der_corput(k, bases[3]);
    probes.emplace_back(std::move(y), t);
  }
  return probes;
}

}  // namespace galwave
