#pragma once

// Seeded generators for the property loops.

#include <cmath>
#include <cstdint>
#include <random>

#include "pairdiss/algebra.hpp"

namespace pairdiss::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  /// Uniform on [lo, hi] but never within `gap` of zero.
  double nonzero(double lo, double hi, double gap = 1e-3) {
    for (;;) {
      const double v = uniform(lo, hi);
      if (std::abs(v) >= gap) return v;
    }
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  /// Flat Dirichlet draw, summing to one.
  BellPopulations populations() {
    double w[4];
    double total = 0.0;
    for (double& x : w) {
      x = std::exponential_distribution<double>(1.0)(engine_);
      total += x;
    }
    const double p0 = w[0] / total;
    const double pp = w[1] / total;
    const double pm = w[2] / total;
    return BellPopulations::make(p0, pp, pm, 1.0 - p0 - pp - pm);
  }

  /// Ginibre-induced full-rank state G G^dag / Tr.
  DensityMatrix density_matrix(int dim = 4) {
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = cplx(normal(), normal());
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix::cleaned(rho);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pairdiss::testing
