// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_RNG_HPP
#define SQPTLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "sqpt/types.hpp"

namespace sqpt {

// Counter-based seeding: every (seed, stream) pair yields an independent
// deterministic generator. Sampling avoids std:: distributions so that
// output is identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    eng_.seed(splitmix(x));
  }

  std::uint64_t bits() { return eng_(); }

  double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Index sampled from an unnormalized non-negative weight vector.
  std::size_t discrete(const std::vector<double> &w) {
    double total = 0.0;
    for (double p : w) total += p;
    double u = uniform() * total;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      u -= w[i];
      if (u < 0.0) return i;
    }
    return w.size() - 1;
  }

  CMat gaussian_cmat(Eigen::Index rows, Eigen::Index cols) {
    CMat g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = cplx(normal(), normal());
    return g;
  }

  CVec random_pure_state(Eigen::Index dim) {
    CVec v = gaussian_cmat(dim, 1).col(0);
    return v / v.norm();
  }

  // Haar-distributed unitary via QR with phase-fixed R diagonal.
  CMat haar_unitary(Eigen::Index dim) {
    CMat g = gaussian_cmat(dim, dim);
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
      cplx ph = r(i, i) / std::abs(r(i, i));
      q.col(i) *= ph;
    }
    return q;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sqpt

#endif
