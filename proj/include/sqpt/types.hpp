// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_TYPES_HPP
#define SQPTLAB_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sqpt {

// Dense complex matrices are the universal numeric carrier.
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using cplx = std::complex<double>;

inline constexpr double kStructuralTol = 1e-10;

// Error hierarchy. Argument errors use std::invalid_argument directly.
struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PovmError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RepresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SearchError : std::runtime_error {
  double best_potential;
  SearchError(const std::string &msg, double best)
      : std::runtime_error(msg), best_potential(best) {}
};

bool is_hermitian(const CMat &a, double tol = kStructuralTol);
bool is_unitary(const CMat &a, double tol = kStructuralTol);
bool is_psd(const CMat &a, double tol = kStructuralTol);

// Smallest eigenvalue of the Hermitian part, used as a PSD diagnostic.
double min_eigenvalue(const CMat &a);

}  // namespace sqpt

#endif
