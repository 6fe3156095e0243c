// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include "sqpt/types.hpp"

namespace sqpt {

bool is_hermitian(const CMat &a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const CMat &a, double tol) {
  if (a.rows() != a.cols()) return false;
  CMat id = CMat::Identity(a.rows(), a.cols());
  return (a.adjoint() * a - id).cwiseAbs().maxCoeff() <= tol;
}

double min_eigenvalue(const CMat &a) {
  CMat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_psd(const CMat &a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  return min_eigenvalue(a) >= -tol;
}

}  // namespace sqpt
