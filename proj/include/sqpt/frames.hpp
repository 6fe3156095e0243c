// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_FRAMES_HPP
#define SQPTLAB_FRAMES_HPP

#include <vector>

#include "sqpt/types.hpp"

namespace sqpt {

// d^2 linearly independent operators with their canonical duals.
// super_p has column mu equal to vec(P_mu); the duals R_mu satisfy
// <<R_mu|P_nu>> = delta_{mu nu} and sum |R_mu>><<P_mu| = I.
struct OperatorFrame {
  int d = 0;
  std::vector<CMat> ops;
  std::vector<CMat> duals;
  CMat super_p;
  CVec weights;  // Tr[P_mu]
};

// Rejects linearly dependent sets by the condition number of super_p.
OperatorFrame build_frame(const std::vector<CMat> &ops,
                          double cond_limit = 1e10);

// Frame-operator route to the same duals: F = sum |P>><<P|, R = F^{-1} P.
// Kept as an independent construction for cross-checks.
std::vector<CMat> duals_via_frame_op(const std::vector<CMat> &ops);

// Hilbert-Schmidt orthonormal basis with its unitary superoperator
// U = sum |D_mu>><<mu|.
struct OrthoBasis {
  int d = 0;
  std::vector<CMat> ops;
  CMat super_u;
};

enum class BasisKind { MatrixUnits, NormalizedPauli };

OrthoBasis standard_basis(int d, BasisKind kind);

// Rank-one POVM with exactly d^2 elements P_mu = w_mu |Phi_mu><Phi_mu|.
struct Povm {
  int d = 0;
  std::vector<CVec> vectors;
  std::vector<double> weights;
  std::vector<CMat> elements;

  OperatorFrame as_frame(double cond_limit = 1e10) const;
};

Povm build_povm(const std::vector<CVec> &vectors,
                const std::vector<double> &weights,
                double completeness_tol = 1e-8);

}  // namespace sqpt

#endif
