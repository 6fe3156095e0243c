// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_TOMOGRAPHY_HPP
#define SQPTLAB_TOMOGRAPHY_HPP

#include <cstdint>
#include <vector>

#include "sqpt/channels.hpp"
#include "sqpt/frames.hpp"
#include "sqpt/sic.hpp"
#include "sqpt/types.hpp"

namespace sqpt {

// chi = U^dag chi^c U in the given orthonormal basis.
CMat chi_matrix(const KrausSet &k, const OrthoBasis &basis);

// lambda = P^-1 lambda^c P in the given frame; column nu holds the expansion
// coefficients of eps(P_nu) over the frame.
CMat lambda_matrix(const KrausSet &k, const OperatorFrame &frame);

// beta = (P^-1 (x) P^T) beta^c (U (x) U^*), the d^4 x d^4 map with
// vec2(lambda) = beta vec2(chi). The matrix is materialized only for small d;
// the factored form below is always available.
struct BetaOp {
  int d = 0;
  OrthoBasis basis;
  OperatorFrame frame;
  CMat mat;  // empty unless materialized

  bool materialized() const { return mat.size() > 0; }
};

BetaOp beta_op(const OrthoBasis &basis, const OperatorFrame &frame,
               int materialize_up_to_d = 3);

// Single coefficient <<R_gamma| D_mu (x) D_nu^* |P_delta>>.
cplx beta_entry(const BetaOp &b, std::size_t gamma, std::size_t delta,
                std::size_t mu, std::size_t nu);

// Factored application of beta and of its closed-form inverse; no d^4-sized
// matrices involved.
CMat beta_apply(const BetaOp &b, const CMat &chi);

// Closed-form inverse: chi = U^dag reshuffle(P lambda P^-1) U.
CMat solve_chi(const CMat &lambda_m, const BetaOp &b);

// Generic dense linear solve of beta vec2(chi) = vec2(lambda), used as the
// independent route in uniqueness checks. Requires a materialized beta.
CMat solve_chi_linear(const CMat &lambda_m, const BetaOp &b);

// Product frame on the doubled space: Pi_x = Pbar_mu (x) P_nu^* with
// x = d^2 mu + nu, and duals Q_x = Rbar_mu (x) R_nu^*.
struct ProductFrame {
  int d = 0;  // single-system dimension; operators act on d^2
  std::vector<CMat> elements;
  std::vector<CMat> duals;
};

ProductFrame product_frame(const Povm &prep, const Povm &meas,
                           double cond_limit = 1e10);

struct DataMatrix {
  enum class Provenance { Exact, Sampled };
  int d = 0;
  RMat omega;
  Provenance provenance = Provenance::Exact;
  long shots = 0;
  std::uint64_t seed = 0;
};

// omega_{mu nu} = Tr[Pbar_mu^dag eps(P_nu)].
DataMatrix omega_exact(const KrausSet &k, const Povm &prep, const Povm &meas);

// lambda^c = sum omega_{mu nu} |Rbar_mu>><<R_nu| (measurement duals left,
// preparation duals right).
CMat reconstruct_lambda_c(const DataMatrix &w, const OperatorFrame &prep,
                          const OperatorFrame &meas);

// chi^c = sum omega_{mu nu} Rbar_mu (x) R_nu^*.
CMat reconstruct_chi_c(const DataMatrix &w, const OperatorFrame &prep,
                       const OperatorFrame &meas);

// SIC closed-form reconstruction. With unital=true the simplified formula is
// used and cross-checked against the general one; disagreement beyond tol
// raises ConsistencyError.
CMat reconstruct_chi_sic(const DataMatrix &w, const SicPovm &s,
                         bool unital = false, double consistency_tol = 1e-6);

// Delta_p(Q) = sum_x p(x) (Q_x|Q_x) with p(x) = Tr[Pi_x^dag rho].
double delta_p(const ProductFrame &pf, const CMat &rho);

// Haar average (1/d^2) sum_x Tr[Pi_x] (Q_x|Q_x).
double delta_p_avg(const ProductFrame &pf);

struct DeltaConstants {
  double avg_opt;      // (d(d+1)-1)^2
  double joint_opt;    // d^4 - d^2 + 1/d^2
  double ratio_bound;  // (d-1)/(d+1)
};

DeltaConstants delta_constants(int d);

}  // namespace sqpt

#endif
