// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_SIC_HPP
#define SQPTLAB_SIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sqpt/frames.hpp"
#include "sqpt/types.hpp"

namespace sqpt {

// Symmetric informationally complete POVM: the Weyl-Heisenberg orbit of a
// fiducial vector, with equiangular overlaps |<Phi_mu|Phi_nu>|^2 =
// (1 + delta_{mu nu}) / (1 + d) and weights 1/d.
struct SicPovm {
  int d = 0;
  CVec fiducial;
  std::vector<CVec> vectors;

  Povm povm(double completeness_tol = 1e-8) const;
  // Max deviation of the pairwise overlaps from the equiangular value.
  double overlap_residual() const;
};

// Analytic qubit SIC: the tetrahedron states.
SicPovm sic_d2();

// Weyl-Heisenberg displacements X^a Z^b, a,b in {0..d-1}.
std::vector<CMat> wh_displacements(int d);

// sum_{mu,nu} |<Phi_mu|Phi_nu>|^4. Minimum over d^2 unit vectors that form
// a WH orbit is 2 d^3 / (d + 1), attained exactly by a SIC.
double frame_potential(const std::vector<CVec> &vectors);

inline double sic_potential_minimum(int d) {
  return 2.0 * d * d * d / (d + 1.0);
}

struct SearchReport {
  int d = 0;
  int iterations = 0;
  double potential = 0.0;
  bool achieved_min = false;
  std::uint64_t seed = 0;
};

// Projected gradient descent over the fiducial with random restarts.
// Throws SearchError (carrying the best potential found) on non-convergence.
std::pair<SicPovm, SearchReport> sic_search(int d, std::uint64_t seed,
                                            int max_iters = 20000,
                                            int restarts = 20,
                                            double tol = 1e-6);

// Closed-form canonical duals R_mu = (d+1) Phi_mu - I for the frame
// {P_mu = Phi_mu / d}.
std::vector<CMat> sic_duals(const SicPovm &s);

// Closed-form frame operator of a SIC frame and its inverse:
// F = (I + |I>><<I|) / (d(d+1)),  F^-1 = d(d+1) I - d |I>><<I|.
std::pair<CMat, CMat> frame_op_closed_form(int d);

// Tr[K^-1] with K = sum |P>><<P| / Tr[P]; equals d(d(d+1)-1) exactly for a
// tight rank-one IC-POVM and is strictly larger otherwise.
double k_inverse_trace(const Povm &p);

}  // namespace sqpt

#endif
