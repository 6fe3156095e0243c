// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include "sqpt/tomography.hpp"

#include <cmath>
#include <sstream>

#include "sqpt/vecrep.hpp"

namespace sqpt {

CMat chi_matrix(const KrausSet &k, const OrthoBasis &basis) {
  if (basis.d != k.d)
    throw std::invalid_argument("chi_matrix: dimension mismatch");
  return basis.super_u.adjoint() * chi_c(k) * basis.super_u;
}

CMat lambda_matrix(const KrausSet &k, const OperatorFrame &frame) {
  if (frame.d != k.d)
    throw std::invalid_argument("lambda_matrix: dimension mismatch");
  return frame.super_p.partialPivLu().solve(lambda_c(k) * frame.super_p);
}

BetaOp beta_op(const OrthoBasis &basis, const OperatorFrame &frame,
               int materialize_up_to_d) {
  if (basis.d != frame.d)
    throw std::invalid_argument("beta_op: basis/frame dimension mismatch");
  BetaOp b;
  b.d = basis.d;
  b.basis = basis;
  b.frame = frame;
  if (b.d <= materialize_up_to_d) {
    CMat pinv = frame.super_p.inverse();
    b.mat = kron(pinv, frame.super_p.transpose()) *
            beta_swap(static_cast<std::size_t>(b.d)) *
            kron(basis.super_u, basis.super_u.conjugate());
  }
  return b;
}

cplx beta_entry(const BetaOp &b, std::size_t gamma, std::size_t delta,
                std::size_t mu, std::size_t nu) {
  const auto n = b.frame.ops.size();
  if (gamma >= n || delta >= n || mu >= n || nu >= n)
    throw std::invalid_argument("beta_entry: index out of range");
  CVec rg = vec(b.frame.duals[gamma]);
  CVec pd = vec(b.frame.ops[delta]);
  return rg.adjoint() *
         kron(b.basis.ops[mu], b.basis.ops[nu].conjugate()) * pd;
}

CMat beta_apply(const BetaOp &b, const CMat &chi) {
  CMat rotated = b.basis.super_u * chi * b.basis.super_u.adjoint();
  return b.frame.super_p.partialPivLu().solve(reshuffle(rotated) *
                                              b.frame.super_p);
}

CMat solve_chi(const CMat &lambda_m, const BetaOp &b) {
  const Eigen::Index n = b.d * b.d;
  if (lambda_m.rows() != n || lambda_m.cols() != n)
    throw std::invalid_argument("solve_chi: lambda dimension mismatch");
  CMat mid = b.frame.super_p * lambda_m *
             b.frame.super_p.partialPivLu().solve(CMat::Identity(n, n));
  return b.basis.super_u.adjoint() * reshuffle(mid) * b.basis.super_u;
}

CMat solve_chi_linear(const CMat &lambda_m, const BetaOp &b) {
  if (!b.materialized())
    throw std::invalid_argument("solve_chi_linear: beta not materialized");
  Eigen::FullPivLU<CMat> lu(b.mat);
  if (!lu.isInvertible())
    throw FrameError("solve_chi_linear: beta is singular");
  return unvec2(lu.solve(vec2(lambda_m)));
}

ProductFrame product_frame(const Povm &prep, const Povm &meas,
                           double cond_limit) {
  if (prep.d != meas.d)
    throw std::invalid_argument("product_frame: dimension mismatch");
  OperatorFrame fprep = prep.as_frame(cond_limit);
  OperatorFrame fmeas = meas.as_frame(cond_limit);
  const std::size_t n = fprep.ops.size();
  ProductFrame pf;
  pf.d = prep.d;
  pf.elements.reserve(n * n);
  pf.duals.reserve(n * n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      pf.elements.push_back(
          kron(fmeas.ops[mu], fprep.ops[nu].conjugate()));
      pf.duals.push_back(
          kron(fmeas.duals[mu], fprep.duals[nu].conjugate()));
    }
  return pf;
}

DataMatrix omega_exact(const KrausSet &k, const Povm &prep, const Povm &meas) {
  if (prep.d != k.d || meas.d != k.d)
    throw std::invalid_argument("omega_exact: dimension mismatch");
  const auto n = static_cast<Eigen::Index>(prep.elements.size());
  DataMatrix w;
  w.d = k.d;
  w.omega = RMat(n, n);
  for (Eigen::Index nu = 0; nu < n; ++nu) {
    CMat out = sqpt::apply(k, prep.elements[nu]);
    for (Eigen::Index mu = 0; mu < n; ++mu) {
      const cplx val = (meas.elements[mu].adjoint() * out).trace();
      if (std::abs(val.imag()) > 1e-9)
        throw NumericError("omega_exact: non-real data coefficient");
      w.omega(mu, nu) = val.real();
    }
  }
  return w;
}

CMat reconstruct_lambda_c(const DataMatrix &w, const OperatorFrame &prep,
                          const OperatorFrame &meas) {
  const Eigen::Index n = w.d * w.d;
  if (w.omega.rows() != n || prep.d != w.d || meas.d != w.d)
    throw std::invalid_argument("reconstruct_lambda_c: dimension mismatch");
  CMat lam = CMat::Zero(n, n);
  for (Eigen::Index mu = 0; mu < n; ++mu) {
    CVec rbar = vec(meas.duals[mu]);
    for (Eigen::Index nu = 0; nu < n; ++nu)
      lam += w.omega(mu, nu) * rbar * vec(prep.duals[nu]).adjoint();
  }
  return lam;
}

CMat reconstruct_chi_c(const DataMatrix &w, const OperatorFrame &prep,
                       const OperatorFrame &meas) {
  const Eigen::Index n = w.d * w.d;
  if (w.omega.rows() != n || prep.d != w.d || meas.d != w.d)
    throw std::invalid_argument("reconstruct_chi_c: dimension mismatch");
  CMat chi = CMat::Zero(n, n);
  for (Eigen::Index mu = 0; mu < n; ++mu)
    for (Eigen::Index nu = 0; nu < n; ++nu)
      chi += w.omega(mu, nu) *
             kron(meas.duals[mu], prep.duals[nu].conjugate());
  return chi;
}

CMat reconstruct_chi_sic(const DataMatrix &w, const SicPovm &s, bool unital,
                         double consistency_tol) {
  const int d = s.d;
  const Eigen::Index n = d * d;
  if (w.d != d || w.omega.rows() != n)
    throw std::invalid_argument("reconstruct_chi_sic: dimension mismatch");

  std::vector<CMat> proj;
  for (const auto &v : s.vectors) proj.push_back(v * v.adjoint());
  const CMat id = CMat::Identity(d, d);
  const double dp1 = d + 1.0;

  CMat general = -CMat::Identity(n, n);
  CMat quad = CMat::Zero(n, n);
  for (Eigen::Index mu = 0; mu < n; ++mu)
    for (Eigen::Index nu = 0; nu < n; ++nu) {
      const double om = w.omega(mu, nu);
      quad += om * kron(proj[mu], proj[nu].conjugate());
      general -= om * dp1 * kron(proj[mu], id);
    }
  general += dp1 * dp1 * quad;
  if (!unital) return general;

  CMat simplified = -(d + 2.0) * CMat::Identity(n, n) + dp1 * dp1 * quad;
  const double dev = (simplified - general).cwiseAbs().maxCoeff();
  if (dev > consistency_tol) {
    std::ostringstream msg;
    msg << "reconstruct_chi_sic: unital formula deviates from general one by "
        << dev << "; channel is not unital";
    throw ConsistencyError(msg.str());
  }
  return simplified;
}

double delta_p(const ProductFrame &pf, const CMat &rho) {
  const Eigen::Index dim = pf.d * pf.d;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("delta_p: rho dimension mismatch");
  double total = 0.0;
  for (std::size_t x = 0; x < pf.elements.size(); ++x) {
    const double px = (pf.elements[x].adjoint() * rho).trace().real();
    const double qq = (pf.duals[x].adjoint() * pf.duals[x]).trace().real();
    total += px * qq;
  }
  return total;
}

double delta_p_avg(const ProductFrame &pf) {
  const double dim = double(pf.d) * pf.d;
  double total = 0.0;
  for (std::size_t x = 0; x < pf.elements.size(); ++x)
    total += pf.elements[x].trace().real() *
             (pf.duals[x].adjoint() * pf.duals[x]).trace().real();
  return total / dim;
}

DeltaConstants delta_constants(int d) {
  if (d < 2) throw std::invalid_argument("delta_constants: d >= 2 required");
  DeltaConstants c;
  const double dd = d;
  c.avg_opt = std::pow(dd * (dd + 1.0) - 1.0, 2);
  c.joint_opt = std::pow(dd, 4) - dd * dd + 1.0 / (dd * dd);
  c.ratio_bound = (dd - 1.0) / (dd + 1.0);
  if (!(c.joint_opt / c.avg_opt > c.ratio_bound))
    throw NumericError("delta_constants: ratio bound violated");
  return c;
}

}  // namespace sqpt
