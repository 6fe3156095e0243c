// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include "sqpt/frames.hpp"

#include <cmath>
#include <sstream>

#include "sqpt/vecrep.hpp"

namespace sqpt {

OperatorFrame build_frame(const std::vector<CMat> &ops, double cond_limit) {
  if (ops.empty()) throw std::invalid_argument("build_frame: empty set");
  const auto d = static_cast<int>(ops[0].rows());
  const auto n = static_cast<std::size_t>(d) * d;
  if (ops.size() != n)
    throw std::invalid_argument("build_frame: need exactly d^2 operators");

  OperatorFrame f;
  f.d = d;
  f.ops = ops;
  f.super_p = CMat(n, n);
  f.weights = CVec(n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    if (ops[mu].rows() != d || ops[mu].cols() != d)
      throw std::invalid_argument("build_frame: operator dimension mismatch");
    f.super_p.col(static_cast<Eigen::Index>(mu)) = vec(ops[mu]);
    f.weights(static_cast<Eigen::Index>(mu)) = ops[mu].trace();
  }

  Eigen::JacobiSVD<CMat> svd(f.super_p);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  const double cond = smin > 0.0 ? smax / smin
                                 : std::numeric_limits<double>::infinity();
  if (!(cond < cond_limit)) {
    std::ostringstream msg;
    msg << "build_frame: operators not linearly independent "
        << "(condition number " << cond << " exceeds " << cond_limit << ")";
    throw FrameError(msg.str());
  }

  // |R_mu>> = (P^-1)^dag |mu>>: the columns of P^-dag, obtained by a linear
  // solve against identity columns rather than an explicit inverse.
  CMat r = f.super_p.adjoint().partialPivLu().solve(
      CMat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  for (std::size_t mu = 0; mu < n; ++mu)
    f.duals.push_back(unvec(r.col(static_cast<Eigen::Index>(mu))));
  return f;
}

std::vector<CMat> duals_via_frame_op(const std::vector<CMat> &ops) {
  if (ops.empty()) throw std::invalid_argument("duals_via_frame_op: empty set");
  const auto n = static_cast<Eigen::Index>(ops.size());
  CMat frame_op = CMat::Zero(n, n);
  for (const auto &p : ops) {
    CVec v = vec(p);
    frame_op += v * v.adjoint();
  }
  Eigen::FullPivLU<CMat> lu(frame_op);
  if (!lu.isInvertible())
    throw FrameError("duals_via_frame_op: singular frame operator");
  std::vector<CMat> duals;
  for (const auto &p : ops) duals.push_back(unvec(lu.solve(vec(p))));
  return duals;
}

OrthoBasis standard_basis(int d, BasisKind kind) {
  if (d < 2) throw std::invalid_argument("standard_basis: d >= 2 required");
  OrthoBasis b;
  b.d = d;
  switch (kind) {
    case BasisKind::MatrixUnits: {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          CMat c = CMat::Zero(d, d);
          c(i, j) = 1.0;
          b.ops.push_back(c);
        }
      break;
    }
    case BasisKind::NormalizedPauli: {
      // Generalized Gell-Mann construction; for d=2 this is {I, x, y, z}/sqrt2.
      const double s = 1.0 / std::sqrt(double(d));
      b.ops.push_back(s * CMat::Identity(d, d));
      for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
          CMat sym = CMat::Zero(d, d), asym = CMat::Zero(d, d);
          sym(j, k) = sym(k, j) = 1.0 / std::sqrt(2.0);
          asym(j, k) = cplx(0.0, -1.0 / std::sqrt(2.0));
          asym(k, j) = cplx(0.0, 1.0 / std::sqrt(2.0));
          b.ops.push_back(sym);
          b.ops.push_back(asym);
        }
      for (int l = 1; l < d; ++l) {
        CMat diag = CMat::Zero(d, d);
        const double norm = 1.0 / std::sqrt(double(l) * (l + 1));
        for (int j = 0; j < l; ++j) diag(j, j) = norm;
        diag(l, l) = -double(l) * norm;
        b.ops.push_back(diag);
      }
      break;
    }
  }
  const auto n = static_cast<Eigen::Index>(b.ops.size());
  b.super_u = CMat(n, n);
  for (Eigen::Index mu = 0; mu < n; ++mu) b.super_u.col(mu) = vec(b.ops[mu]);
  return b;
}

Povm build_povm(const std::vector<CVec> &vectors,
                const std::vector<double> &weights, double completeness_tol) {
  if (vectors.empty() || vectors.size() != weights.size())
    throw std::invalid_argument("build_povm: vectors/weights size mismatch");
  const auto d = static_cast<int>(vectors[0].size());
  if (vectors.size() != static_cast<std::size_t>(d) * d)
    throw std::invalid_argument("build_povm: need exactly d^2 elements");

  Povm p;
  p.d = d;
  p.vectors = vectors;
  p.weights = weights;
  CMat sum = CMat::Zero(d, d);
  for (std::size_t mu = 0; mu < vectors.size(); ++mu) {
    if (weights[mu] <= 0.0)
      throw std::invalid_argument("build_povm: weights must be positive");
    if (std::abs(vectors[mu].norm() - 1.0) > 1e-8)
      throw std::invalid_argument("build_povm: vectors must be unit norm");
    CMat el = weights[mu] * (vectors[mu] * vectors[mu].adjoint());
    p.elements.push_back(el);
    sum += el;
  }
  const double dev = (sum - CMat::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > completeness_tol) {
    std::ostringstream msg;
    msg << "build_povm: completeness sum deviates from I by " << dev;
    throw PovmError(msg.str());
  }
  return p;
}

OperatorFrame Povm::as_frame(double cond_limit) const {
  return build_frame(elements, cond_limit);
}

}  // namespace sqpt
