// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include "sqpt/verify.hpp"

#include <cmath>

#include "sqpt/channels.hpp"
#include "sqpt/experiment.hpp"
#include "sqpt/rng.hpp"
#include "sqpt/sic.hpp"
#include "sqpt/tomography.hpp"
#include "sqpt/vecrep.hpp"

namespace sqpt {

namespace {

CMat random_density(Rng &rng, int d) {
  CMat g = rng.gaussian_cmat(d, d);
  CMat rho = g * g.adjoint();
  return rho / rho.trace();
}

KrausSet random_channel(Rng &rng, int d, int rank) {
  ChannelSpec spec;
  spec.kind = ChannelSpec::Kind::Random;
  spec.d = d;
  spec.rank = rank;
  spec.seed = rng.bits();
  return make_channel(spec);
}

std::vector<CMat> random_hermitian_frame(Rng &rng, int d) {
  std::vector<CMat> ops;
  for (int mu = 0; mu < d * d; ++mu) {
    CMat g = rng.gaussian_cmat(d, d);
    ops.push_back(0.5 * (g + g.adjoint()));
  }
  return ops;
}

}  // namespace

std::vector<CheckResult> run_verification(int d, std::uint64_t seed,
                                          bool break_frame) {
  std::vector<CheckResult> out;
  auto check = [&](const std::string &name, double residual, double tol) {
    out.push_back({name, residual, tol, residual < tol});
  };
  Rng rng(seed);
  const int n = d * d;

  if (break_frame) {
    auto ops = random_hermitian_frame(rng, d);
    ops.back() = ops.front();  // duplicated element, must throw
    build_frame(ops);
  }

  // Index bijection, exhaustive.
  {
    std::vector<bool> hit(n, false);
    bool ok = true;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        auto mu = index_mu(i, j, d);
        if (hit[mu]) ok = false;
        hit[mu] = true;
        auto [ri, rj] = index_ij(mu, d);
        if (int(ri) != i || int(rj) != j) ok = false;
      }
    check("index-map bijection", ok ? 0.0 : 1.0, 0.5);
  }

  // <<A|B>> = Tr[A^dag B] and the sandwich identity.
  {
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      CMat a = rng.gaussian_cmat(d, d), b = rng.gaussian_cmat(d, d);
      CMat rho = rng.gaussian_cmat(d, d);
      worst = std::max(worst, std::abs(hs_inner(a, b) -
                                       cplx(vec(a).dot(vec(b)))));
      CVec lhs = apply_sandwich(a, b, rho);
      worst = std::max(worst, (lhs - vec(a * rho * b)).cwiseAbs().maxCoeff());
    }
    check("vectorization isometry + sandwich", worst, 1e-10);
  }

  // Reshuffle permutation: symmetric, self-inverse, and the outer-product
  // to Kronecker identity.
  {
    CMat b = beta_swap(d);
    double worst = (b - b.transpose()).cwiseAbs().maxCoeff();
    worst = std::max(worst, (b * b - CMat::Identity(b.rows(), b.cols()))
                                .cwiseAbs()
                                .maxCoeff());
    for (int t = 0; t < 10; ++t) {
      CMat a = rng.gaussian_cmat(d, d), c = rng.gaussian_cmat(d, d);
      CVec lhs = b * vec2(vec(a) * vec(c).adjoint());
      CVec rhs = vec2(kron(a, c.conjugate()));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    check("reshuffle permutation identities", worst, 1e-10);
  }

  // Channel representations across the zoo and random channels.
  {
    std::vector<KrausSet> channels;
    ChannelSpec dep;
    dep.kind = ChannelSpec::Kind::Depolarizing;
    dep.d = d;
    dep.q = 0.3;
    channels.push_back(make_channel(dep));
    for (int t = 0; t < 20; ++t)
      channels.push_back(random_channel(rng, d, 1 + int(rng.bits() % 4)));

    double worst = 0.0;
    for (const auto &k : channels) {
      CMat lam = lambda_c(k), chi = chi_c(k);
      CMat rho = random_density(rng, d);
      worst = std::max(
          worst, (lam * vec(rho) - vec(sqpt::apply(k, rho))).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(chi.trace().real() - d));
      worst = std::max(worst, std::max(0.0, -min_eigenvalue(chi)));
      worst = std::max(worst,
                       (chi_from_lambda(lam) - chi).cwiseAbs().maxCoeff());
      KrausSet back = kraus_from_chi(chi);
      worst = std::max(
          worst, (sqpt::apply(back, rho) - sqpt::apply(k, rho)).cwiseAbs().maxCoeff());
    }
    check("channel representation round trips", worst, 1e-9);
  }

  // Frame duality for a generic random frame.
  {
    auto ops = random_hermitian_frame(rng, d);
    OperatorFrame f = build_frame(ops);
    double worst = 0.0;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        const cplx got = hs_inner(f.duals[mu], f.ops[nu]);
        worst = std::max(worst, std::abs(got - (mu == nu ? 1.0 : 0.0)));
      }
    CMat resolution = CMat::Zero(n, n);
    for (int mu = 0; mu < n; ++mu)
      resolution += vec(f.duals[mu]) * vec(f.ops[mu]).adjoint();
    worst = std::max(
        worst, (resolution - CMat::Identity(n, n)).cwiseAbs().maxCoeff());
    auto duals2 = duals_via_frame_op(ops);
    for (int mu = 0; mu < n; ++mu)
      worst = std::max(worst,
                       (duals2[mu] - f.duals[mu]).cwiseAbs().maxCoeff());
    check("frame duality + resolution", worst, 1e-9);
  }

  // SIC constants.
  {
    SicPovm s = d == 2 ? sic_d2() : sic_search(d, seed).first;
    const double tol = d == 2 ? 1e-10 : 1e-5;
    double worst = s.overlap_residual();
    Povm povm = s.povm();
    OperatorFrame f = povm.as_frame();
    CMat frame_op = f.super_p * f.super_p.adjoint();
    auto [closed, closed_inv] = frame_op_closed_form(d);
    worst = std::max(worst, (frame_op - closed).cwiseAbs().maxCoeff());
    auto duals = sic_duals(s);
    for (int mu = 0; mu < n; ++mu)
      worst = std::max(worst,
                       (duals[mu] - f.duals[mu]).cwiseAbs().maxCoeff());
    worst = std::max(
        worst, std::abs(k_inverse_trace(povm) - d * (d * (d + 1.0) - 1.0)));
    check("SIC frame constants", worst, tol);
  }

  // Full pipeline: chi from the factored solve equals the direct chi.
  {
    OrthoBasis basis = standard_basis(d, BasisKind::NormalizedPauli);
    OperatorFrame frame = build_frame(random_hermitian_frame(rng, d));
    BetaOp beta = beta_op(basis, frame);
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      KrausSet k = random_channel(rng, d, 2);
      CMat chi_direct = chi_matrix(k, basis);
      CMat chi_solved = solve_chi(lambda_matrix(k, frame), beta);
      worst =
          std::max(worst, (chi_direct - chi_solved).cwiseAbs().maxCoeff());
    }
    check("chi-solve pipeline", worst, 1e-8);
  }

  return out;
}

}  // namespace sqpt
