// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include "sqpt/sic.hpp"

#include <cmath>
#include <sstream>

#include "sqpt/rng.hpp"
#include "sqpt/vecrep.hpp"

namespace sqpt {

Povm SicPovm::povm(double completeness_tol) const {
  std::vector<double> w(vectors.size(), 1.0 / d);
  return build_povm(vectors, w, completeness_tol);
}

double SicPovm::overlap_residual() const {
  const double target = 1.0 / (1.0 + d);
  double worst = 0.0;
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    for (std::size_t b = 0; b < vectors.size(); ++b) {
      const double ov = std::norm(vectors[a].dot(vectors[b]));
      const double want = a == b ? 1.0 : target;
      worst = std::max(worst, std::abs(ov - want));
    }
  }
  return worst;
}

SicPovm sic_d2() {
  SicPovm s;
  s.d = 2;
  CVec f(2);
  f << 1.0, 0.0;
  s.fiducial = f;
  s.vectors.push_back(f);
  for (int k = 0; k < 3; ++k) {
    CVec v(2);
    v(0) = 1.0 / std::sqrt(3.0);
    v(1) = std::sqrt(2.0 / 3.0) *
           std::exp(cplx(0.0, 2.0 * M_PI * k / 3.0));
    s.vectors.push_back(v);
  }
  return s;
}

std::vector<CMat> wh_displacements(int d) {
  if (d < 2) throw std::invalid_argument("wh_displacements: d >= 2 required");
  CMat shift = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i) shift((i + 1) % d, i) = 1.0;
  CMat clock = CMat::Zero(d, d);
  for (int k = 0; k < d; ++k)
    clock(k, k) = std::exp(cplx(0.0, 2.0 * M_PI * k / d));
  std::vector<CMat> out;
  CMat xa = CMat::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    CMat cur = xa;
    for (int b = 0; b < d; ++b) {
      out.push_back(cur);
      cur = cur * clock;
    }
    xa = shift * xa;
  }
  return out;
}

double frame_potential(const std::vector<CVec> &vectors) {
  for (const auto &v : vectors)
    if (std::abs(v.norm() - 1.0) > 1e-8)
      throw std::invalid_argument("frame_potential: vectors must be unit norm");
  double total = 0.0;
  for (const auto &a : vectors)
    for (const auto &b : vectors) {
      const double ov = std::norm(a.dot(b));
      total += ov * ov;
    }
  return total;
}

namespace {

// For a WH orbit the potential collapses to d^2 sum_g |<f|D_g f>|^4; the
// group structure cancels the displacement phases inside |.|^4.
double orbit_potential(const std::vector<CMat> &disp, const CVec &f) {
  double total = 0.0;
  for (const auto &dg : disp) {
    const double ov = std::norm(f.dot(dg * f));
    total += ov * ov;
  }
  return double(f.size()) * double(f.size()) * total;
}

CVec orbit_potential_grad(const std::vector<CMat> &disp, const CVec &f) {
  const double scale = double(f.size()) * double(f.size());
  CVec grad = CVec::Zero(f.size());
  for (const auto &dg : disp) {
    const CVec df = dg * f;
    const cplx t = f.dot(df);
    grad += 2.0 * std::norm(t) * (std::conj(t) * df + t * (dg.adjoint() * f));
  }
  return scale * grad;
}

// Squared deviation of the orbit overlaps from the equiangular value. Unlike
// the raw potential this vanishes at a SIC, so it can be driven far below the
// rounding floor of the ~2d^3/(d+1) potential and yields fiducials whose
// overlaps are accurate, not just whose potential is.
double overlap_misfit(const std::vector<CMat> &disp, const CVec &f) {
  const double a = 1.0 / (double(f.size()) + 1.0);
  double total = 0.0;
  for (std::size_t g = 1; g < disp.size(); ++g) {
    const double dev = std::norm(f.dot(disp[g] * f)) - a;
    total += dev * dev;
  }
  return total;
}

CVec overlap_misfit_grad(const std::vector<CMat> &disp, const CVec &f) {
  const double a = 1.0 / (double(f.size()) + 1.0);
  CVec grad = CVec::Zero(f.size());
  for (std::size_t g = 1; g < disp.size(); ++g) {
    const CVec df = disp[g] * f;
    const cplx t = f.dot(df);
    grad += 2.0 * (std::norm(t) - a) *
            (std::conj(t) * df + t * (disp[g].adjoint() * f));
  }
  return grad;
}

std::vector<CVec> wh_orbit(const std::vector<CMat> &disp, const CVec &f) {
  std::vector<CVec> out;
  out.reserve(disp.size());
  for (const auto &dg : disp) out.push_back(dg * f);
  return out;
}

}  // namespace

std::pair<SicPovm, SearchReport> sic_search(int d, std::uint64_t seed,
                                            int max_iters, int restarts,
                                            double tol) {
  if (d < 2 || d > 8)
    throw std::invalid_argument("sic_search: supported dimensions are 2..8");
  const auto disp = wh_displacements(d);
  const double target = sic_potential_minimum(d);
  // Refine far below the acceptance tolerance: the overlap deviations scale
  // like the square root of the potential excess.
  const double refine_tol = std::min(tol * 1e-8, 1e-13);

  double best_pot = std::numeric_limits<double>::infinity();
  CVec best_f;
  int total_iters = 0;
  bool found = false;

  for (int r = 0; r < restarts && !found; ++r) {
    Rng rng(seed, static_cast<std::uint64_t>(r));
    CVec f = rng.random_pure_state(d);
    double pot = orbit_potential(disp, f);
    double step = 0.05;
    for (int it = 0; it < max_iters; ++it) {
      ++total_iters;
      CVec g = orbit_potential_grad(disp, f);
      g -= f * f.dot(g);  // tangent projection on the unit sphere
      CVec cand = f - step * g;
      cand /= cand.norm();
      const double cand_pot = orbit_potential(disp, cand);
      if (cand_pot < pot) {
        f = cand;
        pot = cand_pot;
        step *= 1.2;
      } else {
        step *= 0.5;
        if (step < 1e-16) break;
      }
      if (pot - target < refine_tol) break;
    }
    // Polish inside the basin on the zero-minimum misfit objective.
    if (pot - target < 1e-3) {
      double mis = overlap_misfit(disp, f);
      step = 0.05;
      for (int it = 0; it < max_iters && mis > 1e-26; ++it) {
        ++total_iters;
        CVec g = overlap_misfit_grad(disp, f);
        g -= f * f.dot(g);
        CVec cand = f - step * g;
        cand /= cand.norm();
        const double cand_mis = overlap_misfit(disp, cand);
        if (cand_mis < mis) {
          f = cand;
          mis = cand_mis;
          step *= 1.2;
        } else {
          step *= 0.5;
          if (step < 1e-18) break;
        }
      }
      pot = orbit_potential(disp, f);
    }
    if (pot < best_pot) {
      best_pot = pot;
      best_f = f;
    }
    if (best_pot - target < tol) found = true;
  }

  if (!found) {
    std::ostringstream msg;
    msg << "sic_search: no SIC found for d=" << d << " (best potential "
        << best_pot << ", target " << target << ")";
    throw SearchError(msg.str(), best_pot);
  }

  SicPovm s;
  s.d = d;
  s.fiducial = best_f;
  s.vectors = wh_orbit(disp, best_f);

  SearchReport rep;
  rep.d = d;
  rep.iterations = total_iters;
  rep.potential = frame_potential(s.vectors);
  rep.achieved_min = rep.potential - target < tol;
  rep.seed = seed;
  return {s, rep};
}

std::vector<CMat> sic_duals(const SicPovm &s) {
  std::vector<CMat> out;
  const CMat id = CMat::Identity(s.d, s.d);
  for (const auto &v : s.vectors)
    out.push_back(double(s.d + 1) * (v * v.adjoint()) - id);
  return out;
}

std::pair<CMat, CMat> frame_op_closed_form(int d) {
  if (d < 2)
    throw std::invalid_argument("frame_op_closed_form: d >= 2 required");
  const Eigen::Index n = d * d;
  CVec vid = vec(CMat::Identity(d, d));
  CMat proj = vid * vid.adjoint();
  CMat f = (CMat::Identity(n, n) + proj) / (double(d) * (d + 1));
  CMat finv = double(d) * (d + 1) * CMat::Identity(n, n) - double(d) * proj;
  return {f, finv};
}

double k_inverse_trace(const Povm &p) {
  const Eigen::Index n = p.d * p.d;
  CMat k = CMat::Zero(n, n);
  for (const auto &el : p.elements) {
    CVec v = vec(el);
    k += v * v.adjoint() / el.trace().real();
  }
  Eigen::FullPivLU<CMat> lu(k);
  if (!lu.isInvertible()) throw FrameError("k_inverse_trace: singular K");
  return lu.inverse().trace().real();
}

}  // namespace sqpt
