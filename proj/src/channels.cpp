// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include "sqpt/channels.hpp"

#include <algorithm>
#include <cmath>

#include "sqpt/json_io.hpp"
#include "sqpt/rng.hpp"
#include "sqpt/sic.hpp"
#include "sqpt/vecrep.hpp"

namespace sqpt {

void KrausSet::validate(double tol) const {
  if (d < 1 || ops.empty())
    throw RepresentationError("KrausSet: empty operator list");
  CMat sum = CMat::Zero(d, d);
  for (const auto &e : ops) {
    if (e.rows() != d || e.cols() != d)
      throw RepresentationError("KrausSet: operator dimension mismatch");
    sum += e.adjoint() * e;
  }
  if ((sum - CMat::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
    throw RepresentationError("KrausSet: completeness sum deviates from I");
}

CMat apply(const KrausSet &k, const CMat &rho) {
  if (rho.rows() != k.d || rho.cols() != k.d)
    throw std::invalid_argument("apply: rho dimension mismatch");
  CMat out = CMat::Zero(k.d, k.d);
  for (const auto &e : k.ops) out += e * rho * e.adjoint();
  return out;
}

CMat chi_c(const KrausSet &k) {
  const Eigen::Index n = k.d * k.d;
  CMat chi = CMat::Zero(n, n);
  for (const auto &e : k.ops) {
    CVec v = vec(e);
    chi += v * v.adjoint();
  }
  return chi;
}

CMat lambda_c(const KrausSet &k) {
  const Eigen::Index n = k.d * k.d;
  CMat lam = CMat::Zero(n, n);
  for (const auto &e : k.ops) lam += kron(e, e.conjugate());
  return lam;
}

CMat choi(const KrausSet &k) { return chi_c(k) / double(k.d); }

CMat chi_from_lambda(const CMat &lambda) { return reshuffle(lambda); }
CMat lambda_from_chi(const CMat &chi) { return reshuffle(chi); }

KrausSet kraus_from_chi(const CMat &chi, double psd_tol, double drop_tol) {
  const auto n = chi.rows();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(n))));
  if (chi.cols() != n || d * d != n)
    throw std::invalid_argument("kraus_from_chi: side must be a perfect square");
  if (!is_hermitian(chi, 1e-8))
    throw RepresentationError("kraus_from_chi: chi not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> es(chi);
  if (es.eigenvalues().minCoeff() < -psd_tol)
    throw RepresentationError("kraus_from_chi: chi not positive semidefinite");

  // Eigen returns eigenvalues ascending; emit Kraus terms descending with a
  // fixed phase so the factorization is deterministic.
  KrausSet k;
  k.d = static_cast<int>(d);
  for (Eigen::Index m = n - 1; m >= 0; --m) {
    const double s = es.eigenvalues()(m);
    if (s < drop_tol) continue;
    CVec v = es.eigenvectors().col(m);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > 1e-12) {
        v *= std::conj(v(i)) / std::abs(v(i));
        break;
      }
    }
    k.ops.push_back(std::sqrt(s) * unvec(v));
  }
  return k;
}

namespace {

const char *kind_name(ChannelSpec::Kind k) {
  switch (k) {
    case ChannelSpec::Kind::KrausList: return "kraus-list";
    case ChannelSpec::Kind::Depolarizing: return "depolarizing";
    case ChannelSpec::Kind::Unitary: return "unitary";
    case ChannelSpec::Kind::AmplitudeDamping: return "amplitude-damping";
    case ChannelSpec::Kind::Random: return "random";
  }
  return "?";
}

}  // namespace

std::string ChannelSpec::to_json() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind);
  j["d"] = d;
  switch (kind) {
    case Kind::Depolarizing: j["q"] = q; break;
    case Kind::AmplitudeDamping: j["gamma"] = gamma; break;
    case Kind::Unitary: j["matrix"] = cmat_to_json(unitary); break;
    case Kind::Random:
      j["rank"] = rank;
      j["seed"] = seed;
      break;
    case Kind::KrausList: {
      nlohmann::json ops = nlohmann::json::array();
      for (const auto &e : kraus_ops) ops.push_back(cmat_to_json(e));
      j["ops"] = ops;
      break;
    }
  }
  return j.dump();
}

ChannelSpec ChannelSpec::from_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("channel spec: ") + e.what());
  }
  ChannelSpec s;
  const std::string kind = j.value("kind", "");
  s.d = j.value("d", 2);
  if (kind == "depolarizing") {
    s.kind = Kind::Depolarizing;
    s.q = j.value("q", 0.0);
  } else if (kind == "amplitude-damping") {
    s.kind = Kind::AmplitudeDamping;
    s.gamma = j.value("gamma", 0.0);
  } else if (kind == "unitary") {
    s.kind = Kind::Unitary;
    if (!j.contains("matrix")) throw ParseError("channel spec: missing matrix");
    s.unitary = cmat_from_json(j.at("matrix"));
    s.d = static_cast<int>(s.unitary.rows());
  } else if (kind == "random") {
    s.kind = Kind::Random;
    s.rank = j.value("rank", 1);
    s.seed = j.value("seed", std::uint64_t{0});
  } else if (kind == "kraus-list") {
    s.kind = Kind::KrausList;
    if (!j.contains("ops")) throw ParseError("channel spec: missing ops");
    for (const auto &op : j.at("ops")) s.kraus_ops.push_back(cmat_from_json(op));
    if (!s.kraus_ops.empty()) s.d = static_cast<int>(s.kraus_ops[0].rows());
  } else {
    throw ParseError("channel spec: unknown kind '" + kind + "'");
  }
  return s;
}

KrausSet make_channel(const ChannelSpec &spec) {
  if (spec.d < 2) throw std::invalid_argument("make_channel: d >= 2 required");
  KrausSet k;
  k.d = spec.d;
  switch (spec.kind) {
    case ChannelSpec::Kind::Depolarizing: {
      if (spec.q < 0.0 || spec.q > 1.0)
        throw std::invalid_argument("make_channel: q must lie in [0, 1]");
      const int d = spec.d;
      // (1-q) identity plus the uniform Weyl twirl, which sends rho to
      // Tr[rho] I / d.
      auto disp = wh_displacements(d);
      k.ops.push_back(std::sqrt(1.0 - spec.q + spec.q / (d * d)) *
                      CMat::Identity(d, d));
      for (std::size_t m = 1; m < disp.size(); ++m)
        k.ops.push_back(std::sqrt(spec.q) / double(d) * disp[m]);
      break;
    }
    case ChannelSpec::Kind::Unitary: {
      if (!is_unitary(spec.unitary, 1e-8))
        throw std::invalid_argument("make_channel: matrix is not unitary");
      k.d = static_cast<int>(spec.unitary.rows());
      k.ops.push_back(spec.unitary);
      break;
    }
    case ChannelSpec::Kind::AmplitudeDamping: {
      if (spec.d != 2)
        throw std::invalid_argument("make_channel: amplitude damping needs d=2");
      if (spec.gamma < 0.0 || spec.gamma > 1.0)
        throw std::invalid_argument("make_channel: gamma must lie in [0, 1]");
      CMat e0 = CMat::Zero(2, 2), e1 = CMat::Zero(2, 2);
      e0(0, 0) = 1.0;
      e0(1, 1) = std::sqrt(1.0 - spec.gamma);
      e1(0, 1) = std::sqrt(spec.gamma);
      k.ops = {e0, e1};
      break;
    }
    case ChannelSpec::Kind::Random: {
      if (spec.rank < 1)
        throw std::invalid_argument("make_channel: rank >= 1 required");
      // Kraus blocks of a Haar-random isometry from H to H (x) C^rank.
      Rng rng(spec.seed);
      const int d = spec.d, r = spec.rank;
      CMat g = rng.gaussian_cmat(r * d, d);
      Eigen::HouseholderQR<CMat> qr(g);
      CMat q = CMat(qr.householderQ()).leftCols(d);
      for (int m = 0; m < r; ++m) k.ops.push_back(q.middleRows(m * d, d));
      break;
    }
    case ChannelSpec::Kind::KrausList: {
      k.ops = spec.kraus_ops;
      break;
    }
  }
  k.validate();
  return k;
}

}  // namespace sqpt
