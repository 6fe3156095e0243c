// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include "sqpt/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "sqpt/json_io.hpp"
#include "sqpt/rng.hpp"
#include "sqpt/vecrep.hpp"

namespace sqpt {

namespace {

std::vector<double> cumulative(const std::vector<double> &p) {
  std::vector<double> cdf(p.size());
  double run = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < -1e-12)
      throw NumericError("simulate: negative outcome probability");
    run += std::max(p[i], 0.0);
    cdf[i] = run;
  }
  return cdf;
}

std::size_t draw(const std::vector<double> &cdf, Rng &rng) {
  const double u = rng.uniform() * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
}

Povm sic_povm_for(int d, std::uint64_t seed) {
  if (d == 2) return sic_d2().povm();
  return sic_search(d, seed).first.povm();
}

}  // namespace

DataMatrix simulate(const KrausSet &k, const Povm &prep, const Povm &meas,
                    SampleMode mode, long shots, std::uint64_t seed) {
  if (shots <= 0) throw std::invalid_argument("simulate: shots must be > 0");
  const Eigen::Index n = k.d * k.d;
  DataMatrix w;
  w.d = k.d;
  w.provenance = DataMatrix::Provenance::Sampled;
  w.shots = shots;
  w.seed = seed;
  w.omega = RMat::Zero(n, n);

  Rng rng(seed);
  if (mode == SampleMode::PerInput) {
    for (Eigen::Index nu = 0; nu < n; ++nu) {
      CMat state = prep.vectors[nu] * prep.vectors[nu].adjoint();
      CMat out = sqpt::apply(k, state);
      std::vector<double> q(n);
      for (Eigen::Index mu = 0; mu < n; ++mu)
        q[mu] = (meas.elements[mu] * out).trace().real();
      auto cdf = cumulative(q);
      std::vector<long> counts(n, 0);
      for (long s = 0; s < shots; ++s) ++counts[draw(cdf, rng)];
      for (Eigen::Index mu = 0; mu < n; ++mu)
        w.omega(mu, nu) = prep.weights[nu] * double(counts[mu]) / shots;
    }
  } else {
    DataMatrix exact = omega_exact(k, prep, meas);
    std::vector<double> p(n * n);
    for (Eigen::Index mu = 0; mu < n; ++mu)
      for (Eigen::Index nu = 0; nu < n; ++nu)
        p[mu * n + nu] = exact.omega(mu, nu) / k.d;
    auto cdf = cumulative(p);
    std::vector<long> counts(n * n, 0);
    for (long s = 0; s < shots; ++s) ++counts[draw(cdf, rng)];
    for (Eigen::Index mu = 0; mu < n; ++mu)
      for (Eigen::Index nu = 0; nu < n; ++nu)
        w.omega(mu, nu) = double(k.d) * counts[mu * n + nu] / shots;
  }
  return w;
}

DataMatrix simulate(const ShotPlan &plan) {
  KrausSet k = make_channel(plan.channel);
  Povm sic = sic_povm_for(k.d, plan.seed);
  return simulate(k, sic, sic, plan.mode, plan.shots, plan.seed);
}

ExperimentReport mse_sweep(const ChannelSpec &spec, const Povm &prep,
                           const Povm &meas, const std::vector<long> &shots,
                           int trials, std::uint64_t seed, int threads) {
  if (trials < 2)
    throw std::invalid_argument("mse_sweep: at least 2 trials required");
  KrausSet k = make_channel(spec);
  const Eigen::Index n = k.d * k.d;
  const std::size_t outcomes = static_cast<std::size_t>(n) * n;

  ProductFrame pf = product_frame(prep, meas);
  CMat rho = choi(k);
  DataMatrix exact = omega_exact(k, prep, meas);
  std::vector<double> p(outcomes);
  for (Eigen::Index mu = 0; mu < n; ++mu)
    for (Eigen::Index nu = 0; nu < n; ++nu)
      p[mu * n + nu] = exact.omega(mu, nu) / k.d;
  auto cdf = cumulative(p);

  // Real Gram matrix of the duals; the error is the quadratic form of the
  // probability residuals in it.
  RMat gram(outcomes, outcomes);
  for (std::size_t x = 0; x < outcomes; ++x)
    for (std::size_t y = 0; y < outcomes; ++y)
      gram(x, y) = (pf.duals[x].adjoint() * pf.duals[y]).trace().real();

  const double dp = delta_p(pf, rho);
  const double purity = (rho * rho).trace().real();

  ExperimentReport rep;
  rep.spec = spec;
  rep.d = k.d;
  rep.mode = "joint";
  rep.seed = seed;

  if (threads <= 0) {
    const char *env = std::getenv("SQPT_THREADS");
    threads = env ? std::atoi(env) : int(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }

  std::uint64_t stream = 0;
  for (long n_shots : shots) {
    std::vector<double> errs(trials);
    auto run_trial = [&](int t) {
      Rng rng(seed, stream + static_cast<std::uint64_t>(t));
      std::vector<long> counts(outcomes, 0);
      for (long s = 0; s < n_shots; ++s) ++counts[draw(cdf, rng)];
      Eigen::VectorXd delta(outcomes);
      for (std::size_t x = 0; x < outcomes; ++x)
        delta(static_cast<Eigen::Index>(x)) =
            double(counts[x]) / n_shots - p[x];
      errs[t] = delta.dot(gram * delta);
    };
    if (threads > 1) {
      std::vector<std::thread> pool;
      std::atomic<int> next{0};
      for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
          for (int t = next++; t < trials; t = next++) run_trial(t);
        });
      for (auto &th : pool) th.join();
    } else {
      for (int t = 0; t < trials; ++t) run_trial(t);
    }
    stream += static_cast<std::uint64_t>(trials);

    double mean = 0.0;
    for (int t = 0; t < trials; ++t) {
      mean += errs[t];
      rep.records.push_back({n_shots, t, errs[t]});
    }
    mean /= trials;
    double var = 0.0;
    for (double e : errs) var += (e - mean) * (e - mean);
    var /= (trials - 1);

    SweepPoint pt;
    pt.shots = n_shots;
    pt.trials = trials;
    pt.mean_err = mean;
    pt.predicted = (dp - purity) / double(n_shots);
    pt.z = (mean - pt.predicted) / std::sqrt(var / trials);
    rep.sweep.push_back(pt);
  }

  // Point estimate of chi^c at the largest shot count for the report.
  long max_shots = *std::max_element(shots.begin(), shots.end());
  DataMatrix sampled =
      simulate(k, prep, meas, SampleMode::Joint, max_shots, seed);
  rep.chi_hat =
      reconstruct_chi_c(sampled, prep.as_frame(), meas.as_frame());
  rep.min_eig = min_eigenvalue(rep.chi_hat / double(k.d));
  return rep;
}

double loglog_slope(const std::vector<SweepPoint> &sweep) {
  if (sweep.size() < 2)
    throw std::invalid_argument("loglog_slope: need at least 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto &pt : sweep) {
    const double x = std::log(double(pt.shots));
    const double y = std::log(pt.mean_err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = sweep.size();
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

void write_report(const ExperimentReport &r, const std::string &dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json j;
  j["spec"] = nlohmann::json::parse(r.spec.to_json());
  j["d"] = r.d;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["sweep"] = nlohmann::json::array();
  for (const auto &pt : r.sweep)
    j["sweep"].push_back({{"shots", pt.shots},
                          {"trials", pt.trials},
                          {"mean_err", pt.mean_err},
                          {"predicted", pt.predicted},
                          {"z", pt.z}});
  j["chi_hat"] = cmat_to_json(r.chi_hat);
  j["min_eig"] = r.min_eig;

  std::ofstream jf(std::filesystem::path(dir) / "report.json");
  jf << j.dump(2) << "\n";

  std::ofstream cf(std::filesystem::path(dir) / "errors.csv");
  cf << "shots,trial,sq_hs_error\n";
  cf.precision(17);
  for (const auto &rec : r.records)
    cf << rec.shots << "," << rec.trial << "," << rec.sq_hs_error << "\n";
}

ExperimentReport read_report(const std::string &json_path) {
  std::ifstream in(json_path);
  if (!in) throw ParseError("read_report: cannot open " + json_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("read_report: ") + e.what());
  }
  ExperimentReport r;
  for (const char *field :
       {"spec", "d", "mode", "seed", "sweep", "chi_hat", "min_eig"})
    if (!j.contains(field))
      throw ParseError(std::string("read_report: missing field '") + field +
                       "'");
  r.spec = ChannelSpec::from_json(j["spec"].dump());
  r.d = j["d"].get<int>();
  r.mode = j["mode"].get<std::string>();
  r.seed = j["seed"].get<std::uint64_t>();
  for (const auto &pt : j["sweep"]) {
    SweepPoint s;
    s.shots = pt.at("shots").get<long>();
    s.trials = pt.at("trials").get<int>();
    s.mean_err = pt.at("mean_err").get<double>();
    s.predicted = pt.at("predicted").get<double>();
    s.z = pt.at("z").get<double>();
    r.sweep.push_back(s);
  }
  r.chi_hat = cmat_from_json(j["chi_hat"]);
  r.min_eig = j["min_eig"].get<double>();
  return r;
}

}  // namespace sqpt
