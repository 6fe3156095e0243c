// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_EXPERIMENT_HPP
#define SQPTLAB_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sqpt/tomography.hpp"

namespace sqpt {

enum class SampleMode { PerInput, Joint };

struct ShotPlan {
  SampleMode mode = SampleMode::Joint;
  long shots = 0;
  std::uint64_t seed = 0;
  ChannelSpec channel;
};

// Finite-shot estimate of the data matrix. Joint mode draws outcomes x with
// p(x) = omega_{mu nu} / d (one POVM on the Choi state); per-input mode draws
// measurement outcomes separately for each prepared input. Both are unbiased.
DataMatrix simulate(const KrausSet &k, const Povm &prep, const Povm &meas,
                    SampleMode mode, long shots, std::uint64_t seed);

// Convenience entry: SIC preparation and measurement derived from the plan.
DataMatrix simulate(const ShotPlan &plan);

struct TrialRecord {
  long shots = 0;
  int trial = 0;
  double sq_hs_error = 0.0;
};

struct SweepPoint {
  long shots = 0;
  int trials = 0;
  double mean_err = 0.0;
  double predicted = 0.0;  // (Delta_p - Tr[rho^2]) / N
  double z = 0.0;
};

struct ExperimentReport {
  ChannelSpec spec;
  int d = 0;
  std::string mode = "joint";
  std::uint64_t seed = 0;
  std::vector<SweepPoint> sweep;
  CMat chi_hat;
  double min_eig = 0.0;  // smallest eigenvalue of the estimated Choi state
  std::vector<TrialRecord> records;  // persisted to CSV, not JSON
};

// Joint-mode Monte-Carlo sweep of the squared Hilbert-Schmidt estimation
// error against its closed-form expectation. Trials run in parallel with
// per-trial seed streams.
ExperimentReport mse_sweep(const ChannelSpec &spec, const Povm &prep,
                           const Povm &meas, const std::vector<long> &shots,
                           int trials, std::uint64_t seed, int threads = 0);

// Least-squares slope of log(mean_err) vs log(shots).
double loglog_slope(const std::vector<SweepPoint> &sweep);

// report.json plus errors.csv under dir.
void write_report(const ExperimentReport &r, const std::string &dir);
ExperimentReport read_report(const std::string &json_path);

}  // namespace sqpt

#endif
