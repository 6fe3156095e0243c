// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqpt/experiment.hpp"
#include "sqpt/rng.hpp"
#include "sqpt/vecrep.hpp"

using namespace sqpt;

namespace {

double max_abs(const RMat &m) { return m.cwiseAbs().maxCoeff(); }

KrausSet identity_channel(int d) { return {d, {CMat::Identity(d, d)}}; }

ChannelSpec depolarizing_spec(double q) {
  ChannelSpec spec;
  spec.kind = ChannelSpec::Kind::Depolarizing;
  spec.d = 2;
  spec.q = q;
  return spec;
}

struct TempDir {
  std::filesystem::path path;
  TempDir(const char *tag) {
    path = std::filesystem::temp_directory_path() /
           (std::string("sqpt_test_") + tag);
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("sampled data matrices keep the exact marginals per input") {
  Povm sic = sic_d2().povm();
  KrausSet k = identity_channel(2);
  DataMatrix w = simulate(k, sic, sic, SampleMode::PerInput, 500, 99);
  // per input nu, the counts sum to the shot budget, so the column sum is
  // exactly the POVM weight
  for (int nu = 0; nu < 4; ++nu)
    CHECK(std::abs(w.omega.col(nu).sum() - 0.5) < 1e-12);
  CHECK(w.provenance == DataMatrix::Provenance::Sampled);
  CHECK(w.shots == 500);
}

TEST_CASE("sampling is deterministic in the seed") {
  Povm sic = sic_d2().povm();
  KrausSet k = make_channel(depolarizing_spec(0.3));
  for (SampleMode mode : {SampleMode::PerInput, SampleMode::Joint}) {
    DataMatrix a = simulate(k, sic, sic, mode, 1000, 7);
    DataMatrix b = simulate(k, sic, sic, mode, 1000, 7);
    CHECK(max_abs(RMat(a.omega - b.omega)) == 0.0);
    DataMatrix c = simulate(k, sic, sic, mode, 1000, 8);
    CHECK(max_abs(RMat(a.omega - c.omega)) > 0.0);
  }
  CHECK_THROWS_AS(simulate(k, sic, sic, SampleMode::Joint, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("both sampling modes estimate the exact data matrix") {
  Povm sic = sic_d2().povm();
  KrausSet k = make_channel(depolarizing_spec(0.3));
  DataMatrix exact = omega_exact(k, sic, sic);
  // joint mode normalizes to sum d, per-input mode column-wise
  for (SampleMode mode : {SampleMode::PerInput, SampleMode::Joint}) {
    DataMatrix w = simulate(k, sic, sic, mode, 200000, 3);
    CHECK(max_abs(RMat(w.omega - exact.omega)) < 0.01);
  }
  DataMatrix wj = simulate(k, sic, sic, SampleMode::Joint, 5000, 4);
  CHECK(std::abs(wj.omega.sum() - 2.0) < 1e-12);
}

TEST_CASE("plan-level simulate builds its own SIC instruments") {
  ShotPlan plan;
  plan.mode = SampleMode::Joint;
  plan.shots = 1000;
  plan.seed = 21;
  plan.channel = depolarizing_spec(0.5);
  DataMatrix w = simulate(plan);
  CHECK(w.d == 2);
  CHECK(std::abs(w.omega.sum() - 2.0) < 1e-12);
  DataMatrix w2 = simulate(plan);
  CHECK(max_abs(RMat(w.omega - w2.omega)) == 0.0);
}

TEST_CASE("mse_sweep matches the closed-form error prediction") {
  Povm sic = sic_d2().povm();
  std::vector<long> shots = {1000, 10000};
  ExperimentReport rep =
      mse_sweep(depolarizing_spec(0.3), sic, sic, shots, 60, 5);
  REQUIRE(rep.sweep.size() == 2);
  for (const auto &pt : rep.sweep) {
    CHECK(pt.mean_err > 0.0);
    CHECK(pt.predicted > 0.0);
    CHECK(std::abs(pt.z) < 4.0);
  }
  // 1/N scaling
  CHECK(loglog_slope(rep.sweep) == doctest::Approx(-1.0).epsilon(0.2));
  // per-trial records for both shot counts
  CHECK(rep.records.size() == 2 * 60);
  // the estimated chi is close to the truth at the larger budget
  KrausSet k = make_channel(depolarizing_spec(0.3));
  CHECK((rep.chi_hat - chi_c(k)).cwiseAbs().maxCoeff() < 0.2);
  CHECK(rep.min_eig > -0.05);

  // deterministic across thread counts
  ExperimentReport rep1 =
      mse_sweep(depolarizing_spec(0.3), sic, sic, shots, 60, 5, 1);
  ExperimentReport rep4 =
      mse_sweep(depolarizing_spec(0.3), sic, sic, shots, 60, 5, 4);
  for (std::size_t i = 0; i < rep1.records.size(); ++i)
    CHECK(rep1.records[i].sq_hs_error == rep4.records[i].sq_hs_error);

  CHECK_THROWS_AS(mse_sweep(depolarizing_spec(0.3), sic, sic, shots, 1, 5),
                  std::invalid_argument);
}

TEST_CASE("loglog_slope recovers an exact power law") {
  std::vector<SweepPoint> sweep;
  for (long n : {100L, 1000L, 10000L}) {
    SweepPoint pt;
    pt.shots = n;
    pt.mean_err = 3.0 / double(n);
    sweep.push_back(pt);
  }
  CHECK(loglog_slope(sweep) == doctest::Approx(-1.0).epsilon(1e-12));
  sweep.resize(1);
  CHECK_THROWS_AS(loglog_slope(sweep), std::invalid_argument);
}

TEST_CASE("reports round-trip through JSON and CSV") {
  TempDir tmp("report");
  Povm sic = sic_d2().povm();
  ExperimentReport rep =
      mse_sweep(depolarizing_spec(0.4), sic, sic, {500, 2000}, 10, 9);
  write_report(rep, tmp.path.string());

  auto json_path = tmp.path / "report.json";
  auto csv_path = tmp.path / "errors.csv";
  REQUIRE(std::filesystem::exists(json_path));
  REQUIRE(std::filesystem::exists(csv_path));

  ExperimentReport back = read_report(json_path.string());
  CHECK(back.d == rep.d);
  CHECK(back.seed == rep.seed);
  REQUIRE(back.sweep.size() == rep.sweep.size());
  for (std::size_t i = 0; i < rep.sweep.size(); ++i) {
    CHECK(back.sweep[i].shots == rep.sweep[i].shots);
    CHECK(back.sweep[i].mean_err == rep.sweep[i].mean_err);
    CHECK(back.sweep[i].predicted == rep.sweep[i].predicted);
  }
  CHECK((back.chi_hat - rep.chi_hat).cwiseAbs().maxCoeff() == 0.0);
  CHECK(back.min_eig == rep.min_eig);

  // CSV has a header plus one row per record
  std::ifstream csv(csv_path);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "shots,trial,sq_hs_error");
  int rows = 0;
  while (std::getline(csv, line))
    if (!line.empty()) ++rows;
  CHECK(rows == int(rep.records.size()));

  // identical seeds give byte-identical serialized reports
  TempDir tmp2("report2");
  ExperimentReport rep2 =
      mse_sweep(depolarizing_spec(0.4), sic, sic, {500, 2000}, 10, 9);
  write_report(rep2, tmp2.path.string());
  std::ifstream f1(json_path, std::ios::binary);
  std::ifstream f2(tmp2.path / "report.json", std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(!s1.str().empty());
}

TEST_CASE("read_report rejects malformed input by name") {
  TempDir tmp("badreport");
  std::filesystem::create_directories(tmp.path);
  auto p = tmp.path / "broken.json";
  {
    std::ofstream out(p);
    out << "{\"spec\": {\"kind\": \"depolarizing\", \"d\": 2, \"q\": 0.1}, "
           "\"d\": 2}";
  }
  try {
    read_report(p.string());
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("mode") != std::string::npos);
  }
  {
    std::ofstream out(p);
    out << "{broken";
  }
  CHECK_THROWS_AS(read_report(p.string()), ParseError);
  CHECK_THROWS_AS(read_report((tmp.path / "missing.json").string()),
                  ParseError);
}
