// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqpt/experiment.hpp"
#include "sqpt/json_io.hpp"
#include "sqpt/sic.hpp"
#include "sqpt/verify.hpp"

namespace {

using nlohmann::json;

sqpt::ChannelSpec load_channel(const std::string &arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw sqpt::ParseError("cannot open channel file " + arg.substr(1));
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return sqpt::ChannelSpec::from_json(text);
  }
  return sqpt::ChannelSpec::from_json(arg);
}

sqpt::Povm sic_for(int d, std::uint64_t seed) {
  if (d == 2) return sqpt::sic_d2().povm();
  return sqpt::sic_search(d, seed).first.povm();
}

sqpt::SicPovm sic_states_for(int d, std::uint64_t seed) {
  if (d == 2) return sqpt::sic_d2();
  return sqpt::sic_search(d, seed).first;
}

int cmd_zoo(bool as_json) {
  struct Entry {
    const char *kind, *params;
  };
  const std::vector<Entry> zoo = {
      {"depolarizing", "d >= 2, q in [0, 1]"},
      {"unitary", "matrix: unitary d x d"},
      {"amplitude-damping", "d = 2, gamma in [0, 1]"},
      {"random", "d >= 2, rank >= 1, seed"},
      {"kraus-list", "ops: explicit trace-preserving set"},
  };
  if (as_json) {
    json j = json::array();
    for (const auto &e : zoo) j.push_back({{"kind", e.kind}, {"params", e.params}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto &e : zoo)
      std::printf("%-18s %s\n", e.kind, e.params);
  }
  return 0;
}

int cmd_simulate(const std::string &channel, std::vector<long> shots,
                 int trials, std::uint64_t seed, const std::string &out_dir,
                 int threads, bool as_json) {
  sqpt::ChannelSpec spec = load_channel(channel);
  sqpt::Povm sic = sic_for(spec.d, seed);
  if (shots.empty()) shots = {10000};
  sqpt::ExperimentReport rep =
      sqpt::mse_sweep(spec, sic, sic, shots, trials, seed, threads);
  if (!out_dir.empty()) sqpt::write_report(rep, out_dir);
  if (as_json) {
    json j = json::array();
    for (const auto &pt : rep.sweep)
      j.push_back({{"shots", pt.shots},
                   {"mean_err", pt.mean_err},
                   {"predicted", pt.predicted},
                   {"z", pt.z}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%10s %14s %14s %8s\n", "shots", "mean_err", "predicted", "z");
    for (const auto &pt : rep.sweep)
      std::printf("%10ld %14.6e %14.6e %8.3f\n", pt.shots, pt.mean_err,
                  pt.predicted, pt.z);
    std::printf("min eigenvalue of estimated Choi state: %.3e\n", rep.min_eig);
  }
  return 0;
}

int cmd_reconstruct(const std::string &channel, const std::string &from,
                    long shots, std::uint64_t seed, bool unital,
                    const std::string &out_file, bool as_json) {
  sqpt::CMat chi;
  long used_shots = 0;
  if (!from.empty()) {
    sqpt::ExperimentReport rep = sqpt::read_report(from);
    chi = rep.chi_hat;
    for (const auto &pt : rep.sweep) used_shots = std::max(used_shots, pt.shots);
  } else {
    sqpt::ChannelSpec spec = load_channel(channel);
    sqpt::KrausSet k = sqpt::make_channel(spec);
    sqpt::SicPovm s = sic_states_for(spec.d, seed);
    sqpt::Povm povm = s.povm();
    sqpt::DataMatrix w =
        shots > 0
            ? sqpt::simulate(k, povm, povm, sqpt::SampleMode::Joint, shots, seed)
            : sqpt::omega_exact(k, povm, povm);
    used_shots = shots;
    chi = sqpt::reconstruct_chi_sic(w, s, unital);
  }
  const double tr = chi.trace().real();
  const double herm = (chi - chi.adjoint()).cwiseAbs().maxCoeff();
  const double min_eig = sqpt::min_eigenvalue(chi);
  if (as_json) {
    json j = {{"trace", tr},
              {"hermiticity_residual", herm},
              {"min_eig", min_eig},
              {"shots", used_shots},
              {"chi", sqpt::cmat_to_json(chi)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("Tr[chi]      = %.6f\n", tr);
    std::printf("hermiticity  = %.3e\n", herm);
    std::printf("min eig      = %.3e\n", min_eig);
    if (used_shots > 0) std::printf("shots        = %ld\n", used_shots);
  }
  if (!out_file.empty()) {
    json j = {{"chi", sqpt::cmat_to_json(chi)},
              {"trace", tr},
              {"min_eig", min_eig},
              {"shots", used_shots}};
    std::ofstream f(out_file);
    f << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(int d, std::uint64_t seed, bool break_frame, bool as_json) {
  auto results = sqpt::run_verification(d, seed, break_frame);
  bool all_pass = true;
  if (as_json) {
    json j = json::array();
    for (const auto &r : results) {
      j.push_back({{"name", r.name},
                   {"residual", r.residual},
                   {"tol", r.tol},
                   {"pass", r.pass}});
      all_pass = all_pass && r.pass;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto &r : results) {
      std::printf("%-40s %12.3e %6s\n", r.name.c_str(), r.residual,
                  r.pass ? "pass" : "FAIL");
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_sic_search(int d, std::uint64_t seed, int max_iters, int restarts,
                   const std::string &out_file, bool as_json) {
  auto [s, rep] = sqpt::sic_search(d, seed, max_iters, restarts);
  const double target = sqpt::sic_potential_minimum(d);
  if (as_json) {
    json j = {{"d", d},
              {"potential", rep.potential},
              {"target", target},
              {"iterations", rep.iterations},
              {"seed", rep.seed},
              {"fiducial", sqpt::cvec_to_json(s.fiducial)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("frame potential = %.12f (target %.12f)\n", rep.potential,
                target);
    std::printf("iterations      = %d\n", rep.iterations);
  }
  if (!out_file.empty()) {
    json j = {{"d", d},
              {"fiducial", sqpt::cvec_to_json(s.fiducial)},
              {"potential", rep.potential},
              {"seed", rep.seed}};
    std::ofstream f(out_file);
    f << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"SQPT workbench: channel tomography in the vector representation"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  auto *zoo = app.add_subcommand("zoo", "list available channel kinds");

  auto *sim = app.add_subcommand("simulate", "finite-shot MSE sweep");
  std::string channel, out_dir;
  std::vector<long> shots;
  int trials = 100, threads = 0;
  std::uint64_t seed = 0;
  sim->add_option("--channel", channel, "channel spec JSON or @file")
      ->required();
  sim->add_option("--shots", shots, "shot counts (repeatable)");
  sim->add_option("--trials", trials, "trials per shot count");
  sim->add_option("--seed", seed, "RNG seed");
  sim->add_option("--out", out_dir, "output directory for report.json + csv");
  sim->add_option("--threads", threads, "worker threads (0 = auto)");

  auto *rec = app.add_subcommand("reconstruct", "chi^c reconstruction");
  std::string rec_channel, rec_from, rec_out;
  long rec_shots = 0;
  std::uint64_t rec_seed = 0;
  bool unital = false;
  rec->add_option("--channel", rec_channel, "channel spec JSON or @file");
  rec->add_option("--from", rec_from, "prior report.json");
  rec->add_option("--shots", rec_shots, "sample omega (0 = exact)");
  rec->add_option("--seed", rec_seed, "RNG seed");
  rec->add_flag("--unital", unital, "use the unital closed form");
  rec->add_option("--out", rec_out, "write chi to this JSON file");

  auto *ver = app.add_subcommand("verify", "structural verification suite");
  int ver_d = 2;
  std::uint64_t ver_seed = 0;
  bool break_frame = false;
  ver->add_option("--d", ver_d, "dimension")->check(CLI::Range(2, 3));
  ver->add_option("--seed", ver_seed, "RNG seed");
  ver->add_flag("--break-frame", break_frame, "inject a duplicated frame element");

  auto *sic = app.add_subcommand("sic-search", "numerical SIC fiducial search");
  int sic_d = 2, max_iters = 20000, restarts = 20;
  std::uint64_t sic_seed = 0;
  std::string sic_out;
  sic->add_option("--d", sic_d, "dimension")->check(CLI::Range(2, 8));
  sic->add_option("--seed", sic_seed, "RNG seed");
  sic->add_option("--max-iters", max_iters, "iterations per restart");
  sic->add_option("--restarts", restarts, "random restarts");
  sic->add_option("--out", sic_out, "write fiducial JSON to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (zoo->parsed()) return cmd_zoo(as_json);
    if (sim->parsed())
      return cmd_simulate(channel, shots, trials, seed, out_dir, threads,
                          as_json);
    if (rec->parsed()) {
      if (rec_channel.empty() && rec_from.empty()) {
        std::cerr << "reconstruct: need --channel or --from\n";
        return 2;
      }
      return cmd_reconstruct(rec_channel, rec_from, rec_shots, rec_seed,
                             unital, rec_out, as_json);
    }
    if (ver->parsed()) return cmd_verify(ver_d, ver_seed, break_frame, as_json);
    if (sic->parsed())
      return cmd_sic_search(sic_d, sic_seed, max_iters, restarts, sic_out,
                            as_json);
  } catch (const sqpt::SearchError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sqpt::FrameError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sqpt::PovmError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sqpt::ConsistencyError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
