// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqpt/channels.hpp"
#include "sqpt/experiment.hpp"
#include "sqpt/sic.hpp"
#include "sqpt/tomography.hpp"
#include "sqpt/vecrep.hpp"
#include "sqpt/verify.hpp"

namespace py = pybind11;
using namespace sqpt;

namespace {

SicPovm sic_for(int d, std::uint64_t seed) {
  if (d == 2) return sic_d2();
  return sic_search(d, seed).first;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum process tomography in the vector representation";

  py::register_exception<FrameError>(m, "FrameError");
  py::register_exception<PovmError>(m, "PovmError");
  py::register_exception<RepresentationError>(m, "RepresentationError");
  py::register_exception<ConsistencyError>(m, "ConsistencyError");
  py::register_exception<NumericError>(m, "NumericError");
  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<SearchError>(m, "SearchError");

  // vectorization layer
  m.def("vec", &vec, py::arg("a"), "Row-major vectorization of an operator");
  m.def("unvec", &unvec, py::arg("v"));
  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def("hs_inner", &hs_inner, py::arg("a"), py::arg("b"),
        "Hilbert-Schmidt inner product Tr[a^dag b]");
  m.def("reshuffle", &reshuffle, py::arg("m"),
        "Index reshuffle relating the two channel matrices");
  m.def("beta_swap", [](int d) { return beta_swap(std::size_t(d)); },
        py::arg("d"));

  // channels
  py::class_<KrausSet>(m, "Channel")
      .def_property_readonly("d", [](const KrausSet &k) { return k.d; })
      .def_property_readonly("kraus",
                             [](const KrausSet &k) { return k.ops; })
      .def("apply", &apply, py::arg("rho"))
      .def("chi_c", &chi_c)
      .def("lambda_c", &lambda_c)
      .def("choi", &choi);

  m.def(
      "make_channel",
      [](const std::string &spec_json) {
        return make_channel(ChannelSpec::from_json(spec_json));
      },
      py::arg("spec_json"),
      "Build a channel from a JSON spec (same format as the CLI)");
  m.def(
      "kraus_channel",
      [](const std::vector<CMat> &ops) {
        KrausSet k{ops.empty() ? 0 : int(ops[0].rows()), ops};
        k.validate();
        return k;
      },
      py::arg("ops"));
  m.def("kraus_from_chi", &kraus_from_chi, py::arg("chi"),
        py::arg("psd_tol") = 1e-8, py::arg("drop_tol") = 1e-12);

  // SIC layer
  m.def(
      "sic_vectors",
      [](int d, std::uint64_t seed) { return sic_for(d, seed).vectors; },
      py::arg("d"), py::arg("seed") = 0,
      "SIC state vectors (analytic at d=2, searched otherwise)");
  m.def("frame_potential", &frame_potential, py::arg("vectors"));
  m.def("sic_potential_minimum", &sic_potential_minimum, py::arg("d"));
  m.def(
      "sic_search",
      [](int d, std::uint64_t seed, int max_iters, int restarts) {
        auto [s, rep] = sic_search(d, seed, max_iters, restarts);
        py::dict out;
        out["fiducial"] = s.fiducial;
        out["vectors"] = s.vectors;
        out["potential"] = rep.potential;
        out["iterations"] = rep.iterations;
        return out;
      },
      py::arg("d"), py::arg("seed") = 0, py::arg("max_iters") = 20000,
      py::arg("restarts") = 20);

  // tomography
  m.def(
      "omega_exact",
      [](const KrausSet &k, std::uint64_t seed) {
        Povm p = sic_for(k.d, seed).povm();
        return omega_exact(k, p, p).omega;
      },
      py::arg("channel"), py::arg("seed") = 0,
      "Exact SIC data matrix of a channel");
  m.def(
      "simulate_omega",
      [](const KrausSet &k, long shots, std::uint64_t seed, bool per_input) {
        Povm p = sic_for(k.d, seed).povm();
        return simulate(k, p, p,
                        per_input ? SampleMode::PerInput : SampleMode::Joint,
                        shots, seed)
            .omega;
      },
      py::arg("channel"), py::arg("shots"), py::arg("seed") = 0,
      py::arg("per_input") = false,
      "Finite-shot SIC data matrix of a channel");
  m.def(
      "reconstruct_chi_c",
      [](const RMat &omega, int d, bool unital, std::uint64_t seed) {
        DataMatrix w;
        w.d = d;
        w.omega = omega;
        SicPovm s = sic_for(d, seed);
        return reconstruct_chi_sic(w, s, unital);
      },
      py::arg("omega"), py::arg("d"), py::arg("unital") = false,
      py::arg("seed") = 0,
      "Closed-form SIC reconstruction of chi^c from a data matrix");

  m.def(
      "delta_constants",
      [](int d) {
        DeltaConstants c = delta_constants(d);
        py::dict out;
        out["avg_opt"] = c.avg_opt;
        out["joint_opt"] = c.joint_opt;
        out["ratio_bound"] = c.ratio_bound;
        return out;
      },
      py::arg("d"));

  m.def(
      "verify",
      [](int d, std::uint64_t seed) {
        py::list out;
        for (const auto &r : run_verification(d, seed, false)) {
          py::dict item;
          item["name"] = r.name;
          item["residual"] = r.residual;
          item["tol"] = r.tol;
          item["pass"] = r.pass;
          out.append(item);
        }
        return out;
      },
      py::arg("d") = 2, py::arg("seed") = 0,
      "Structural verification suite; returns one entry per check");
}
