// Copyright 2026 The ancnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ancnet/cell/three_site.hpp"
#include "ancnet/common/error.hpp"
#include "ancnet/decoherence/procedure.hpp"
#include "ancnet/gates/gates.hpp"
#include "ancnet/gates/instruction.hpp"
#include "ancnet/network/compiler.hpp"
#include "ancnet/network/duty.hpp"
#include "ancnet/network/routing.hpp"
#include "ancnet/network/schedule_io.hpp"
#include "ancnet/network/simulator.hpp"
#include "ancnet/network/topology_io.hpp"

namespace py = pybind11;
using namespace ancnet;

namespace {

gates::Axis axis_from(char c) {
  switch (c) {
    case 'x': case 'X': return gates::Axis::kX;
    case 'y': case 'Y': return gates::Axis::kY;
    case 'z': case 'Z': return gates::Axis::kZ;
  }
  throw std::invalid_argument("axis must be x, y or z");
}

std::vector<std::vector<double>> curve_rows(const std::vector<decoherence::CurvePoint>& c) {
  std::vector<std::vector<double>> rows;
  for (const auto& p : c) rows.push_back({p.rt_inverse, p.purity, p.trace_error, p.min_eigenvalue});
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ancnet native core";

  py::register_exception<Error>(m, "AncnetError", PyExc_RuntimeError);

  m.def("swap_unitary", [](double theta) { return gates::swap_unitary(theta).matrix(); },
        py::arg("theta"));
  m.def("rotation_unitary",
        [](char axis, double theta) { return gates::rotation_unitary(axis_from(axis), theta).matrix(); },
        py::arg("axis"), py::arg("theta"));
  m.def("phase_unitary", [](double phi) { return gates::phase_unitary(phi).matrix(); }, py::arg("phi"));
  m.def("pi_pulse_matrix", [] { return gates::pi_pulse_matrix().matrix(); });
  m.def("cnot_sequence",
        [](int control, int target) {
          std::vector<std::string> out;
          for (const auto& ins : gates::cnot_from_sqrt_swap(control, target)) out.push_back(gates::to_text(ins));
          return out;
        },
        py::arg("control") = 0, py::arg("target") = 1);
  m.def("program_matrix",
        [](const std::string& text) {
          std::vector<gates::Instruction> prog;
          std::istringstream in(text);
          std::string line;
          std::size_t n = 0;
          while (std::getline(in, line)) {
            ++n;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            for (auto& ins : gates::parse_line(line, n)) prog.push_back(std::move(ins));
          }
          return gates::two_qubit_matrix(prog).matrix();
        },
        py::arg("program"), "Matrix of a two-qubit program on q0, q1 (q0 slow).");

  m.def("occupation_product",
        [](double e_left, double e_center, double e_right, double t, double s) {
          return cell::occupation_product({e_left, e_center, e_right, t, s}).product;
        },
        py::arg("e_left") = 0.0, py::arg("e_center") = 100.0, py::arg("e_right") = 0.0,
        py::arg("t") = 1.0, py::arg("s") = 0.001);
  m.def("contraction_sweep",
        [](const std::string& axis, const std::vector<double>& grid) {
          const auto ax = axis == "s" ? cell::SweepAxis::kDirectTransfer : cell::SweepAxis::kDetuning;
          std::vector<double> out;
          for (const auto& p : cell::contraction_sweep(cell::ThreeSiteParams::contraction_default(), ax, grid)) {
            out.push_back(p.product);
          }
          return out;
        },
        py::arg("axis"), py::arg("grid"));

  m.def("purity_vs_time_ratio",
        [](const std::vector<double>& grid) { return curve_rows(decoherence::purity_vs_time_ratio(grid)); },
        py::arg("grid"), "Rows of (rt_inverse, purity, trace_error, min_eigenvalue).");
  m.def("two_level_reference",
        [](const std::string& initial, const std::vector<double>& grid) {
          const auto init = initial == "excited" ? decoherence::ReferenceInitial::kExcited
                                                 : decoherence::ReferenceInitial::kSuperposition;
          return curve_rows(decoherence::two_level_reference(init, grid));
        },
        py::arg("initial"), py::arg("grid"));

  m.def("route",
        [](const std::string& topology_json, std::vector<int> from, std::vector<int> to) {
          const auto cfg = network::topology_from_json(topology_json);
          const auto chain = network::route_swap_chain(cfg.topology, cfg.topology.site(from),
                                                       cfg.topology.site(to));
          std::vector<std::vector<int>> path;
          for (std::size_t s : chain.path) path.push_back(cfg.topology.coord(s));
          return path;
        },
        py::arg("topology_json"), py::arg("source"), py::arg("target"));
  m.def("compile",
        [](const std::string& circuit, const std::string& topology_json, const std::string& placement_json) {
          const auto cfg = network::topology_from_json(topology_json);
          network::CompileOptions opt;
          opt.spot_radius = cfg.spot_radius;
          opt.timing = cfg.timing;
          const auto sched = network::compile_circuit(network::parse_circuit(circuit), cfg.topology,
                                                      network::placement_from_json(placement_json, cfg.topology),
                                                      opt);
          return network::schedule_to_json(sched);
        },
        py::arg("circuit"), py::arg("topology_json"), py::arg("placement_json"),
        "Compile a circuit; returns the schedule JSON text.");
  m.def("duty_ratios",
        [](const std::string& schedule_json) {
          const auto r = network::duty_ratio_report(network::schedule_from_json(schedule_json));
          std::vector<double> out;
          for (const auto& c : r.cells) out.push_back(c.duty_ratio);
          return out;
        },
        py::arg("schedule_json"));
  m.def("simulate",
        [](const std::string& schedule_json, const std::string& topology_json, std::uint64_t seed,
           std::optional<double> tau_a) {
          const auto cfg = network::topology_from_json(topology_json);
          network::SimulationOptions opt;
          if (tau_a) opt.noise = network::NoiseModel{*tau_a, 1e-3};
          const auto r = network::simulate_schedule(network::schedule_from_json(schedule_json),
                                                    cfg.topology, {}, opt, seed);
          py::dict d;
          d["qubit_rho"] = r.qubit_rho;
          d["fidelity"] = r.fidelity;
          std::vector<int> outcomes;
          for (const auto& mm : r.measurements) outcomes.push_back(mm.outcome);
          d["outcomes"] = outcomes;
          return d;
        },
        py::arg("schedule_json"), py::arg("topology_json"), py::arg("seed") = 0,
        py::arg("tau_a") = py::none());
}
