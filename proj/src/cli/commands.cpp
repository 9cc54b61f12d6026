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

#include "ancnet/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "ancnet/common/error.hpp"
#include "ancnet/common/log.hpp"
#include "ancnet/decoherence/procedure.hpp"
#include "ancnet/network/compiler.hpp"
#include "ancnet/network/duty.hpp"
#include "ancnet/network/routing.hpp"
#include "ancnet/network/schedule_io.hpp"
#include "ancnet/network/simulator.hpp"
#include "ancnet/network/topology_io.hpp"
#include "ancnet/network/validator.hpp"

namespace ancnet::cli {

namespace {

using nlohmann::json;

std::string num(double v) { return fmt::format("{:.17g}", v); }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

core::Ket initial_ket(const std::string& s) {
  const double r = std::sqrt(0.5);
  core::Vector v(2);
  if (s == "0") {
    v << 1.0, 0.0;
  } else if (s == "1") {
    v << 0.0, 1.0;
  } else if (s == "+") {
    v << r, r;
  } else if (s == "-") {
    v << r, -r;
  } else if (s == "+i") {
    v << r, core::Complex(0.0, r);
  } else if (s == "-i") {
    v << r, core::Complex(0.0, -r);
  } else {
    throw ParseError("unknown initial state '" + s + "' (use 0, 1, +, -, +i, -i)");
  }
  return core::Ket(v);
}

void write_curve(std::ostream& out, const std::vector<decoherence::CurvePoint>& c) {
  out << "rt_inverse,purity,trace_error,min_eigenvalue\n";
  for (const auto& p : c) {
    out << num(p.rt_inverse) << ',' << num(p.purity) << ',' << num(p.trace_error) << ','
        << num(p.min_eigenvalue) << '\n';
  }
}

json curve_json(const std::vector<decoherence::CurvePoint>& c) {
  json arr = json::array();
  for (const auto& p : c) {
    arr.push_back({{"rt_inverse", p.rt_inverse},
                   {"purity", p.purity},
                   {"trace_error", p.trace_error},
                   {"min_eigenvalue", p.min_eigenvalue}});
  }
  return arr;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void cmd_fig2(const Fig2Options& o, std::ostream& out) {
  if (o.grid.empty()) throw ParseError("empty grid");
  o.base.validate();
  const auto pts = cell::contraction_sweep(o.base, o.axis, o.grid);
  const char* axis = o.axis == cell::SweepAxis::kDetuning ? "detuning" : "s";
  for (const auto& p : pts) {
    if (p.ambiguous) logger()->warn("level tracking is ambiguous at x={}", p.x);
  }
  if (o.format == Format::kJson) {
    json arr = json::array();
    for (const auto& p : pts) {
      arr.push_back({{"x", p.x},
                     {"occupation_product", p.product},
                     {"degenerate_flag", p.degenerate},
                     {"level", p.level},
                     {"ambiguous", p.ambiguous}});
    }
    out << json{{"axis", axis}, {"points", arr}}.dump(2) << '\n';
    return;
  }
  out << "x,occupation_product,degenerate_flag\n";
  for (const auto& p : pts) out << num(p.x) << ',' << num(p.product) << ',' << (p.degenerate ? 1 : 0) << '\n';
}

void cmd_fig3(const Fig3Options& o, std::ostream& out) {
  decoherence::validate_ratio_grid(o.grid);
  decoherence::DecoherenceParams templ;
  templ.exchange_j = o.exchange_j;
  templ.gate_time = std::numbers::pi / o.exchange_j;
  if (!(o.exchange_j > 0.0)) throw std::invalid_argument("J must be positive");
  if (o.dt) templ.dt = *o.dt;
  using decoherence::ReferenceInitial;
  const bool all = o.curve == "all";
  if (!all && o.curve != "procedure" && o.curve != "excited" && o.curve != "superposition") {
    throw ParseError("unknown curve '" + o.curve + "'");
  }
  std::vector<decoherence::CurvePoint> proc, exc, sup;
  if (all || o.curve == "procedure") proc = decoherence::purity_vs_time_ratio(o.grid, templ);
  if (all || o.curve == "excited") {
    exc = decoherence::two_level_reference(ReferenceInitial::kExcited, o.grid, templ);
  }
  if (all || o.curve == "superposition") {
    sup = decoherence::two_level_reference(ReferenceInitial::kSuperposition, o.grid, templ);
  }
  if (o.format == Format::kJson) {
    json doc;
    if (!proc.empty()) doc["procedure"] = curve_json(proc);
    if (!exc.empty()) doc["excited_reference"] = curve_json(exc);
    if (!sup.empty()) doc["superposition_reference"] = curve_json(sup);
    out << doc.dump(2) << '\n';
    return;
  }
  if (!all) {
    write_curve(out, !proc.empty() ? proc : !exc.empty() ? exc : sup);
    return;
  }
  out << "rt_inverse,purity,trace_error,min_eigenvalue,excited_reference,superposition_reference\n";
  for (std::size_t i = 0; i < o.grid.size(); ++i) {
    const double trace = std::max({proc[i].trace_error, exc[i].trace_error, sup[i].trace_error});
    const double mineig =
        std::min({proc[i].min_eigenvalue, exc[i].min_eigenvalue, sup[i].min_eigenvalue});
    out << num(o.grid[i]) << ',' << num(proc[i].purity) << ',' << num(trace) << ',' << num(mineig)
        << ',' << num(exc[i].purity) << ',' << num(sup[i].purity) << '\n';
  }
}

void cmd_compile(const CompileCommand& c, std::ostream& out, std::ostream& report) {
  const auto config = network::topology_from_json(read_file(c.topology_path));
  const auto circuit = network::parse_circuit(read_file(c.circuit_path));
  const auto placement = network::placement_from_json(read_file(c.placement_path), config.topology);
  network::CompileOptions opt;
  opt.spot_radius = c.spot_radius.value_or(config.spot_radius);
  opt.timing = config.timing;
  const auto schedule = network::compile_circuit(circuit, config.topology, placement, opt);
  network::validate_schedule(schedule, config.topology);
  out << network::schedule_to_json(schedule);

  const auto duty = network::duty_ratio_report(schedule);
  report << fmt::format("events {}  total_time {}  mean_duty_ratio {}\n", schedule.events.size(),
                        num(duty.total_time), num(duty.mean_ratio()));
  for (const auto& row : duty.cells) {
    report << fmt::format("cell {}  active {}  R_d {}\n", row.cell, num(row.active_time),
                          num(row.duty_ratio));
  }
}

void cmd_simulate(const SimulateCommand& c, std::ostream& out) {
  const auto config = network::topology_from_json(read_file(c.topology_path));
  const auto schedule = network::schedule_from_json(read_file(c.schedule_path));
  std::vector<core::Ket> initial;
  for (const auto& s : c.initial) initial.push_back(initial_ket(s));
  if (!initial.empty() && initial.size() != schedule.placement.size()) {
    throw ParseError(fmt::format("--initial lists {} states for {} qubits", initial.size(),
                                 schedule.placement.size()));
  }
  network::SimulationOptions opt;
  if (c.tau_a) {
    if (!(*c.tau_a > 0.0)) throw ParseError("--tau-a must be positive");
    opt.noise = network::NoiseModel{*c.tau_a, c.dt};
  }
  const auto res = network::simulate_schedule(schedule, config.topology, initial, opt, c.seed);
  const auto trials = network::run_trials(schedule, config.topology, initial, opt, c.seed, c.trials);

  if (c.format == Format::kCsv) {
    out << "outcome,count\n";
    for (const auto& [k, n] : trials.histogram) out << k << ',' << n << '\n';
    return;
  }
  json doc;
  doc["seed"] = c.seed;
  doc["trials"] = c.trials;
  doc["noisy"] = opt.noise.has_value();
  doc["register_cells"] = res.register_cells;
  json pops = json::array();
  for (core::Index i = 0; i < res.qubit_rho.rows(); ++i) pops.push_back(res.qubit_rho(i, i).real());
  doc["register_populations"] = pops;
  doc["fidelity"] = res.fidelity;
  doc["ancilla_excitation"] = res.ancilla_excitation;
  json meas = json::array();
  for (const auto& m : res.measurements) {
    meas.push_back({{"cell", m.cell}, {"qubit", m.qubit}, {"outcome", m.outcome}, {"p0", m.p0}, {"p1", m.p1}});
  }
  doc["measurements"] = meas;
  if (c.trials > 0) {
    doc["measured_qubits"] = trials.measured_qubits;
    doc["histogram"] = trials.histogram;
    doc["mean_fidelity"] = trials.mean_fidelity;
  }
  out << doc.dump(2) << '\n';
}

void cmd_route(const RouteCommand& c, std::ostream& out) {
  const auto config = network::topology_from_json(read_file(c.topology_path));
  const auto& topo = config.topology;
  if (!topo.contains(c.from) || !topo.contains(c.to)) throw ParseError("route endpoint outside the lattice");
  const std::size_t a = topo.site(c.from);
  const std::size_t b = topo.site(c.to);
  network::SwapChain chain;
  try {
    chain = network::route_swap_chain(topo, a, b);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::runtime_error& e) {
    throw RoutingError(e.what(), 0);
  }
  auto coords = [&](const std::vector<network::SitePair>& pairs) {
    json arr = json::array();
    for (const auto& [x, y] : pairs) arr.push_back({topo.coord(x), topo.coord(y)});
    return arr;
  };
  json path = json::array();
  for (std::size_t s : chain.path) path.push_back(topo.coord(s));
  json doc{{"path", path},
           {"distance", chain.path.size() - 1},
           {"chain_length", chain.chain_length()},
           {"forward", coords(chain.forward)},
           {"interaction", {topo.coord(chain.interaction.first), topo.coord(chain.interaction.second)}},
           {"restore", coords(chain.restore)}};
  out << doc.dump(2) << '\n';
}

void cmd_duty(const DutyCommand& c, std::ostream& out) {
  const auto schedule = network::schedule_from_json(read_file(c.schedule_path));
  const double tau = c.tau_a > 0.0 ? c.tau_a : std::numeric_limits<double>::quiet_NaN();
  const auto r = network::duty_ratio_report(schedule, tau);
  if (c.format == Format::kJson) {
    json rows = json::array();
    for (const auto& row : r.cells) {
      rows.push_back({{"cell", row.cell},
                      {"active_time", row.active_time},
                      {"duty_ratio", row.duty_ratio},
                      {"effective_coherence_time", number_or_null(row.effective_coherence_time)}});
    }
    out << json{{"total_time", r.total_time}, {"mean_duty_ratio", r.mean_ratio()}, {"cells", rows}}.dump(2)
        << '\n';
    return;
  }
  out << "cell,active_time,duty_ratio,effective_coherence_time\n";
  for (const auto& row : r.cells) {
    out << row.cell << ',' << num(row.active_time) << ',' << num(row.duty_ratio) << ','
        << (std::isfinite(row.effective_coherence_time) ? num(row.effective_coherence_time) : "")
        << '\n';
  }
}

int run_guarded(const std::function<void()>& body, std::ostream& err) {
  try {
    body();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kOther);
  }
}

}  // namespace ancnet::cli
