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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "ancnet/common/error.hpp"
#include "ancnet/network/circuit.hpp"
#include "ancnet/network/compiler.hpp"
#include "ancnet/network/duty.hpp"
#include "ancnet/network/frequency.hpp"
#include "ancnet/network/routing.hpp"
#include "ancnet/network/schedule_io.hpp"
#include "ancnet/network/simulator.hpp"
#include "ancnet/network/topology_io.hpp"
#include "ancnet/network/validator.hpp"
#include "fixtures.hpp"

using namespace ancnet::network;
using ancnet::core::Ket;
using oracle::C;
using oracle::V;
constexpr double kPi = std::numbers::pi;

namespace {

Circuit circuit(const std::string& text) { return parse_circuit(text); }

std::vector<std::size_t> identity_placement(int n) {
  std::vector<std::size_t> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

std::vector<EventKind> kinds(const PulseSchedule& s) {
  std::vector<EventKind> k;
  for (const auto& e : s.events) k.push_back(e.kind);
  return k;
}

std::size_t count_swaps(const PulseSchedule& s, double theta) {
  return std::count_if(s.events.begin(), s.events.end(), [&](const Event& e) {
    return e.kind == EventKind::kGatingWindow && std::abs(e.theta - theta) < 1e-12;
  });
}

std::vector<Ket> zeros(int n) { return std::vector<Ket>(n, Ket::basis(2, 0)); }

}  // namespace

TEST_CASE("lattice examples") {
  const auto line = fixtures::chain(3);
  CHECK(line.links().size() == 2);
  CHECK(line.neighbours(1).size() == 2);
  const auto g = fixtures::grid(3, 3);
  CHECK(g.links().size() == 12);
  CHECK(g.check_invariants().empty());
  const auto center = g.site({1, 1});
  std::set<int> used;
  for (auto nb : g.neighbours(center)) {
    const Link* l = g.link_between(center, nb);
    REQUIRE(l != nullptr);
    used.insert(l->a == center ? l->port_a : l->port_b);
  }
  CHECK(used == std::set<int>{6, 7, 8, 9});

  const Link* east = g.link_between(g.site({0, 0}), g.site({1, 0}));
  REQUIRE(east != nullptr);
  CHECK(east->a == g.site({0, 0}));
  CHECK(east->port_a == 6);
  CHECK(east->port_b == 8);
  const Link* north = g.link_between(g.site({0, 0}), g.site({0, 1}));
  REQUIRE(north != nullptr);
  CHECK(north->port_a == 7);
  CHECK(north->port_b == 9);
  CHECK(plus_port(0) == 6);
  CHECK(minus_port(2, 1) == 9);

  for (const auto& l : g.links()) {
    CHECK(g.manhattan(l.a, l.b) == 1);
    CHECK(g.cell(l.a).energy(l.port_a) == l.energy);
    CHECK(g.cell(l.b).energy(l.port_b) == l.energy);
  }
  CHECK(g.coord(g.site({2, 1})) == Coord{2, 1});
  CHECK(g.chebyshev(g.site({0, 0}), g.site({2, 1})) == 2);
  CHECK(g.manhattan(g.site({0, 0}), g.site({2, 1})) == 3);
  CHECK_FALSE(g.contains({3, 0}));
  CHECK_THROWS_AS(g.site({3, 0}), std::out_of_range);
  CHECK(g.link_between(g.site({0, 0}), g.site({1, 1})) == nullptr);
}

TEST_CASE("lattice rejects bad input") {
  CHECK_THROWS_WITH_AS(build_lattice(3, {2, 2, 2}, fixtures::grid_cell()),
                       doctest::Contains("insufficient ports"), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(2, {2}, fixtures::grid_cell()), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(2, {0, 2}, fixtures::grid_cell()), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(4, {1, 1, 1, 1}, fixtures::grid_cell()), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(1, {3}, fixtures::grid_cell(), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(2, {2, 2}, ancnet::cell::CellSpec::standard(5)),
                  std::invalid_argument);
  CHECK_NOTHROW(build_lattice(1, {1}, ancnet::cell::CellSpec::standard(5)));
}

TEST_CASE("removing links") {
  const auto g = fixtures::grid(3, 1);
  const auto cut = remove_links(g, {{1, 2}});
  CHECK(cut.links().size() == 1);
  CHECK(cut.link_between(1, 2) == nullptr);
  CHECK_THROWS_AS(remove_links(g, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(shortest_path(cut, 0, 2), std::runtime_error);
}

TEST_CASE("frequency map examples") {
  const auto single = build_lattice(1, {1}, ancnet::cell::CellSpec::standard(7));
  const auto f1 = assign_frequencies(single, 1);
  std::set<int> labels;
  for (int i = 1; i <= 7; ++i) labels.insert(f1.label(0, i));
  CHECK(labels.size() == 7);
  CHECK_THROWS_AS(f1.label(0, 0), std::out_of_range);
  CHECK_THROWS_AS(f1.label(0, 8), std::out_of_range);
  CHECK_THROWS_AS(assign_frequencies(single, 0), std::invalid_argument);

  const auto small = assign_frequencies(fixtures::grid(6, 6), 1);
  const auto large = assign_frequencies(fixtures::grid(12, 12), 1);
  CHECK(small.ancilla_label_count() == large.ancilla_label_count());
  CHECK(large.colors() == 4);

  const auto g = fixtures::grid(4, 4);
  const auto wide = assign_frequencies(g, 3);
  CHECK(wide.colors() == 16);
}

TEST_CASE("frequency map has no conflicts within the spot radius") {
  for (int w = 1; w <= 8; ++w) {
    for (int h = 1; h <= 8; ++h) {
      const auto g = fixtures::grid(w, h);
      for (int radius : {1, 2}) {
        const auto f = assign_frequencies(g, radius);
        bool ok = true;
        for (std::size_t a = 0; a < g.site_count(); ++a) {
          std::set<int> own;
          for (int i = 1; i <= 9; ++i) own.insert(f.label(a, i));
          own.insert(f.shelf_label(a));
          ok = ok && own.size() == 10;
          for (std::size_t b = a + 1; b < g.site_count(); ++b) {
            if (g.chebyshev(a, b) > radius) continue;
            for (int i = 1; i <= 9; ++i)
              for (int j = 1; j <= 9; ++j) ok = ok && f.label(a, i) != f.label(b, j);
            ok = ok && f.shelf_label(a) != f.shelf_label(b);
          }
        }
        CHECK_MESSAGE(ok, w << "x" << h << " radius " << radius);
      }
    }
  }
}

TEST_CASE("routing matches breadth-first distance") {
  for (int w = 1; w <= 6; ++w) {
    for (int h = 1; h <= 6; ++h) {
      const auto g = fixtures::grid(w, h);
      bool ok = true;
      for (std::size_t a = 0; a < g.site_count(); ++a) {
        const auto dist = fixtures::bfs_distances(g, a);
        for (std::size_t b = 0; b < g.site_count(); ++b) {
          if (a == b) continue;
          const auto chain = route_swap_chain(g, a, b);
          ok = ok && chain.chain_length() == static_cast<std::size_t>(dist[b] - 1);
          ok = ok && chain.step_count() == static_cast<std::size_t>(2 * (dist[b] - 1) + 1);
          ok = ok && chain.path.front() == a && chain.path.back() == b;
          for (std::size_t k = 0; k + 1 < chain.path.size(); ++k)
            ok = ok && g.link_between(chain.path[k], chain.path[k + 1]) != nullptr;
          ok = ok && chain.interaction.second == b;
        }
      }
      CHECK_MESSAGE(ok, w << "x" << h);
    }
  }
  const auto g = fixtures::grid(3, 3);
  CHECK(route_swap_chain(g, 0, 1).chain_length() == 0);
  const auto two = route_swap_chain(g, g.site({0, 0}), g.site({2, 0}));
  CHECK(two.chain_length() == 1);
  CHECK(two.restore.size() == 1);
  CHECK(two.forward[0] == SitePair{g.site({0, 0}), g.site({1, 0})});
  CHECK_THROWS_AS(route_swap_chain(g, 2, 2), std::invalid_argument);
}

TEST_CASE("circuit parsing") {
  const auto c = circuit("# header\nQUBITS 3\nRX q0 0.5\n\nCNOT q1 q2 # trailing\nMEASURE q2\n");
  CHECK(c.qubits == 3);
  CHECK(c.instructions.size() == 1 + 7 + 1);
  CHECK(c.lines.front() == 3);
  CHECK(c.lines.back() == 6);
  const auto again = parse_circuit(format_circuit(c));
  CHECK(format_circuit(again) == format_circuit(c));
  CHECK(parse_circuit("RX q4 1.0").qubits == 5);
  CHECK(parse_circuit("").instructions.empty());
  try {
    parse_circuit("QUBITS 2\nRX q0 1\nRX q2 1\n");
    FAIL("expected a parse error");
  } catch (const ancnet::ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_circuit("RX q0 1\nQUBITS 2"), ancnet::ParseError);
  CHECK_THROWS_AS(parse_circuit("QUBITS 0"), ancnet::ParseError);
  CHECK_THROWS_AS(parse_circuit("QUBITS 2\nSWAP q0 q0 1"), ancnet::ParseError);
}

TEST_CASE("compile lowering shapes") {
  const auto g = fixtures::grid(3, 3);
  const auto rx = compile_circuit(circuit("RX q0 1.0"), g, {4});
  CHECK(kinds(rx) == std::vector<EventKind>{EventKind::kPiPulse, EventKind::kRotationWindow,
                                            EventKind::kPiPulse, EventKind::kDampingWindow});
  CHECK(rx.events[0].ancilla == 2);
  CHECK(rx.events[1].duration == doctest::Approx(1.0));
  CHECK(rx.events[3].duration == doctest::Approx(1.0));

  const auto ph = compile_circuit(circuit("PHASE q0 0.5"), g, {0});
  CHECK(ph.events[0].ancilla == 1);
  CHECK(ph.events[1].kind == EventKind::kPhaseWindow);

  const auto sw = compile_circuit(circuit("SWAP q0 q1 1.5707963267948966"), g, {0, 1});
  REQUIRE(sw.events.size() == 7);
  CHECK(sw.events[0].start_time == sw.events[1].start_time);
  CHECK(sw.events[0].cell != sw.events[1].cell);
  CHECK(sw.events[2].kind == EventKind::kGatingWindow);
  CHECK(sw.events[2].duration == doctest::Approx(kPi));
  CHECK(sw.events[3].start_time == sw.events[4].start_time);
  CHECK(sw.events[5].kind == EventKind::kDampingWindow);
  CHECK(sw.events[6].kind == EventKind::kDampingWindow);

  const auto empty = compile_circuit(circuit("QUBITS 2"), g, {0, 1});
  CHECK(empty.events.empty());
  CHECK(empty.end_time() == 0.0);

  const auto meas = compile_circuit(circuit("MEASURE q0"), g, {0});
  CHECK(kinds(meas) == std::vector<EventKind>{EventKind::kPiPulse, EventKind::kPiPulse,
                                              EventKind::kReadout, EventKind::kPiPulse,
                                              EventKind::kPiPulse, EventKind::kDampingWindow});
  CHECK(meas.events[0].spin_up_only);
  CHECK(meas.events[1].source == 2);
  CHECK(meas.events[1].ancilla == 5);
}

TEST_CASE("compile routes remote gates") {
  const auto g = fixtures::grid(4, 4);
  for (std::size_t b = 1; b < g.site_count(); ++b) {
    const auto s = compile_circuit(circuit("SWAP q0 q1 0.3"), g, {0, b});
    const auto d = static_cast<std::size_t>(fixtures::bfs_distances(g, 0)[b]);
    CHECK(count_swaps(s, kPi / 2) == d - 1);
    CHECK(count_swaps(s, -kPi / 2) == d - 1);
    CHECK(find_violations(s, g).empty());
  }
}

TEST_CASE("compile errors") {
  const auto g = fixtures::grid(3, 3);
  CHECK_THROWS_AS(compile_circuit(circuit("RX q1 1"), g, {0}), ancnet::CompileError);
  CHECK_THROWS_AS(compile_circuit(circuit("SWAP q0 q1 1"), g, {0, 0}), ancnet::CompileError);
  CHECK_THROWS_AS(compile_circuit(circuit("RX q0 1"), g, {9}), ancnet::CompileError);
  CompileOptions par;
  par.mode = ScheduleMode::kParallel;
  CHECK_THROWS_AS(compile_circuit(circuit("RX q0 1"), g, {0}, par), ancnet::CompileError);
  CompileOptions bad_timing;
  bad_timing.timing.exchange_j = 0.0;
  CHECK_THROWS_AS(compile_circuit(circuit("RX q0 1"), g, {0}, bad_timing), ancnet::CompileError);

  const auto split = remove_links(fixtures::chain(3), {{1, 2}});
  try {
    compile_circuit(circuit("RX q0 1\nSWAP q0 q1 0.5"), split, {0, 2});
    FAIL("expected a routing error");
  } catch (const ancnet::RoutingError& e) {
    CHECK(e.instruction() == 1);
    CHECK(e.exit_code() == ancnet::ExitCode::kRouting);
  }
}

TEST_CASE("validator accepts compiler output") {
  const auto g = fixtures::grid(3, 3);
  const auto c = circuit(
      "QUBITS 4\nRX q0 0.3\nCNOT q0 q1\nPHASE q2 2\nSWAP q1 q3 0.2\nRY q3 -1\nMEASURE q0\n"
      "MEASURE q3\n");
  for (double pulse : {0.0, 0.05}) {
    CompileOptions opt;
    opt.timing.pi_pulse_duration = pulse;
    const auto s = compile_circuit(c, g, {0, 1, 4, 8}, opt);
    const auto v = find_violations(s, g);
    CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v[0].message));
    CHECK_NOTHROW(validate_schedule(s, g));
  }
}

TEST_CASE("validator flags broken schedules") {
  const auto g = fixtures::grid(3, 3);
  const auto base = compile_circuit(circuit("RX q0 1.0"), g, {0});
  auto no_deact = base;
  no_deact.events.erase(no_deact.events.begin() + 2);
  CHECK_FALSE(find_violations(no_deact, g).empty());
  CHECK_THROWS_AS(validate_schedule(no_deact, g), ancnet::InvariantError);

  auto wrong_window = base;
  wrong_window.events[1].duration = 0.5;
  CHECK_FALSE(find_violations(wrong_window, g).empty());

  auto unlabeled = base;
  unlabeled.events[0].frequency_label.reset();
  CHECK_FALSE(find_violations(unlabeled, g).empty());

  auto no_damping = base;
  no_damping.events.pop_back();
  CHECK_FALSE(find_violations(no_damping, g).empty());
}

TEST_CASE("duty ratios") {
  const auto g = fixtures::grid(3, 3);
  const auto one = compile_circuit(circuit("RX q0 1.0"), g, {0});
  const auto r1 = duty_ratio_report(one, 10.0);
  CHECK(r1.mean_ratio() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r1.cells[0].effective_coherence_time == doctest::Approx(10.0));

  for (int n : {2, 4, 9}) {
    std::string text = "QUBITS " + std::to_string(n) + "\n";
    for (int round = 0; round < 3; ++round)
      for (int q = 0; q < n; ++q) text += "RZ q" + std::to_string(q) + " 0.7\n";
    const auto s = compile_circuit(circuit(text), g, identity_placement(n));
    const auto r = duty_ratio_report(s);
    CHECK(r.qubit_count == static_cast<std::size_t>(n));
    for (const auto& c : r.cells) {
      CHECK(c.duty_ratio == doctest::Approx(1.0 / n).epsilon(1e-12));
      CHECK(std::isinf(c.effective_coherence_time));
    }
  }

  const auto empty = duty_ratio_report(compile_circuit(circuit("QUBITS 2"), g, {0, 1}));
  CHECK(empty.total_time == 0.0);
  for (const auto& c : empty.cells) CHECK(c.duty_ratio == 0.0);
}

TEST_CASE("noiseless bell pair matches the direct oracle") {
  const auto g = fixtures::grid(3, 3);
  const auto c = circuit("QUBITS 2\nRY q0 1.5707963267948966\nCNOT q0 q1\n");
  const auto s = compile_circuit(c, g, {0, 1});
  const auto res = simulate_schedule(s, g, zeros(2), {}, 1);
  REQUIRE(res.qubit_state.has_value());
  V bell = V::Zero(4);
  bell(0) = bell(3) = std::sqrt(0.5);
  CHECK(fixtures::overlap_fidelity(bell, *res.qubit_state) >= 1 - 1e-8);
  CHECK(res.ancilla_excitation < 1e-12);
  CHECK(res.fidelity == doctest::Approx(1.0));
}

TEST_CASE("measurement schedules") {
  const auto g = fixtures::grid(3, 3);
  const auto s = compile_circuit(circuit("MEASURE q0"), g, {0});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto res = simulate_schedule(s, g, {Ket::basis(2, 1)}, {}, seed);
    REQUIRE(res.measurements.size() == 1);
    CHECK(res.measurements[0].outcome == 1);
    CHECK(res.measurements[0].p1 == doctest::Approx(1.0));
  }
  const auto bell =
      compile_circuit(circuit("QUBITS 2\nRY q0 1.5707963267948966\nCNOT q0 q1\nMEASURE q0\n"
                              "MEASURE q1\n"),
                      g, {0, 1});
  const auto t = run_trials(bell, g, zeros(2), {}, 5, 2000);
  CHECK(t.measured_qubits == std::vector<int>{0, 1});
  const std::size_t n00 = t.histogram.count("00") ? t.histogram.at("00") : 0;
  const std::size_t n11 = t.histogram.count("11") ? t.histogram.at("11") : 0;
  CHECK(n00 + n11 == 2000);
  CHECK(std::abs(n00 / 2000.0 - 0.5) <= 3 * std::sqrt(0.25 / 2000));
  const auto again = run_trials(bell, g, zeros(2), {}, 5, 2000);
  CHECK(again.histogram == t.histogram);
}

TEST_CASE("noisy simulation limits") {
  const auto g = fixtures::grid(3, 3);
  const auto s = compile_circuit(circuit("QUBITS 2\nRX q0 0.9\nSWAP q0 q1 0.7\nRZ q1 0.4\n"), g,
                                 {0, 1});
  const auto clean = simulate_schedule(s, g, zeros(2), {}, 3);
  SimulationOptions inf;
  inf.noise = NoiseModel{};
  const auto limit = simulate_schedule(s, g, zeros(2), inf, 3);
  CHECK(oracle::max_abs(limit.qubit_rho - clean.qubit_rho) <= 1e-8);
  CHECK(limit.fidelity == doctest::Approx(1.0).epsilon(1e-8));

  SimulationOptions noisy;
  noisy.noise = NoiseModel{.tau_a = 5.0, .dt = 1e-3};
  const auto lossy = simulate_schedule(s, g, zeros(2), noisy, 3);
  CHECK(lossy.fidelity < 0.999);
  CHECK(lossy.fidelity > 0.5);
  CHECK(std::abs(lossy.qubit_rho.trace().real() - 1.0) < 1e-8);
  CHECK(lossy.stats.min_eigenvalue >= -1e-8);

  SimulationOptions bad;
  bad.noise = NoiseModel{.tau_a = -1.0};
  CHECK_THROWS(simulate_schedule(s, g, zeros(2), bad, 3));
  CHECK_THROWS(simulate_schedule(s, g, zeros(1), {}, 3));
  auto broken = s;
  broken.events.pop_back();
  CHECK_THROWS_AS(simulate_schedule(broken, g, zeros(2), {}, 3), ancnet::InvariantError);
}

TEST_CASE("schedule JSON round trip") {
  const auto g = fixtures::grid(3, 3);
  CompileOptions opt;
  opt.timing.pi_pulse_duration = 0.01;
  opt.timing.exchange_j = 1.3;
  const auto s = compile_circuit(
      circuit("QUBITS 3\nRX q0 0.1234567890123\nCNOT q0 q2\nPHASE q1 -2\nMEASURE q2\n"), g,
      {0, 4, 8}, opt);
  const auto text = schedule_to_json(s);
  CHECK(text.find("\"start_time\"") != std::string::npos);
  CHECK(text.find("\"frequency_label\"") != std::string::npos);
  const auto back = schedule_from_json(text);
  CHECK(schedule_to_json(back) == text);
  REQUIRE(back.events.size() == s.events.size());
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    CHECK(back.events[i].start_time == s.events[i].start_time);
    CHECK(back.events[i].duration == s.events[i].duration);
    CHECK(back.events[i].theta == s.events[i].theta);
    CHECK(back.events[i].kind == s.events[i].kind);
    CHECK(back.events[i].partner == s.events[i].partner);
  }
  CHECK(back.placement == s.placement);
  CHECK(back.timing.exchange_j == 1.3);
  CHECK(find_violations(back, g).empty());
  CHECK_THROWS_AS(schedule_from_json("{}"), ancnet::ParseError);
  CHECK_THROWS_AS(schedule_from_json("not json"), ancnet::ParseError);
}

TEST_CASE("topology JSON") {
  const std::string text = R"({
    "dimension": 2, "extents": [3, 2],
    "cell_template": {"m": 9, "energies": [0,1,2,3,4,5,6,7,8,9],
      "roles": {"1": "phase", "2": "rot_x", "3": "rot_y", "4": "rot_z", "5": "measure",
                "6": "port", "7": "port", "8": "port", "9": "port"}},
    "spot_radius": 2,
    "timing": {"exchange_j": 2.0},
    "missing_links": [[[0, 0], [1, 0]]]
  })";
  const auto cfg = topology_from_json(text);
  CHECK(cfg.spot_radius == 2);
  CHECK(cfg.timing.exchange_j == 2.0);
  CHECK(cfg.topology.links().size() == 7 - 1);
  CHECK(cfg.topology.link_between(0, 1) == nullptr);
  const auto placement = placement_from_json("[[0,0],[2,1]]", cfg.topology);
  CHECK(placement == std::vector<std::size_t>{0, 5});
  CHECK_THROWS_AS(placement_from_json("[[3,0]]", cfg.topology), ancnet::ParseError);
  CHECK_THROWS_AS(placement_from_json("{}", cfg.topology), ancnet::ParseError);
  CHECK_THROWS_AS(topology_from_json("{\"dimension\": 2}"), ancnet::ParseError);
  CHECK_THROWS_AS(topology_from_json(R"({"dimension": 1, "extents": [2],
      "cell_template": {"m": 2, "energies": [0, 1, 2], "roles": {"1": "wizard"}}})"),
                  ancnet::ParseError);
}
