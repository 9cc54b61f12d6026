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

#include "ancnet/network/compiler.hpp"

#include <algorithm>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "ancnet/common/error.hpp"
#include "ancnet/network/routing.hpp"

namespace ancnet::network {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

int axis_level(gates::Axis axis) {
  switch (axis) {
    case gates::Axis::kX: return cell::kRotXLevel;
    case gates::Axis::kY: return cell::kRotYLevel;
    case gates::Axis::kZ: return cell::kRotZLevel;
  }
  return -1;
}

class Emitter {
 public:
  Emitter(const LatticeTopology& topo, const FrequencyMap& freq, const TimingModel& timing)
      : topo_(topo), freq_(freq), timing_(timing) {}

  void emit(const SiteOp& op) {
    std::visit(Overloaded{
                   [&](const gates::Rotation& r) {
                     local(op, axis_level(r.axis), EventKind::kRotationWindow,
                           gates::rotation_time_for_angle(timing_.rotation_rate, r.theta), r.theta,
                           0.0, r.axis);
                   },
                   [&](const gates::Phase& p) {
                     local(op, cell::kPhaseLevel, EventKind::kPhaseWindow,
                           gates::phase_time_for_angle(timing_.phase_rate, p.phi), 0.0, p.phi,
                           gates::Axis::kZ);
                   },
                   [&](const gates::Swap& s) { gating(op, s.theta); },
                   [&](const gates::Measure&) { measure(op); },
                   [&](const gates::PiPulse&) {
                     throw CompileError("bare pi-pulses are not circuit instructions", op.instruction);
                   },
               },
               op.gate);
  }

  std::vector<Event> take() {
    std::stable_sort(events_.begin(), events_.end(),
                     [](const Event& a, const Event& b) { return a.start_time < b.start_time; });
    // Cut each damping window at the next activation of its cell.
    for (std::size_t i = 0; i < events_.size(); ++i) {
      Event& d = events_[i];
      if (d.kind != EventKind::kDampingWindow) continue;
      for (std::size_t j = i + 1; j < events_.size(); ++j) {
        const Event& e = events_[j];
        if (e.kind == EventKind::kPiPulse && e.cell == d.cell && e.source == 0) {
          d.duration = std::clamp(e.start_time - d.start_time, 0.0, d.duration);
          break;
        }
      }
    }
    return std::move(events_);
  }

 private:
  void require_level(const SiteOp& op, std::size_t site, int level) const {
    if (!topo_.cell(site).has_level(level)) {
      throw CompileError(fmt::format("cell {} has no ancilla {}", site, level), op.instruction);
    }
  }

  Event pulse(std::size_t site, int source, int target, double t, bool up_only) const {
    Event e;
    e.kind = EventKind::kPiPulse;
    e.start_time = t;
    e.duration = timing_.pi_pulse_duration;
    e.cell = site;
    e.ancilla = target;
    e.source = source;
    e.spin_up_only = up_only;
    e.frequency_label = freq_.line_label(site, source, target);
    return e;
  }

  Event damping(std::size_t site, int level, double t, double duration) const {
    Event e;
    e.kind = EventKind::kDampingWindow;
    e.start_time = t;
    e.duration = duration;
    e.cell = site;
    e.ancilla = level;
    return e;
  }

  void local(const SiteOp& op, int level, EventKind kind, double window, double theta, double phi,
             gates::Axis axis) {
    const std::size_t c = op.sites[0];
    require_level(op, c, level);
    const double p = timing_.pi_pulse_duration;
    events_.push_back(pulse(c, 0, level, now_, false));
    Event w;
    w.kind = kind;
    w.start_time = now_ + p;
    w.duration = window;
    w.cell = c;
    w.ancilla = level;
    w.theta = theta;
    w.phi = phi;
    w.axis = axis;
    events_.push_back(w);
    events_.push_back(pulse(c, 0, level, now_ + p + window, false));
    now_ += 2 * p + window;
    events_.push_back(damping(c, level, now_, window));
  }

  void gating(const SiteOp& op, double theta) {
    const std::size_t a = op.sites[0];
    const std::size_t b = op.sites[1];
    const Link* link = topo_.link_between(a, b);
    if (!link) throw RoutingError(fmt::format("cells {} and {} are not linked", a, b), op.instruction);
    const int pa = link->a == a ? link->port_a : link->port_b;
    const int pb = link->a == a ? link->port_b : link->port_a;
    const double p = timing_.pi_pulse_duration;
    const double window = gates::swap_time_for_angle(timing_.exchange_j, theta);
    events_.push_back(pulse(a, 0, pa, now_, false));
    events_.push_back(pulse(b, 0, pb, now_, false));
    Event w;
    w.kind = EventKind::kGatingWindow;
    w.start_time = now_ + p;
    w.duration = window;
    w.cell = a;
    w.ancilla = pa;
    w.partner = b;
    w.partner_ancilla = pb;
    w.theta = theta;
    events_.push_back(w);
    events_.push_back(pulse(a, 0, pa, now_ + p + window, false));
    events_.push_back(pulse(b, 0, pb, now_ + p + window, false));
    now_ += 2 * p + window;
    events_.push_back(damping(a, pa, now_, window));
    events_.push_back(damping(b, pb, now_, window));
  }

  void measure(const SiteOp& op) {
    const std::size_t c = op.sites[0];
    require_level(op, c, cell::kRotXLevel);
    require_level(op, c, cell::kMeasureLevel);
    const double p = timing_.pi_pulse_duration;
    const double r = timing_.readout_duration;
    events_.push_back(pulse(c, 0, cell::kRotXLevel, now_, true));
    events_.push_back(pulse(c, cell::kRotXLevel, cell::kMeasureLevel, now_ + p, true));
    Event e;
    e.kind = EventKind::kReadout;
    e.start_time = now_ + 2 * p;
    e.duration = r;
    e.cell = c;
    e.ancilla = cell::kMeasureLevel;
    events_.push_back(e);
    events_.push_back(pulse(c, cell::kRotXLevel, cell::kMeasureLevel, now_ + 2 * p + r, true));
    events_.push_back(pulse(c, 0, cell::kRotXLevel, now_ + 3 * p + r, true));
    now_ += 4 * p + r;
    events_.push_back(damping(c, cell::kRotXLevel, now_, r));
  }

  const LatticeTopology& topo_;
  const FrequencyMap& freq_;
  const TimingModel& timing_;
  double now_ = 0.0;
  std::vector<Event> events_;
};

void check_placement(const Circuit& circuit, const LatticeTopology& topo,
                     const std::vector<std::size_t>& placement) {
  if (static_cast<int>(placement.size()) != circuit.qubits) {
    throw CompileError(fmt::format("placement lists {} sites for {} qubits", placement.size(),
                                   circuit.qubits),
                       0);
  }
  std::set<std::size_t> seen;
  for (std::size_t s : placement) {
    if (s >= topo.site_count()) throw CompileError("placement site outside the lattice", 0);
    if (!seen.insert(s).second) throw CompileError("placement is not injective", 0);
  }
}

}  // namespace

std::vector<SiteOp> lower_to_sites(const Circuit& circuit, const LatticeTopology& topo,
                                   const std::vector<std::size_t>& placement) {
  check_placement(circuit, topo, placement);
  std::vector<SiteOp> ops;
  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    const auto& ins = circuit.instructions[i];
    if (static_cast<int>(ins.qubits.size()) != gates::arity(ins.gate)) {
      throw CompileError("wrong number of targets", i);
    }
    std::vector<std::size_t> sites;
    for (int q : ins.qubits) {
      if (q < 0 || q >= circuit.qubits) throw CompileError(fmt::format("qubit q{} out of range", q), i);
      sites.push_back(placement[q]);
    }
    if (sites.size() == 2 && sites[0] == sites[1]) throw CompileError("repeated target", i);
    const auto* swap = std::get_if<gates::Swap>(&ins.gate);
    if (!swap || topo.link_between(sites[0], sites[1])) {
      ops.push_back({ins.gate, std::move(sites), i});
      continue;
    }
    SwapChain chain;
    try {
      chain = route_swap_chain(topo, sites[0], sites[1]);
    } catch (const std::exception& e) {
      throw RoutingError(e.what(), i);
    }
    constexpr double half_pi = std::numbers::pi / 2;
    for (const auto& [a, b] : chain.forward) ops.push_back({gates::Swap{half_pi}, {a, b}, i});
    ops.push_back({ins.gate, {chain.interaction.first, chain.interaction.second}, i});
    for (const auto& [a, b] : chain.restore) ops.push_back({gates::Swap{-half_pi}, {a, b}, i});
  }
  return ops;
}

PulseSchedule compile_circuit(const Circuit& circuit, const LatticeTopology& topo,
                              const std::vector<std::size_t>& placement,
                              const CompileOptions& options) {
  if (options.mode != ScheduleMode::kSerial) {
    throw CompileError("only serial scheduling is implemented", 0);
  }
  try {
    options.timing.validate();
  } catch (const std::invalid_argument& e) {
    throw CompileError(e.what(), 0);
  }
  const auto ops = lower_to_sites(circuit, topo, placement);
  const FrequencyMap freq = assign_frequencies(topo, options.spot_radius);
  Emitter em(topo, freq, options.timing);
  for (const auto& op : ops) em.emit(op);

  PulseSchedule s;
  s.mode = options.mode;
  s.qubits = circuit.qubits;
  s.placement = placement;
  s.spot_radius = options.spot_radius;
  s.timing = options.timing;
  s.events = em.take();
  return s;
}

}  // namespace ancnet::network
