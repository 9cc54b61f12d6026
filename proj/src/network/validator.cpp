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

#include "ancnet/network/validator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "ancnet/common/error.hpp"

namespace ancnet::network {

namespace {

constexpr double kTimeTolerance = 1e-9;

bool same_time(double a, double b) {
  return std::abs(a - b) <= kTimeTolerance * std::max(1.0, std::abs(a));
}

int axis_level(gates::Axis axis) {
  switch (axis) {
    case gates::Axis::kX: return cell::kRotXLevel;
    case gates::Axis::kY: return cell::kRotYLevel;
    case gates::Axis::kZ: return cell::kRotZLevel;
  }
  return -1;
}

struct Line {
  int source;
  int target;
  bool spin_up_only;
  friend bool operator==(const Line&, const Line&) = default;
};

struct CellTrack {
  std::vector<Line> stack;
  double activated_at = 0.0;
  double busy_until = 0.0;
  double damping_end = 0.0;
  std::optional<double> pending_damping;  // deactivation time awaiting damping
};

class Checker {
 public:
  Checker(const PulseSchedule& s, const LatticeTopology& t)
      : s_(s), topo_(t), freq_(assign_frequencies(t, std::max(1, s.spot_radius))),
        cells_(t.site_count()) {}

  std::vector<Violation> run() {
    check_header();
    try {
      s_.timing.validate();
    } catch (const std::invalid_argument& e) {
      add(s_.events.size(), e.what());
      return std::move(out_);
    }
    for (std::size_t i = 0; i < s_.events.size(); ++i) {
      if (!check_fields(i)) continue;
      step(i);
    }
    finish();
    if (s_.mode == ScheduleMode::kSerial) check_active_count();
    check_labels();
    return std::move(out_);
  }

 private:
  void add(std::size_t i, std::string msg) { out_.push_back({i, std::move(msg)}); }

  void check_header() {
    if (s_.spot_radius < 1) add(s_.events.size(), "spot_radius must be >= 1");
    std::set<std::size_t> seen;
    for (std::size_t site : s_.placement) {
      if (site >= topo_.site_count()) add(s_.events.size(), "placement site outside the lattice");
      if (!seen.insert(site).second) add(s_.events.size(), "placement is not injective");
    }
  }

  bool level_ok(std::size_t cell, int level) const {
    return level == 0 || topo_.cell(cell).has_level(level);
  }

  bool check_fields(std::size_t i) {
    const Event& e = s_.events[i];
    const std::size_t before = out_.size();
    if (!std::isfinite(e.start_time) || e.start_time < 0.0) add(i, "start_time must be finite and >= 0");
    if (!std::isfinite(e.duration) || e.duration < 0.0) add(i, "duration must be finite and >= 0");
    if (i > 0 && e.start_time < s_.events[i - 1].start_time) add(i, "events are not ordered by start_time");
    if (e.cell >= topo_.site_count()) {
      add(i, "cell outside the lattice");
      return false;
    }
    if (!std::isfinite(e.theta) || !std::isfinite(e.phi)) add(i, "angles must be finite");
    if (!level_ok(e.cell, e.ancilla)) add(i, fmt::format("cell {} has no ancilla {}", e.cell, e.ancilla));
    const bool optical = e.kind == EventKind::kPiPulse;
    if (optical != e.frequency_label.has_value()) {
      add(i, optical ? "pi-pulse without frequency label" : "non-optical event carries a frequency label");
    }
    switch (e.kind) {
      case EventKind::kPiPulse:
        if (e.ancilla == e.source) add(i, "pi-pulse needs two distinct levels");
        if (e.ancilla == 0) add(i, "pi-pulse cannot target the sleeping level");
        if (!level_ok(e.cell, e.source)) add(i, "pi-pulse source level missing");
        if (out_.size() == before && e.frequency_label &&
            *e.frequency_label != freq_.line_label(e.cell, e.source, e.ancilla)) {
          add(i, fmt::format("frequency label {} does not match the map ({})", *e.frequency_label,
                             freq_.line_label(e.cell, e.source, e.ancilla)));
        }
        break;
      case EventKind::kRotationWindow:
        if (e.ancilla != axis_level(e.axis)) add(i, "rotation window on the wrong ancilla level");
        calibrated(i, gates::rotation_time_for_angle(s_.timing.rotation_rate, e.theta));
        break;
      case EventKind::kPhaseWindow:
        if (e.ancilla != cell::kPhaseLevel) add(i, "phase window on the wrong ancilla level");
        calibrated(i, gates::phase_time_for_angle(s_.timing.phase_rate, e.phi));
        break;
      case EventKind::kGatingWindow: {
        if (!e.partner || *e.partner >= topo_.site_count()) {
          add(i, "gating window without a valid partner cell");
          break;
        }
        const Link* l = topo_.link_between(e.cell, *e.partner);
        if (!l) {
          add(i, "gating window between cells that are not linked");
          break;
        }
        const int pa = l->a == e.cell ? l->port_a : l->port_b;
        const int pb = l->a == e.cell ? l->port_b : l->port_a;
        if (e.ancilla != pa || e.partner_ancilla != pb) add(i, "gating window uses the wrong ports");
        calibrated(i, gates::swap_time_for_angle(s_.timing.exchange_j, e.theta));
        break;
      }
      case EventKind::kReadout:
        if (e.ancilla != cell::kMeasureLevel) add(i, "readout must target ancilla 5");
        break;
      case EventKind::kDampingWindow:
        break;
    }
    return out_.size() == before;
  }

  // Window length must produce the recorded angle.
  void calibrated(std::size_t i, double expected) {
    const double d = s_.events[i].duration;
    if (std::isfinite(expected) && std::abs(d - expected) > kTimeTolerance * std::max(1.0, expected)) {
      add(i, fmt::format("window lasts {} but its angle needs {}", d, expected));
    }
  }

  bool excited_on(std::size_t cell, int level) const {
    const auto& st = cells_[cell].stack;
    return st.size() == 1 && st[0].source == 0 && st[0].target == level && !st[0].spin_up_only;
  }

  void occupy(std::size_t i, std::size_t cell, const Event& e) {
    auto& c = cells_[cell];
    if (e.start_time < c.busy_until && !same_time(e.start_time, c.busy_until)) {
      add(i, fmt::format("cell {} already has a window running", cell));
    }
    c.busy_until = std::max(c.busy_until, e.end_time());
  }

  void step(std::size_t i) {
    const Event& e = s_.events[i];
    auto& c = cells_[e.cell];
    switch (e.kind) {
      case EventKind::kPiPulse: {
        if (e.start_time < c.busy_until && !same_time(e.start_time, c.busy_until)) {
          add(i, "pi-pulse during a window on the same cell");
        }
        const Line line{e.source, e.ancilla, e.spin_up_only};
        if (!c.stack.empty() && c.stack.back() == line) {
          c.stack.pop_back();
          if (c.stack.empty()) {
            intervals_.push_back({c.activated_at, e.end_time(), e.cell});
            c.pending_damping = e.end_time();
          }
        } else if ((c.stack.empty() && e.source == 0) ||
                   (!c.stack.empty() && c.stack.back().target == e.source)) {
          if (c.stack.empty()) {
            if (c.pending_damping) add(i, "activation before the previous damping window");
            if (e.start_time < c.damping_end && !same_time(e.start_time, c.damping_end)) {
              add(i, "activation overlaps a damping window on the same cell");
            }
            c.activated_at = e.start_time;
          }
          c.stack.push_back(line);
        } else {
          add(i, fmt::format("pi-pulse {}->{} does not match the active line of cell {}", e.source,
                             e.ancilla, e.cell));
        }
        break;
      }
      case EventKind::kRotationWindow:
      case EventKind::kPhaseWindow:
        if (!excited_on(e.cell, e.ancilla)) add(i, "window while the required ancilla is not excited");
        occupy(i, e.cell, e);
        break;
      case EventKind::kGatingWindow:
        if (!excited_on(e.cell, e.ancilla) || !excited_on(*e.partner, e.partner_ancilla)) {
          add(i, "gating window while a port is not excited");
        }
        occupy(i, e.cell, e);
        occupy(i, *e.partner, e);
        break;
      case EventKind::kReadout: {
        const std::vector<Line> chain{{0, cell::kRotXLevel, true},
                                      {cell::kRotXLevel, cell::kMeasureLevel, true}};
        if (c.stack != chain) add(i, "readout without the spin-selective transfer to ancilla 5");
        occupy(i, e.cell, e);
        break;
      }
      case EventKind::kDampingWindow:
        if (!c.stack.empty()) {
          add(i, "damping window while the cell is active");
        } else if (!c.pending_damping || !same_time(*c.pending_damping, e.start_time)) {
          add(i, "damping window does not follow a deactivation");
        } else {
          c.pending_damping.reset();
          c.damping_end = e.end_time();
        }
        break;
    }
  }

  void finish() {
    for (std::size_t cell = 0; cell < cells_.size(); ++cell) {
      if (!cells_[cell].stack.empty()) {
        add(s_.events.size(), fmt::format("cell {} is never deactivated", cell));
      }
      if (cells_[cell].pending_damping) {
        add(s_.events.size(), fmt::format("cell {} lacks a damping window after deactivation", cell));
      }
    }
  }

  void check_active_count() {
    std::vector<std::tuple<double, int, std::size_t>> edges;
    for (const auto& iv : intervals_) {
      if (iv.end <= iv.start) continue;
      edges.emplace_back(iv.start, +1, iv.cell);
      // Intervals that touch within the time tolerance do not overlap.
      edges.emplace_back(iv.end - kTimeTolerance * std::max(1.0, std::abs(iv.end)), -1, iv.cell);
    }
    std::sort(edges.begin(), edges.end());
    int active = 0;
    for (const auto& [t, d, cell] : edges) {
      active += d;
      if (active > 2) {
        add(s_.events.size(), fmt::format("{} cells active at t={} (serial mode allows 2)", active, t));
        return;
      }
    }
  }

  void check_labels() {
    std::vector<std::size_t> optical;
    for (std::size_t i = 0; i < s_.events.size(); ++i) {
      const Event& e = s_.events[i];
      if (e.kind == EventKind::kPiPulse && e.frequency_label && e.cell < topo_.site_count()) {
        optical.push_back(i);
      }
    }
    for (std::size_t x = 0; x < optical.size(); ++x) {
      const Event& a = s_.events[optical[x]];
      for (std::size_t y = x + 1; y < optical.size(); ++y) {
        const Event& b = s_.events[optical[y]];
        if (b.start_time > a.end_time() && !same_time(b.start_time, a.start_time)) break;
        const bool simultaneous = same_time(a.start_time, b.start_time) ||
                                  std::max(a.start_time, b.start_time) < std::min(a.end_time(), b.end_time());
        // Pulses on one cell are ordered by the per-cell pairing check.
        if (!simultaneous || a.cell == b.cell || *a.frequency_label != *b.frequency_label) continue;
        if (topo_.chebyshev(a.cell, b.cell) <= s_.spot_radius) {
          add(optical[y], fmt::format("label {} reused by simultaneous events within the spot radius",
                                      *a.frequency_label));
        }
      }
    }
  }

  struct Interval {
    double start;
    double end;
    std::size_t cell;
  };

  const PulseSchedule& s_;
  const LatticeTopology& topo_;
  FrequencyMap freq_;
  std::vector<CellTrack> cells_;
  std::vector<Interval> intervals_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> find_violations(const PulseSchedule& schedule,
                                       const LatticeTopology& topology) {
  return Checker(schedule, topology).run();
}

void validate_schedule(const PulseSchedule& schedule, const LatticeTopology& topology) {
  const auto v = find_violations(schedule, topology);
  if (v.empty()) return;
  const std::string where =
      v[0].event < schedule.events.size() ? fmt::format("event {}: ", v[0].event) : std::string();
  throw InvariantError("invalid schedule: " + where + v[0].message +
                       (v.size() > 1 ? fmt::format(" (+{} more)", v.size() - 1) : std::string()));
}

}  // namespace ancnet::network
