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

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ancnet/gates/gates.hpp"

namespace ancnet::network {

enum class EventKind {
  kPiPulse,
  kGatingWindow,
  kRotationWindow,
  kPhaseWindow,
  kDampingWindow,
  kReadout,
};

std::string_view to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(std::string_view name);

// One timed event. `ancilla` is the level the event concerns: the target
// level of a pi-pulse, the excited level during a window, the readout level.
struct Event {
  double start_time = 0.0;
  double duration = 0.0;
  EventKind kind = EventKind::kPiPulse;
  std::size_t cell = 0;
  int ancilla = 0;
  double theta = 0.0;
  double phi = 0.0;
  std::optional<int> frequency_label;  // optical events only

  // Pulses: lower level of the transition (0 for activation lines) and
  // whether only the spin-up branch is driven.
  int source = 0;
  bool spin_up_only = false;
  // Gating windows: the second cell and its port level.
  std::optional<std::size_t> partner;
  int partner_ancilla = 0;
  // Rotation windows.
  gates::Axis axis = gates::Axis::kX;

  double end_time() const noexcept { return start_time + duration; }
};

enum class ScheduleMode { kSerial, kParallel };

struct TimingModel {
  double exchange_j = 1.0;
  double rotation_rate = 1.0;
  double phase_rate = 1.0;
  double pi_pulse_duration = 0.0;
  double readout_duration = 1.0;

  void validate() const;  // throws std::invalid_argument
};

struct PulseSchedule {
  ScheduleMode mode = ScheduleMode::kSerial;
  int qubits = 0;
  std::vector<std::size_t> placement;  // qubit -> site
  int spot_radius = 1;
  TimingModel timing;
  std::vector<Event> events;

  double end_time() const;
};

}  // namespace ancnet::network
