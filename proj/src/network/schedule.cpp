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

#include "ancnet/network/schedule.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace ancnet::network {

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 6> kNames{{
    {EventKind::kPiPulse, "pi_pulse"},
    {EventKind::kGatingWindow, "gating_window"},
    {EventKind::kRotationWindow, "rotation_window"},
    {EventKind::kPhaseWindow, "phase_window"},
    {EventKind::kDampingWindow, "damping_window"},
    {EventKind::kReadout, "readout"},
}};

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string_view to_string(EventKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<EventKind> event_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

void TimingModel::validate() const {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  require(positive(exchange_j), "timing: exchange_j must be positive");
  require(positive(rotation_rate), "timing: rotation_rate must be positive");
  require(positive(phase_rate), "timing: phase_rate must be positive");
  require(pi_pulse_duration >= 0.0 && std::isfinite(pi_pulse_duration),
          "timing: pi_pulse_duration must be >= 0");
  require(readout_duration >= 0.0 && std::isfinite(readout_duration),
          "timing: readout_duration must be >= 0");
}

double PulseSchedule::end_time() const {
  double t = 0.0;
  for (const auto& e : events) t = std::max(t, e.end_time());
  return t;
}

}  // namespace ancnet::network
