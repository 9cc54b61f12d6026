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
#include <limits>
#include <vector>

#include "ancnet/network/schedule.hpp"

namespace ancnet::network {

struct CellDuty {
  std::size_t cell;
  double active_time;
  double duty_ratio;
  double effective_coherence_time;  // tau_a / R_d, infinite when R_d = 0
};

struct DutyReport {
  double total_time = 0.0;
  // Placed qubits first (in qubit order), then any other cell the schedule
  // touches, in site order.
  std::vector<CellDuty> cells;
  std::size_t qubit_count = 0;

  // Mean R_d over the placed qubits (over every listed cell when the
  // schedule carries no placement).
  double mean_ratio() const;
};

// Active time of a cell runs from its activation pulse to the end of the
// matching deactivation pulse. Total time is the end of the last active
// interval of any cell; trailing damping is passive and not counted.
DutyReport duty_ratio_report(const PulseSchedule& schedule,
                             double tau_a = std::numeric_limits<double>::infinity());

}  // namespace ancnet::network
