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
#include <string>
#include <vector>

#include "ancnet/network/frequency.hpp"
#include "ancnet/network/lattice.hpp"
#include "ancnet/network/schedule.hpp"

namespace ancnet::network {

struct Violation {
  std::size_t event;  // index into schedule.events, or events.size() for global issues
  std::string message;
};

// Independent re-check of every schedule invariant: field ranges, pulse
// pairing per cell, windows only while the right level is excited, damping
// after each deactivation, at most two active cells (serial mode) and no
// shared optical label between simultaneous events within the spot radius.
std::vector<Violation> find_violations(const PulseSchedule& schedule,
                                       const LatticeTopology& topology);

// Throws InvariantError carrying the first violation.
void validate_schedule(const PulseSchedule& schedule, const LatticeTopology& topology);

}  // namespace ancnet::network
