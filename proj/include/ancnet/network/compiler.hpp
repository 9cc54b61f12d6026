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
#include <vector>

#include "ancnet/network/circuit.hpp"
#include "ancnet/network/frequency.hpp"
#include "ancnet/network/lattice.hpp"
#include "ancnet/network/schedule.hpp"

namespace ancnet::network {

// One native operation on lattice sites. Remote two-qubit gates become their
// swap chain here; `instruction` is the circuit index it came from.
struct SiteOp {
  gates::GateKind gate;
  std::vector<std::size_t> sites;
  std::size_t instruction;
};

// Throws CompileError (bad placement or instruction) or RoutingError.
std::vector<SiteOp> lower_to_sites(const Circuit& circuit, const LatticeTopology& topology,
                                   const std::vector<std::size_t>& placement);

struct CompileOptions {
  int spot_radius = 1;
  TimingModel timing;
  ScheduleMode mode = ScheduleMode::kSerial;
};

// Lowers every operation to activation pulse(s), a window, deactivation
// pulse(s) and a damping window as long as the window; measurement becomes
// the two spin-selective transfers, readout and the reverse transfers.
// Operations run back to back; a damping window is cut short when its cell
// is activated again.
PulseSchedule compile_circuit(const Circuit& circuit, const LatticeTopology& topology,
                              const std::vector<std::size_t>& placement,
                              const CompileOptions& options = {});

}  // namespace ancnet::network
