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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ancnet/core/operator.hpp"
#include "ancnet/decoherence/master_equation.hpp"
#include "ancnet/network/lattice.hpp"
#include "ancnet/network/schedule.hpp"

namespace ancnet::network {

struct NoiseModel {
  double tau_a = decoherence::kInfiniteTime;
  double dt = 1e-3;  // largest RK4 step
};

struct SimulationOptions {
  std::optional<NoiseModel> noise;
};

struct CellMeasurement {
  std::size_t event;
  std::size_t cell;
  int qubit;  // -1 when the cell holds no placed qubit
  int outcome;
  double p0;
  double p1;
};

inline constexpr core::Index kNoisyDimensionCap = 2048;

struct SimulationResult {
  // Register order: placed qubits, then other touched cells by site index.
  std::vector<std::size_t> register_cells;
  // Qubit register state with every ancilla traced out (2^n x 2^n).
  core::Matrix qubit_rho;
  // Noiseless runs: the qubit register vector in the all-sleeping sector.
  std::optional<core::Vector> qubit_state;
  std::vector<CellMeasurement> measurements;
  // <psi|rho|psi> against the noiseless run with the same seed.
  double fidelity = 1.0;
  // Weight left on excited ancillas at the end.
  double ancilla_excitation = 0.0;
  decoherence::IntegrationStats stats;
};

// Validates the schedule (InvariantError), then runs it. `initial` holds one
// 2-dim ket per placed qubit, or is empty for all |0>. Unplaced cells start
// in |0>. Each cell keeps only the ancilla levels the schedule uses.
SimulationResult simulate_schedule(const PulseSchedule& schedule, const LatticeTopology& topology,
                                   const std::vector<core::Ket>& initial,
                                   const SimulationOptions& options, std::uint64_t seed);

struct TrialSummary {
  std::vector<int> measured_qubits;  // ascending
  // Key: one character per measured qubit (last outcome), e.g. "01".
  std::map<std::string, std::size_t> histogram;
  double mean_fidelity = 1.0;
};

// Trial i uses derive_seed(seed, i).
TrialSummary run_trials(const PulseSchedule& schedule, const LatticeTopology& topology,
                        const std::vector<core::Ket>& initial, const SimulationOptions& options,
                        std::uint64_t seed, std::size_t trials);

}  // namespace ancnet::network
