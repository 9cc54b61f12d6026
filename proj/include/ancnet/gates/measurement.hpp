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

#include <array>
#include <optional>

#include "ancnet/cell/cell_spec.hpp"
#include "ancnet/common/rng.hpp"
#include "ancnet/core/operator.hpp"

namespace ancnet::gates {

// Spin up is qubit value 0. Outcome bit 0 means the cell was found in
// ancilla 5, bit 1 means ancilla 0.
inline constexpr int kReadoutLevel = cell::kMeasureLevel;
inline constexpr int kShelfLevel = cell::kRotXLevel;

// Spin-selective 0 -> 2 transfer on the up branch.
core::ComplexOperator measurement_pi1(const cell::CellSpec& spec);
// 2 -> 5 transfer on the up branch.
core::ComplexOperator measurement_pi2(const cell::CellSpec& spec);

struct MeasurementStages {
  cell::CellState entry;
  cell::CellState after_pi1;
  cell::CellState after_pi2;
};

// Throws std::invalid_argument when the cell lacks levels 2 or 5 or the
// state has weight outside ancilla 0.
MeasurementStages measurement_stages(const cell::CellState& state);

struct MeasurementRecord {
  int outcome;
  std::array<double, 2> probabilities;  // (p0, p1) before readout
  cell::CellState collapsed_state;
};

// Stages a cell once and samples readouts from it. Both collapsed states
// are built up front, so repeated sampling costs one random draw each.
class PreparedMeasurement {
 public:
  explicit PreparedMeasurement(const cell::CellState& state);

  const MeasurementStages& stages() const noexcept { return stages_; }
  const std::array<double, 2>& probabilities() const noexcept { return probabilities_; }
  MeasurementRecord sample(Rng& rng) const;

 private:
  MeasurementStages stages_;
  std::array<double, 2> probabilities_;
  std::array<std::optional<cell::CellState>, 2> collapsed_;
};

MeasurementRecord measure_cell(const cell::CellState& state, Rng& rng);

}  // namespace ancnet::gates
