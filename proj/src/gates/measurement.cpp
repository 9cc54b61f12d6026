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

#include "ancnet/gates/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ancnet/gates/gates.hpp"

namespace ancnet::gates {

namespace {

constexpr double kSupportTolerance = 1e-12;

void require_levels(const cell::CellSpec& spec) {
  if (!spec.has_level(kShelfLevel) || !spec.has_level(kReadoutLevel)) {
    throw std::invalid_argument("measurement needs ancilla levels 2 and 5");
  }
}

cell::CellState apply(const cell::CellState& s, const core::ComplexOperator& u) {
  core::Matrix r = u.matrix() * s.rho().matrix() * u.matrix().adjoint();
  r = 0.5 * (r + r.adjoint()).eval();
  return cell::CellState(s.spec(), core::DensityMatrix(std::move(r), s.rho().basis_labels()));
}

}  // namespace

core::ComplexOperator measurement_pi1(const cell::CellSpec& spec) {
  return transition_pulse(spec, cell::kSleepLevel, kShelfLevel, SpinSelect::kUp);
}

core::ComplexOperator measurement_pi2(const cell::CellSpec& spec) {
  return transition_pulse(spec, kShelfLevel, kReadoutLevel, SpinSelect::kUp);
}

MeasurementStages measurement_stages(const cell::CellState& state) {
  const auto& spec = state.spec();
  require_levels(spec);
  for (int i = 1; i <= spec.m(); ++i) {
    const double p = state.ancilla_population(i);
    if (p > kSupportTolerance) {
      throw std::invalid_argument("measurement entry state has weight " + std::to_string(p) +
                                  " on ancilla " + std::to_string(i));
    }
  }
  cell::CellState a = apply(state, measurement_pi1(spec));
  cell::CellState b = apply(a, measurement_pi2(spec));
  return {state, std::move(a), std::move(b)};
}

PreparedMeasurement::PreparedMeasurement(const cell::CellState& state)
    : stages_(measurement_stages(state)) {
  const auto& spec = state.spec();
  const double up = stages_.after_pi2.ancilla_population(kReadoutLevel);
  const double down = stages_.after_pi2.ancilla_population(cell::kSleepLevel);
  probabilities_ = {up / (up + down), down / (up + down)};

  // Projection onto the ancilla sector; off-sector coherence is dropped.
  const core::Matrix& r = stages_.after_pi2.rho().matrix();
  for (int outcome = 0; outcome < 2; ++outcome) {
    if (probabilities_[outcome] <= 0.0) continue;
    const int level = outcome == 0 ? kReadoutLevel : cell::kSleepLevel;
    core::Matrix c = core::Matrix::Zero(r.rows(), r.cols());
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        c(spec.index(a, level), spec.index(b, level)) = r(spec.index(a, level), spec.index(b, level));
      }
    }
    c /= c.trace().real();
    collapsed_[outcome].emplace(spec, core::DensityMatrix(std::move(c), state.rho().basis_labels()));
  }
}

MeasurementRecord PreparedMeasurement::sample(Rng& rng) const {
  const int outcome = rng.uniform() < probabilities_[0] ? 0 : 1;
  return {outcome, probabilities_, *collapsed_[outcome]};
}

MeasurementRecord measure_cell(const cell::CellState& state, Rng& rng) {
  return PreparedMeasurement(state).sample(rng);
}

}  // namespace ancnet::gates
