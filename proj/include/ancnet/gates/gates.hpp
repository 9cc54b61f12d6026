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

#include "ancnet/cell/cell_spec.hpp"
#include "ancnet/core/operator.hpp"

namespace ancnet::gates {

using core::ComplexOperator;

enum class Axis { kX, kY, kZ };

char axis_letter(Axis axis);

// Exchange gate on the active pair, basis |w_a w_b> with w_a slow:
// identity on |00>, |11>; [[cos, -i sin], [-i sin, cos]] on {|01>, |10>}.
ComplexOperator swap_unitary(double theta);

// exp(-i theta sigma_axis / 2).
ComplexOperator rotation_unitary(Axis axis, double theta);

// diag(1, e^{i phi}) on the qubit, applied while the phase level is excited.
ComplexOperator phase_unitary(double phi);

// The optical pi-pulse on one ancilla transition in (ground, excited)
// ordering: |ground> -> |excited>, |excited> -> -|ground>. This is the
// [[0, 1], [-1, 0]] matrix written in (excited, ground) ordering.
ComplexOperator pi_pulse_matrix();

enum class SpinSelect { kBoth, kUp };

// pi-pulse between levels `source` and `target` of one cell, acting on the
// contracted space; kUp restricts it to the w = 0 (spin up) branch.
ComplexOperator transition_pulse(const cell::CellSpec& spec, int source, int target,
                                 SpinSelect spin = SpinSelect::kBoth);

// Activation pulse 0 <-> level for both qubit values. Throws
// std::out_of_range unless 1 <= level <= m.
ComplexOperator pi_pulse_unitary(const cell::CellSpec& spec, int level);

// Applies the 2x2 `qubit_gate` to w inside the ancilla `level` sector and
// identity everywhere else.
ComplexOperator conditioned_qubit_gate(const cell::CellSpec& spec, int level,
                                       const ComplexOperator& qubit_gate);

// --- Gating time calibration (hbar = 1) -----------------------------------

// Two-qubit exchange Hamiltonian whose {|01>,|10>} block is
// (J/4)[[-1, 2], [2, -1]], extended with -J/4 on |00> and |11>.
// exp(-i H t) = e^{iJt/4} swap_unitary(J t / 2).
ComplexOperator exchange_hamiltonian(double exchange_j);

// exchange_hamiltonian shifted by +J/4: exp(-i H t) = swap_unitary(J t / 2).
ComplexOperator swap_window_hamiltonian(double exchange_j);
ComplexOperator rotation_window_hamiltonian(Axis axis, double rate);
ComplexOperator phase_window_hamiltonian(double rate);

double swap_angle_for_time(double exchange_j, double t);
// Shortest non-negative window producing swap_unitary(theta) (period 2 pi).
double swap_time_for_angle(double exchange_j, double theta);
// Rotations have period 4 pi, phases 2 pi.
double rotation_time_for_angle(double rate, double theta);
double phase_time_for_angle(double rate, double phi);

}  // namespace ancnet::gates
