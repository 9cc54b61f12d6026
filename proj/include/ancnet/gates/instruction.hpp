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
#include <string_view>
#include <variant>
#include <vector>

#include "ancnet/core/operator.hpp"
#include "ancnet/gates/gates.hpp"

namespace ancnet::gates {

struct PiPulse {
  int level;
};
struct Swap {
  double theta;
};
struct Rotation {
  Axis axis;
  double theta;
};
struct Phase {
  double phi;
};
struct Measure {};

using GateKind = std::variant<PiPulse, Swap, Rotation, Phase, Measure>;

struct Instruction {
  GateKind gate;
  std::vector<int> qubits;
};

int arity(const GateKind& gate);

// Canonical text: "RX q3 1.5707963267948966", "SWAP q0 q1 0.785...",
// "PHASE q2 phi", "MEASURE q1", "PI q0 2". Angles use %.17g.
std::string to_text(const Instruction& instruction);

// Parses one non-empty line. CNOT expands to its native sequence, so a line
// can produce several instructions. Throws ParseError.
std::vector<Instruction> parse_line(std::string_view line, std::size_t line_number = 0);

// Native sequence equal to CNOT(control -> target) up to a global phase
// e^{-3 i pi / 4}. Uses two swap_unitary(pi/4) windows.
std::vector<Instruction> cnot_from_sqrt_swap(int control, int target);

// Product of a two-qubit program on qubits {0, 1} (qubit 0 slow), in time
// order. Measurement and pulses are rejected.
core::ComplexOperator two_qubit_matrix(const std::vector<Instruction>& program);

}  // namespace ancnet::gates
