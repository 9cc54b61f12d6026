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
#include <vector>

#include "ancnet/gates/instruction.hpp"

namespace ancnet::network {

struct Circuit {
  int qubits = 0;
  std::vector<gates::Instruction> instructions;
  // Source line of each instruction (0 when built in code).
  std::vector<std::size_t> lines;

  // Throws ParseError for targets out of range or repeated targets.
  void validate() const;
};

// Text format: one instruction per line, '#' starts a comment, optional
// "QUBITS n" header. Without the header the qubit count is the largest index
// plus one. Throws ParseError with the offending line number.
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit& circuit);

}  // namespace ancnet::network
