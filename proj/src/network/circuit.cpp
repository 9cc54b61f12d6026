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

#include "ancnet/network/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ancnet/common/error.hpp"

namespace ancnet::network {

void Circuit::validate() const {
  if (qubits < 0) throw ParseError("negative qubit count");
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    const auto& ins = instructions[i];
    const std::size_t line = i < lines.size() ? lines[i] : 0;
    if (static_cast<int>(ins.qubits.size()) != gates::arity(ins.gate)) {
      throw ParseError("wrong number of targets", line);
    }
    for (int q : ins.qubits) {
      if (q < 0 || q >= qubits) {
        throw ParseError("qubit q" + std::to_string(q) + " outside 0.." + std::to_string(qubits - 1),
                         line);
      }
    }
    if (ins.qubits.size() == 2 && ins.qubits[0] == ins.qubits[1]) {
      throw ParseError("two-qubit gate names the same qubit twice", line);
    }
  }
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  int declared = -1;
  int highest = -1;
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++n;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.starts_with("QUBITS")) {
      std::istringstream is{std::string(line.substr(6))};
      int q = -1;
      std::string extra;
      if (!(is >> q) || (is >> extra) || q < 1) throw ParseError("QUBITS needs one positive count", n);
      if (declared >= 0 || !c.instructions.empty()) throw ParseError("QUBITS must come first", n);
      declared = q;
    } else {
      for (auto& ins : gates::parse_line(line, n)) {
        for (int q : ins.qubits) highest = std::max(highest, q);
        c.instructions.push_back(std::move(ins));
        c.lines.push_back(n);
      }
    }
    if (end == text.size()) break;
  }
  c.qubits = declared >= 0 ? declared : highest + 1;
  c.validate();
  return c;
}

std::string format_circuit(const Circuit& circuit) {
  std::string out = "QUBITS " + std::to_string(circuit.qubits) + "\n";
  for (const auto& ins : circuit.instructions) out += gates::to_text(ins) + "\n";
  return out;
}

}  // namespace ancnet::network
