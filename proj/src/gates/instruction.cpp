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

#include "ancnet/gates/instruction.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "ancnet/common/error.hpp"
#include "ancnet/core/linalg.hpp"

namespace ancnet::gates {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_qubit(std::string_view tok, std::size_t line) {
  if (tok.size() < 2 || (tok[0] != 'q' && tok[0] != 'Q')) {
    throw ParseError(fmt::format("expected qubit like q0, got '{}'", tok), line);
  }
  int q = -1;
  auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
  if (ec != std::errc() || p != tok.data() + tok.size() || q < 0) {
    throw ParseError(fmt::format("bad qubit index '{}'", tok), line);
  }
  return q;
}

double parse_angle(std::string_view tok, std::size_t line) {
  std::string s(tok);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError(fmt::format("bad angle '{}'", tok), line);
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw ParseError(fmt::format("bad angle '{}'", tok), line);
  }
  return v;
}

void expect_tokens(const std::vector<std::string_view>& t, std::size_t n, std::size_t line) {
  if (t.size() != n) {
    throw ParseError(fmt::format("'{}' expects {} operands, got {}", t[0], n - 1, t.size() - 1),
                     line);
  }
}

// Shortest text that reads back to the same double.
std::string angle_text(double v) { return fmt::format("{}", v); }

}  // namespace

int arity(const GateKind& gate) {
  return std::holds_alternative<Swap>(gate) ? 2 : 1;
}

std::string to_text(const Instruction& ins) {
  auto q = [&](std::size_t k) { return fmt::format("q{}", ins.qubits.at(k)); };
  return std::visit(
      Overloaded{
          [&](const PiPulse& p) { return fmt::format("PI {} {}", q(0), p.level); },
          [&](const Swap& s) { return fmt::format("SWAP {} {} {}", q(0), q(1), angle_text(s.theta)); },
          [&](const Rotation& r) {
            return fmt::format("R{} {} {}", axis_letter(r.axis), q(0), angle_text(r.theta));
          },
          [&](const Phase& p) { return fmt::format("PHASE {} {}", q(0), angle_text(p.phi)); },
          [&](const Measure&) { return fmt::format("MEASURE {}", q(0)); },
      },
      ins.gate);
}

std::vector<Instruction> parse_line(std::string_view line, std::size_t n) {
  const auto t = tokenize(line);
  if (t.empty()) throw ParseError("empty instruction", n);
  const std::string_view op = t[0];
  if (op == "RX" || op == "RY" || op == "RZ") {
    expect_tokens(t, 3, n);
    const Axis axis = op[1] == 'X' ? Axis::kX : op[1] == 'Y' ? Axis::kY : Axis::kZ;
    return {{Rotation{axis, parse_angle(t[2], n)}, {parse_qubit(t[1], n)}}};
  }
  if (op == "PHASE") {
    expect_tokens(t, 3, n);
    return {{Phase{parse_angle(t[2], n)}, {parse_qubit(t[1], n)}}};
  }
  if (op == "SWAP" || op == "CNOT") {
    expect_tokens(t, op == "SWAP" ? 4 : 3, n);
    const int a = parse_qubit(t[1], n);
    const int b = parse_qubit(t[2], n);
    if (a == b) throw ParseError(fmt::format("{} needs two distinct qubits", op), n);
    if (op == "CNOT") return cnot_from_sqrt_swap(a, b);
    return {{Swap{parse_angle(t[3], n)}, {a, b}}};
  }
  if (op == "MEASURE") {
    expect_tokens(t, 2, n);
    return {{Measure{}, {parse_qubit(t[1], n)}}};
  }
  if (op == "PI") {
    expect_tokens(t, 3, n);
    int level = -1;
    auto [p, ec] = std::from_chars(t[2].data(), t[2].data() + t[2].size(), level);
    if (ec != std::errc() || p != t[2].data() + t[2].size()) {
      throw ParseError(fmt::format("bad level '{}'", t[2]), n);
    }
    return {{PiPulse{level}, {parse_qubit(t[1], n)}}};
  }
  throw ParseError(fmt::format("unknown instruction '{}'", op), n);
}

std::vector<Instruction> cnot_from_sqrt_swap(int control, int target) {
  constexpr double pi = std::numbers::pi;
  return {
      {Rotation{Axis::kY, pi / 2}, {control}},
      {Swap{pi / 4}, {control, target}},
      {Rotation{Axis::kX, pi}, {control}},
      {Swap{pi / 4}, {control, target}},
      {Rotation{Axis::kZ, pi / 2}, {control}},
      {Rotation{Axis::kX, pi / 2}, {control}},
      {Rotation{Axis::kX, -pi / 2}, {target}},
  };
}

core::ComplexOperator two_qubit_matrix(const std::vector<Instruction>& program) {
  const core::Matrix id = core::Matrix::Identity(2, 2);
  core::Matrix total = core::Matrix::Identity(4, 4);
  for (const auto& ins : program) {
    for (int q : ins.qubits) {
      if (q != 0 && q != 1) throw std::invalid_argument("two_qubit_matrix: qubit outside {0,1}");
    }
    core::Matrix step;
    auto local = [&](const core::ComplexOperator& u) {
      return ins.qubits[0] == 0 ? core::kron(u.matrix(), id) : core::kron(id, u.matrix());
    };
    std::visit(Overloaded{
                   [&](const Rotation& r) { step = local(rotation_unitary(r.axis, r.theta)); },
                   [&](const Phase& p) { step = local(phase_unitary(p.phi)); },
                   [&](const Swap& s) { step = swap_unitary(s.theta).matrix(); },
                   [&](const auto&) {
                     throw std::invalid_argument("two_qubit_matrix: unsupported instruction");
                   },
               },
               ins.gate);
    total = step * total;
  }
  return core::ComplexOperator(std::move(total));
}

}  // namespace ancnet::gates
