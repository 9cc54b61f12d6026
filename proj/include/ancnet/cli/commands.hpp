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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ancnet/cell/three_site.hpp"

namespace ancnet::cli {

enum class Format { kCsv, kJson };

struct Fig2Options {
  cell::SweepAxis axis = cell::SweepAxis::kDetuning;
  std::vector<double> grid;
  cell::ThreeSiteParams base = cell::ThreeSiteParams::contraction_default();
  Format format = Format::kCsv;
};

struct Fig3Options {
  std::vector<double> grid;
  double exchange_j = 1.0;
  std::optional<double> dt;  // default gate_time / 2000
  // "all" (three curves), "procedure", "excited" or "superposition".
  std::string curve = "all";
  Format format = Format::kCsv;
};

struct CompileCommand {
  std::string circuit_path;
  std::string topology_path;
  std::string placement_path;
  std::optional<int> spot_radius;  // overrides the topology file
};

struct SimulateCommand {
  std::string schedule_path;
  std::string topology_path;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::optional<double> tau_a;  // enables the noisy mode
  double dt = 1e-3;
  // One entry per placed qubit: "0", "1", "+", "-", "+i", "-i".
  std::vector<std::string> initial;
  Format format = Format::kJson;
};

struct RouteCommand {
  std::string topology_path;
  std::vector<int> from;
  std::vector<int> to;
};

struct DutyCommand {
  std::string schedule_path;
  double tau_a = 0.0;  // 0: report no effective coherence time
  Format format = Format::kCsv;
};

void cmd_fig2(const Fig2Options& options, std::ostream& out);
void cmd_fig3(const Fig3Options& options, std::ostream& out);
// Writes the schedule JSON to `out` and the duty summary to `report`.
void cmd_compile(const CompileCommand& command, std::ostream& out, std::ostream& report);
void cmd_simulate(const SimulateCommand& command, std::ostream& out);
void cmd_route(const RouteCommand& command, std::ostream& out);
void cmd_duty(const DutyCommand& command, std::ostream& out);

// Runs `body`, maps exceptions to the exit-code contract (0 ok, 2 parse,
// 3 routing, 4 invariant, 1 other) and prints the message to `err`.
int run_guarded(const std::function<void()>& body, std::ostream& err);

std::string read_file(const std::string& path);

}  // namespace ancnet::cli
