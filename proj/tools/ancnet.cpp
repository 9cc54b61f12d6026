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

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ancnet/cli/commands.hpp"
#include "ancnet/cli/grid.hpp"
#include "ancnet/common/error.hpp"

namespace {

using namespace ancnet;

std::vector<int> parse_coord(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad coordinate '" + s + "'");
    }
  }
  if (out.empty()) throw ParseError("empty coordinate");
  return out;
}

cli::Format parse_format(const std::string& s) {
  if (s == "csv") return cli::Format::kCsv;
  if (s == "json") return cli::Format::kJson;
  throw ParseError("--format must be csv or json");
}

// Opens --out before any computation so a bad path fails fast.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool is_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ancnet: optically controlled quantum cellular network tools"};
  app.require_subcommand(1);

  std::string out_path, format = "csv", grid;

  // fig2
  auto* fig2 = app.add_subcommand("fig2", "occupation product of the three-site model");
  std::string axis = "detuning";
  auto base = cell::ThreeSiteParams::contraction_default();
  fig2->add_option("--axis", axis, "detuning or s")->check(CLI::IsMember({"detuning", "s"}));
  fig2->add_option("--grid", grid, "start:stop:step or comma list")->required();
  fig2->add_option("--out", out_path, "output path (default stdout)");
  fig2->add_option("--format", format, "csv or json");
  fig2->add_option("--t", base.t, "center transfer");
  fig2->add_option("--s", base.s, "direct transfer");
  fig2->add_option("--e-left", base.e_left, "left site energy");
  fig2->add_option("--e-center", base.e_center, "center site energy");
  fig2->add_option("--e-right", base.e_right, "right site energy");

  // fig3
  auto* fig3 = app.add_subcommand("fig3", "purity after the dissipative operation procedure");
  std::optional<double> dt3;
  double exchange_j = 1.0;
  std::string curve = "all";
  fig3->add_option("--grid", grid, "inverse time ratios")->required();
  fig3->add_option("--out", out_path, "output path (default stdout)");
  fig3->add_option("--format", format, "csv or json");
  fig3->add_option("--dt", dt3, "integrator step (default gate_time/2000)");
  fig3->add_option("--j", exchange_j, "exchange energy J");
  fig3->add_option("--curve", curve, "all, procedure, excited or superposition");

  // compile
  auto* compile = app.add_subcommand("compile", "compile a circuit into a pulse schedule");
  cli::CompileCommand cc;
  std::optional<int> radius;
  compile->add_option("circuit", cc.circuit_path, "circuit text file")->required();
  compile->add_option("--topology", cc.topology_path, "topology JSON")->required();
  compile->add_option("--placement", cc.placement_path, "placement JSON")->required();
  compile->add_option("--spot-radius", radius, "laser spot radius in cells");
  compile->add_option("--out", out_path, "schedule JSON path (default stdout)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run a schedule");
  cli::SimulateCommand sc;
  std::optional<double> tau;
  std::string initial;
  simulate->add_option("schedule", sc.schedule_path, "schedule JSON")->required();
  simulate->add_option("--topology", sc.topology_path, "topology JSON")->required();
  simulate->add_option("--seed", sc.seed, "master seed");
  simulate->add_option("--trials", sc.trials, "number of sampled trials");
  simulate->add_option("--tau-a", tau, "ancilla coherence time (enables noise)");
  simulate->add_option("--dt", sc.dt, "largest integrator step in noisy mode");
  simulate->add_option("--initial", initial, "comma list of qubit states: 0,1,+,-,+i,-i");
  simulate->add_option("--out", out_path, "output path (default stdout)");
  simulate->add_option("--format", format, "json or csv");

  // route
  auto* route = app.add_subcommand("route", "swap chain between two sites");
  cli::RouteCommand rc;
  std::string from, to;
  route->add_option("--topology", rc.topology_path, "topology JSON")->required();
  route->add_option("--from", from, "x,y,...")->required();
  route->add_option("--to", to, "x,y,...")->required();
  route->add_option("--out", out_path, "output path (default stdout)");

  // duty
  auto* duty = app.add_subcommand("duty", "duty ratio report of a schedule");
  cli::DutyCommand dc;
  duty->add_option("schedule", dc.schedule_path, "schedule JSON")->required();
  duty->add_option("--tau-a", dc.tau_a, "ancilla coherence time");
  duty->add_option("--out", out_path, "output path (default stdout)");
  duty->add_option("--format", format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kParse);
  }

  return cli::run_guarded(
      [&] {
        if (fig2->parsed()) {
          cli::Fig2Options o;
          o.axis = axis == "s" ? cell::SweepAxis::kDirectTransfer : cell::SweepAxis::kDetuning;
          o.grid = cli::parse_grid(grid);
          o.base = base;
          o.format = parse_format(format);
          Output out(out_path);
          cli::cmd_fig2(o, out.stream());
        } else if (fig3->parsed()) {
          cli::Fig3Options o;
          o.grid = cli::parse_grid(grid);
          o.exchange_j = exchange_j;
          o.dt = dt3;
          o.curve = curve;
          o.format = parse_format(format);
          Output out(out_path);
          cli::cmd_fig3(o, out.stream());
        } else if (compile->parsed()) {
          cc.spot_radius = radius;
          Output out(out_path);
          cli::cmd_compile(cc, out.stream(), out.is_file() ? std::cout : std::cerr);
        } else if (simulate->parsed()) {
          sc.tau_a = tau;
          if (!initial.empty()) {
            std::stringstream ss(initial);
            std::string item;
            while (std::getline(ss, item, ',')) sc.initial.push_back(item);
          }
          sc.format = simulate->count("--format") ? parse_format(format) : cli::Format::kJson;
          Output out(out_path);
          cli::cmd_simulate(sc, out.stream());
        } else if (route->parsed()) {
          rc.from = parse_coord(from);
          rc.to = parse_coord(to);
          Output out(out_path);
          cli::cmd_route(rc, out.stream());
        } else if (duty->parsed()) {
          dc.format = parse_format(format);
          Output out(out_path);
          cli::cmd_duty(dc, out.stream());
        }
      },
      std::cerr);
}
