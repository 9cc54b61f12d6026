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

#include "ancnet/network/topology_io.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include "ancnet/common/error.hpp"

namespace ancnet::network {

namespace {

using nlohmann::json;

cell::CellSpec parse_template(const json& j) {
  const int m = j.at("m").get<int>();
  auto energies = j.at("energies").get<std::vector<double>>();
  std::map<int, cell::Role> roles;
  if (j.contains("roles")) {
    for (const auto& [key, value] : j["roles"].items()) {
      int level = -1;
      try {
        level = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError("role key '" + key + "' is not a level index");
      }
      const auto name = value.get<std::string>();
      const auto role = cell::role_from_string(name);
      if (!role) throw ParseError("unknown role '" + name + "'");
      roles[level] = *role;
    }
  }
  try {
    return cell::CellSpec(m, std::move(energies), std::move(roles));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("cell_template: ") + e.what());
  }
}

}  // namespace

NetworkConfig topology_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const int d = doc.at("dimension").get<int>();
    auto extents = doc.at("extents").get<std::vector<int>>();
    const cell::CellSpec templ = parse_template(doc.at("cell_template"));
    std::optional<double> detuning;
    if (doc.contains("port_detuning")) detuning = doc["port_detuning"].get<double>();
    TimingModel timing;
    if (doc.contains("timing")) {
      const json& t = doc["timing"];
      timing.exchange_j = t.value("exchange_j", timing.exchange_j);
      timing.rotation_rate = t.value("rotation_rate", timing.rotation_rate);
      timing.phase_rate = t.value("phase_rate", timing.phase_rate);
      timing.pi_pulse_duration = t.value("pi_pulse_duration", timing.pi_pulse_duration);
      timing.readout_duration = t.value("readout_duration", timing.readout_duration);
    }
    const int radius = doc.value("spot_radius", 1);
    if (radius < 1) throw ParseError("spot_radius must be >= 1");
    try {
      timing.validate();
      LatticeTopology topo = build_lattice(d, std::move(extents), templ, detuning);
      if (doc.contains("missing_links")) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (const json& pair : doc["missing_links"]) {
          const auto a = pair.at(0).get<std::vector<int>>();
          const auto b = pair.at(1).get<std::vector<int>>();
          if (!topo.contains(a) || !topo.contains(b)) throw ParseError("missing_links: site outside the lattice");
          pairs.emplace_back(topo.site(a), topo.site(b));
        }
        topo = remove_links(topo, pairs);
      }
      return {std::move(topo), radius, timing};
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("topology: ") + e.what());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("topology JSON: ") + e.what());
  }
}

std::vector<std::size_t> placement_from_json(std::string_view text, const LatticeTopology& topo) {
  try {
    const json doc = json::parse(text);
    if (!doc.is_array()) throw ParseError("placement must be an array of coordinates");
    std::vector<std::size_t> out;
    for (const json& c : doc) {
      const auto coord = c.get<std::vector<int>>();
      if (!topo.contains(coord)) {
        throw ParseError(fmt::format("placement coordinate {} outside the lattice", c.dump()));
      }
      out.push_back(topo.site(coord));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("placement JSON: ") + e.what());
  }
}

}  // namespace ancnet::network
