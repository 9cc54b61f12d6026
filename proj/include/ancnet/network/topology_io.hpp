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
#include <string_view>
#include <vector>

#include "ancnet/network/lattice.hpp"
#include "ancnet/network/schedule.hpp"

namespace ancnet::network {

struct NetworkConfig {
  LatticeTopology topology;
  int spot_radius = 1;
  TimingModel timing;
};

// {"dimension": 2, "extents": [3, 3],
//  "cell_template": {"m": 9, "energies": [...], "roles": {"1": "phase", ...}},
//  "spot_radius": 1, "port_detuning": 0.1, "timing": {...}}
// "roles" is optional (full inventory when absent). An optional
// "missing_links": [[[x, y], [x2, y2]], ...] removes broken links.
// Throws ParseError.
NetworkConfig topology_from_json(std::string_view text);

// Array of coordinate arrays, one per qubit. Throws ParseError.
std::vector<std::size_t> placement_from_json(std::string_view text, const LatticeTopology& topology);

}  // namespace ancnet::network
