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

#include "ancnet/network/frequency.hpp"

#include <algorithm>
#include <stdexcept>

namespace ancnet::network {

FrequencyMap::FrequencyMap(int spot_radius, int ancillas, std::vector<int> site_colors)
    : spot_radius_(spot_radius), ancillas_(ancillas), site_colors_(std::move(site_colors)) {
  for (int c : site_colors_) {
    if (c < 0) throw std::invalid_argument("negative site colour");
    colors_ = std::max(colors_, c + 1);
  }
}

int FrequencyMap::label(std::size_t site, int ancilla) const {
  if (ancilla < 1 || ancilla > ancillas_) throw std::out_of_range("ancilla has no optical line");
  return site_color(site) * ancillas_ + (ancilla - 1);
}

int FrequencyMap::shelf_label(std::size_t site) const {
  return ancilla_label_count() + site_color(site);
}

int FrequencyMap::line_label(std::size_t site, int source, int target) const {
  if (source == 0) return label(site, target);
  if (target == 0) return label(site, source);
  return shelf_label(site);
}

FrequencyMap assign_frequencies(const LatticeTopology& topo, int spot_radius) {
  if (spot_radius < 1) throw std::invalid_argument("spot radius must be >= 1");
  const std::size_t n = topo.site_count();
  const int d = topo.dimension();
  std::vector<int> color(n, -1);
  std::vector<char> taken;
  for (std::size_t s = 0; s < n; ++s) {
    taken.assign(taken.size(), 0);
    const Coord c = topo.coord(s);
    // Walk the (2r+1)^d window around s.
    Coord off(d, -spot_radius);
    while (true) {
      Coord q = c;
      for (int a = 0; a < d; ++a) q[a] += off[a];
      if (topo.contains(q)) {
        const int k = color[topo.site(q)];
        if (k >= 0) {
          if (static_cast<std::size_t>(k) >= taken.size()) taken.resize(k + 1, 0);
          taken[k] = 1;
        }
      }
      int a = 0;
      while (a < d && ++off[a] > spot_radius) off[a++] = -spot_radius;
      if (a == d) break;
    }
    int k = 0;
    while (static_cast<std::size_t>(k) < taken.size() && taken[k]) ++k;
    color[s] = k;
  }
  return FrequencyMap(spot_radius, topo.cell(0).m(), std::move(color));
}

}  // namespace ancnet::network
