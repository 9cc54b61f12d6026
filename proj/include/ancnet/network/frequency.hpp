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
#include <vector>

#include "ancnet/network/lattice.hpp"

namespace ancnet::network {

// Optical line labels. Sites get colours so that two sites within
// Chebyshev distance spot_radius never share one; the 0 -> i line of a cell
// with colour c is labelled c * m + (i - 1). The 2 -> 5 readout line uses a
// separate block after all ancilla labels.
class FrequencyMap {
 public:
  FrequencyMap(int spot_radius, int ancillas, std::vector<int> site_colors);

  int spot_radius() const noexcept { return spot_radius_; }
  int colors() const noexcept { return colors_; }
  int site_color(std::size_t site) const { return site_colors_.at(site); }
  const std::vector<int>& site_colors() const noexcept { return site_colors_; }

  // Label of the 0 <-> ancilla line; throws std::out_of_range for ancilla 0
  // or beyond m.
  int label(std::size_t site, int ancilla) const;
  // Label of the line between two excited levels (measurement shelf).
  int shelf_label(std::size_t site) const;
  int line_label(std::size_t site, int source, int target) const;

  // Distinct labels used by the (site, ancilla) map.
  int ancilla_label_count() const { return colors_ * ancillas_; }

 private:
  int spot_radius_;
  int ancillas_;
  int colors_ = 0;
  std::vector<int> site_colors_;
};

// Greedy first-fit colouring in site order. Throws std::invalid_argument for
// spot_radius < 1.
FrequencyMap assign_frequencies(const LatticeTopology& topology, int spot_radius);

}  // namespace ancnet::network
