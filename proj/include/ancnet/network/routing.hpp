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
#include <utility>
#include <vector>

#include "ancnet/network/lattice.hpp"

namespace ancnet::network {

using SitePair = std::pair<std::size_t, std::size_t>;

// Breadth-first shortest path from a to b (inclusive). Neighbours are
// explored in LatticeTopology::neighbours order. Throws std::runtime_error
// when b is unreachable.
std::vector<std::size_t> shortest_path(const LatticeTopology& topology, std::size_t a,
                                       std::size_t b);

// Full swaps U(pi/2) carry the state of qa along the path until it sits next
// to qb, the interaction acts on that pair, then U(-pi/2) in reverse order
// restores every position.
struct SwapChain {
  std::vector<std::size_t> path;
  std::vector<SitePair> forward;
  SitePair interaction;
  std::vector<SitePair> restore;

  std::size_t chain_length() const noexcept { return forward.size(); }
  std::size_t step_count() const noexcept { return forward.size() + 1 + restore.size(); }
};

// Throws std::invalid_argument when qa == qb or a site is out of range.
SwapChain route_swap_chain(const LatticeTopology& topology, std::size_t qa, std::size_t qb);

}  // namespace ancnet::network
