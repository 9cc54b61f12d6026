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

#include "ancnet/network/routing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace ancnet::network {

std::vector<std::size_t> shortest_path(const LatticeTopology& topo, std::size_t a, std::size_t b) {
  const std::size_t n = topo.site_count();
  if (a >= n || b >= n) throw std::invalid_argument("site out of range");
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, kNone);
  parent[a] = a;
  std::deque<std::size_t> queue{a};
  while (!queue.empty() && parent[b] == kNone) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t t : topo.neighbours(s)) {
      if (parent[t] != kNone || !topo.link_between(s, t)) continue;
      parent[t] = s;
      queue.push_back(t);
    }
  }
  if (parent[b] == kNone) throw std::runtime_error("sites are not connected");
  std::vector<std::size_t> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

SwapChain route_swap_chain(const LatticeTopology& topo, std::size_t qa, std::size_t qb) {
  if (qa == qb) throw std::invalid_argument("routing needs two distinct sites");
  SwapChain chain;
  chain.path = shortest_path(topo, qa, qb);
  const std::size_t hops = chain.path.size() - 1;
  for (std::size_t i = 0; i + 1 < hops; ++i) chain.forward.emplace_back(chain.path[i], chain.path[i + 1]);
  chain.interaction = {chain.path[hops - 1], chain.path[hops]};
  chain.restore.assign(chain.forward.rbegin(), chain.forward.rend());
  return chain;
}

}  // namespace ancnet::network
