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

#include "ancnet/network/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace ancnet::network {

int plus_port(int axis) { return cell::kFirstPortLevel + axis; }
int minus_port(int dimension, int axis) { return cell::kFirstPortLevel + dimension + axis; }

LatticeTopology::LatticeTopology(int dimension, std::vector<int> extents,
                                 std::vector<cell::CellSpec> cells, std::vector<Link> links)
    : dimension_(dimension), extents_(std::move(extents)), cells_(std::move(cells)),
      links_(std::move(links)) {
  if (dimension_ < 1 || dimension_ > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  if (static_cast<int>(extents_.size()) != dimension_) {
    throw std::invalid_argument("extents must list one size per dimension");
  }
  std::size_t n = 1;
  for (int e : extents_) {
    if (e < 1) throw std::invalid_argument("extents must be positive");
    strides_.push_back(n);
    n *= static_cast<std::size_t>(e);
  }
  if (cells_.size() != n) throw std::invalid_argument("one cell per lattice site required");
  link_index_.resize(n);
  for (std::size_t i = 0; i < links_.size(); ++i) {
    if (links_[i].a >= n || links_[i].b >= n) throw std::invalid_argument("link site out of range");
    link_index_[links_[i].a].push_back(i);
    link_index_[links_[i].b].push_back(i);
  }
}

Coord LatticeTopology::coord(std::size_t site) const {
  if (site >= cells_.size()) throw std::out_of_range("site index out of range");
  Coord c(dimension_);
  for (int a = 0; a < dimension_; ++a) {
    c[a] = static_cast<int>(site % static_cast<std::size_t>(extents_[a]));
    site /= static_cast<std::size_t>(extents_[a]);
  }
  return c;
}

bool LatticeTopology::contains(const Coord& c) const {
  if (static_cast<int>(c.size()) != dimension_) return false;
  for (int a = 0; a < dimension_; ++a) {
    if (c[a] < 0 || c[a] >= extents_[a]) return false;
  }
  return true;
}

std::size_t LatticeTopology::site(const Coord& c) const {
  if (!contains(c)) throw std::out_of_range("coordinate outside the lattice");
  std::size_t s = 0;
  for (int a = 0; a < dimension_; ++a) s += strides_[a] * static_cast<std::size_t>(c[a]);
  return s;
}

std::vector<std::size_t> LatticeTopology::neighbours(std::size_t site) const {
  const Coord c = coord(site);
  std::vector<std::size_t> out;
  for (int a = 0; a < dimension_; ++a) {
    if (c[a] + 1 < extents_[a]) out.push_back(site + strides_[a]);
    if (c[a] > 0) out.push_back(site - strides_[a]);
  }
  return out;
}

const Link* LatticeTopology::link_between(std::size_t a, std::size_t b) const {
  if (a >= link_index_.size()) return nullptr;
  for (std::size_t i : link_index_[a]) {
    const Link& l = links_[i];
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a)) return &l;
  }
  return nullptr;
}

int LatticeTopology::chebyshev(std::size_t a, std::size_t b) const {
  const Coord ca = coord(a), cb = coord(b);
  int d = 0;
  for (int i = 0; i < dimension_; ++i) d = std::max(d, std::abs(ca[i] - cb[i]));
  return d;
}

int LatticeTopology::manhattan(std::size_t a, std::size_t b) const {
  const Coord ca = coord(a), cb = coord(b);
  int d = 0;
  for (int i = 0; i < dimension_; ++i) d += std::abs(ca[i] - cb[i]);
  return d;
}

std::string LatticeTopology::check_invariants() const {
  for (const Link& l : links_) {
    if (manhattan(l.a, l.b) != 1) {
      return "link " + std::to_string(l.a) + "-" + std::to_string(l.b) + " joins non-neighbours";
    }
    const auto& ca = cells_[l.a];
    const auto& cb = cells_[l.b];
    if (ca.role(l.port_a) != cell::Role::kPort || cb.role(l.port_b) != cell::Role::kPort) {
      return "link uses a level that is not an interaction port";
    }
    if (ca.energy(l.port_a) != cb.energy(l.port_b) || ca.energy(l.port_a) != l.energy) {
      return "port energies differ across link " + std::to_string(l.a) + "-" + std::to_string(l.b);
    }
  }
  for (std::size_t s = 0; s < cells_.size(); ++s) {
    std::set<int> used;
    for (std::size_t i : link_index_[s]) {
      const Link& l = links_[i];
      if (!used.insert(l.a == s ? l.port_a : l.port_b).second) {
        return "cell " + std::to_string(s) + " uses one port for two links";
      }
    }
  }
  return {};
}

LatticeTopology build_lattice(int dimension, std::vector<int> extents,
                              const cell::CellSpec& templ, std::optional<double> port_detuning) {
  if (dimension < 1 || dimension > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  if (static_cast<int>(extents.size()) != dimension) {
    throw std::invalid_argument("extents must list one size per dimension");
  }
  std::size_t n = 1;
  std::vector<std::size_t> strides;
  for (int e : extents) {
    if (e < 1) throw std::invalid_argument("extents must be positive");
    strides.push_back(n);
    n *= static_cast<std::size_t>(e);
  }
  const double eps = port_detuning.value_or(templ.min_spacing() / 4.0);
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("port detuning must be positive");

  for (int a = 0; a < dimension; ++a) {
    if (extents[a] < 2) continue;
    for (int port : {plus_port(a), minus_port(dimension, a)}) {
      if (templ.role(port) != cell::Role::kPort) {
        throw std::invalid_argument("insufficient ports: cell template lacks port level " +
                                    std::to_string(port) + " needed by axis " + std::to_string(a));
      }
    }
  }

  std::vector<cell::CellSpec> cells;
  cells.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<double> e = templ.energies();
    std::size_t rest = s;
    for (int a = 0; a < dimension; ++a) {
      const int x = static_cast<int>(rest % static_cast<std::size_t>(extents[a]));
      rest /= static_cast<std::size_t>(extents[a]);
      if (extents[a] < 2) continue;
      const double base = templ.energy(plus_port(a));
      e[plus_port(a)] = base + eps * (x % 2);
      e[minus_port(dimension, a)] = base + eps * ((x + 1) % 2);
    }
    cells.push_back(templ.with_energies(std::move(e)));
  }

  std::vector<Link> links;
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t rest = s;
    for (int a = 0; a < dimension; ++a) {
      const int x = static_cast<int>(rest % static_cast<std::size_t>(extents[a]));
      rest /= static_cast<std::size_t>(extents[a]);
      if (x + 1 >= extents[a]) continue;
      const std::size_t b = s + strides[a];
      links.push_back({s, b, a, plus_port(a), minus_port(dimension, a),
                       cells[s].energy(plus_port(a))});
    }
  }
  LatticeTopology topo(dimension, std::move(extents), std::move(cells), std::move(links));
  if (auto err = topo.check_invariants(); !err.empty()) throw std::invalid_argument(err);
  return topo;
}

LatticeTopology remove_links(const LatticeTopology& topo,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Link> keep = topo.links();
  for (const auto& [a, b] : pairs) {
    auto it = std::find_if(keep.begin(), keep.end(), [&](const Link& l) {
      return (l.a == a && l.b == b) || (l.a == b && l.b == a);
    });
    if (it == keep.end()) {
      throw std::invalid_argument("no link between sites " + std::to_string(a) + " and " +
                                  std::to_string(b));
    }
    keep.erase(it);
  }
  std::vector<cell::CellSpec> cells;
  for (std::size_t s = 0; s < topo.site_count(); ++s) cells.push_back(topo.cell(s));
  return LatticeTopology(topo.dimension(), topo.extents(), std::move(cells), std::move(keep));
}

}  // namespace ancnet::network
