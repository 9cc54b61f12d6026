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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ancnet/cell/cell_spec.hpp"

namespace ancnet::network {

using Coord = std::vector<int>;

// Interaction port used on the +axis side of a cell, and on the -axis side.
int plus_port(int axis);
int minus_port(int dimension, int axis);

struct Link {
  std::size_t a;  // lower site, a + stride(axis) == b
  std::size_t b;
  int axis;
  int port_a;  // plus_port(axis)
  int port_b;  // minus_port(d, axis)
  double energy;
};

class LatticeTopology {
 public:
  LatticeTopology(int dimension, std::vector<int> extents, std::vector<cell::CellSpec> cells,
                  std::vector<Link> links);

  int dimension() const noexcept { return dimension_; }
  const std::vector<int>& extents() const noexcept { return extents_; }
  std::size_t site_count() const noexcept { return cells_.size(); }
  const cell::CellSpec& cell(std::size_t site) const { return cells_.at(site); }
  const std::vector<Link>& links() const noexcept { return links_; }

  // Axis 0 varies fastest.
  Coord coord(std::size_t site) const;
  std::size_t site(const Coord& c) const;  // throws std::out_of_range
  bool contains(const Coord& c) const;

  // Neighbours in the order +x, -x, +y, -y, ...
  std::vector<std::size_t> neighbours(std::size_t site) const;
  const Link* link_between(std::size_t a, std::size_t b) const;

  int chebyshev(std::size_t a, std::size_t b) const;
  int manhattan(std::size_t a, std::size_t b) const;

  // Empty string when every link joins neighbours with matched energies and
  // every cell has distinct port levels.
  std::string check_invariants() const;

 private:
  int dimension_;
  std::vector<int> extents_;
  std::vector<std::size_t> strides_;
  std::vector<cell::CellSpec> cells_;
  std::vector<Link> links_;
  std::vector<std::vector<std::size_t>> link_index_;  // per site
};

// Nearest-neighbour lattice. The +axis port of a cell at coordinate x gets
// energy T[plus_port] + eps * (x_axis mod 2); the neighbour's -axis port
// copies it. eps defaults to a quarter of the template's smallest spacing.
// Throws std::invalid_argument (bad extents, "insufficient ports").
LatticeTopology build_lattice(int dimension, std::vector<int> extents,
                              const cell::CellSpec& cell_template,
                              std::optional<double> port_detuning = std::nullopt);

// Copy of `topology` without the links joining the listed site pairs.
// Throws std::invalid_argument when a pair is not linked.
LatticeTopology remove_links(const LatticeTopology& topology,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace ancnet::network
