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

#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <variant>
#include <vector>

#include "ancnet/cell/cell_spec.hpp"
#include "ancnet/gates/instruction.hpp"
#include "ancnet/network/lattice.hpp"
#include "oracle.hpp"

namespace fixtures {

// m = 9: levels 1..5 keep their fixed roles, 6..9 are ports.
inline ancnet::cell::CellSpec grid_cell() {
  using ancnet::cell::Role;
  std::vector<double> e(10);
  for (int i = 0; i < 10; ++i) e[i] = i;
  std::map<int, Role> roles{{1, Role::kPhase}, {2, Role::kRotX}, {3, Role::kRotY},
                            {4, Role::kRotZ},  {5, Role::kMeasure}};
  for (int p = 6; p <= 9; ++p) roles[p] = Role::kPort;
  return ancnet::cell::CellSpec(9, e, roles);
}

inline ancnet::network::LatticeTopology grid(int w, int h) {
  return ancnet::network::build_lattice(2, {w, h}, grid_cell());
}

inline ancnet::network::LatticeTopology chain(int n) {
  return ancnet::network::build_lattice(1, {n}, grid_cell());
}

// Breadth-first distances over the link list.
inline std::vector<int> bfs_distances(const ancnet::network::LatticeTopology& topo,
                                      std::size_t from) {
  std::vector<std::vector<std::size_t>> adj(topo.site_count());
  for (const auto& l : topo.links()) {
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::vector<int> dist(topo.site_count(), -1);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (auto t : adj[s]) {
      if (dist[t] < 0) {
        dist[t] = dist[s] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist;
}

// State-vector simulation of n qubits, qubit 0 slowest, with each gate
// written out as a literal matrix.
class DirectSim {
 public:
  explicit DirectSim(int n) : n_(n), psi_(oracle::V::Zero(std::size_t{1} << n)) { psi_(0) = 1.0; }
  explicit DirectSim(const oracle::V& psi, int n) : n_(n), psi_(psi) {}

  const oracle::V& state() const { return psi_; }

  void apply1(const oracle::M& u, int q) {
    const std::size_t bit = std::size_t{1} << (n_ - 1 - q);
    for (std::size_t i = 0; i < static_cast<std::size_t>(psi_.size()); ++i) {
      if (i & bit) continue;
      const auto a = psi_(i), b = psi_(i | bit);
      psi_(i) = u(0, 0) * a + u(0, 1) * b;
      psi_(i | bit) = u(1, 0) * a + u(1, 1) * b;
    }
  }

  // Exchange gate: |01> and |10> mix, |00> and |11> untouched.
  void exchange(double theta, int qa, int qb) {
    const std::size_t ba = std::size_t{1} << (n_ - 1 - qa);
    const std::size_t bb = std::size_t{1} << (n_ - 1 - qb);
    const oracle::C c = std::cos(theta), s = -oracle::I * std::sin(theta);
    for (std::size_t i = 0; i < static_cast<std::size_t>(psi_.size()); ++i) {
      if ((i & ba) || !(i & bb)) continue;
      const std::size_t j = (i | ba) & ~bb;
      const auto x = psi_(i), y = psi_(j);
      psi_(i) = c * x + s * y;
      psi_(j) = s * x + c * y;
    }
  }

  void rotation(char axis, double theta, int q) { apply1(oracle::rotation(axis, theta), q); }

  void phase(double phi, int q) {
    oracle::M p = oracle::M::Identity(2, 2);
    p(1, 1) = std::exp(oracle::I * phi);
    apply1(p, q);
  }

 private:
  int n_;
  oracle::V psi_;
};

inline char axis_char(ancnet::gates::Axis a) {
  return a == ancnet::gates::Axis::kX ? 'x' : a == ancnet::gates::Axis::kY ? 'y' : 'z';
}

// Runs unitary instructions on qubits placed along a chain 0..n-1 in
// qubit order. A two-qubit gate at distance 2 is bracketed by full
// exchanges with the middle qubit: U(pi/2) before, U(-pi/2) after.
inline void run_on_chain(DirectSim& sim, const std::vector<ancnet::gates::Instruction>& prog) {
  using namespace ancnet::gates;
  for (const auto& ins : prog) {
    if (const auto* r = std::get_if<Rotation>(&ins.gate)) {
      sim.rotation(axis_char(r->axis), r->theta, ins.qubits[0]);
    } else if (const auto* p = std::get_if<Phase>(&ins.gate)) {
      sim.phase(p->phi, ins.qubits[0]);
    } else if (const auto* s = std::get_if<Swap>(&ins.gate)) {
      const int a = ins.qubits[0], b = ins.qubits[1];
      if (std::abs(a - b) == 1) {
        sim.exchange(s->theta, a, b);
      } else {
        const int mid = (a + b) / 2;
        sim.exchange(std::numbers::pi / 2, a, mid);
        sim.exchange(s->theta, mid, b);
        sim.exchange(-std::numbers::pi / 2, a, mid);
      }
    }
  }
}

inline double overlap_fidelity(const oracle::V& a, const oracle::V& b) {
  return std::norm(a.dot(b));
}

}  // namespace fixtures
