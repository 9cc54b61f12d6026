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

#include "ancnet/cell/three_site.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace ancnet::cell {

namespace {

Eigen::Matrix3d real_hamiltonian(const ThreeSiteParams& p) {
  Eigen::Matrix3d h;
  h << p.e_left, p.t, p.s,
       p.t, p.e_center, -p.t,
       p.s, -p.t, p.e_right;
  return h;
}

double product_of(const Eigen::Vector3d& state) {
  return state(0) * state(0) * state(2) * state(2);
}

// Flags the selected level as degenerate and records the neighbour's product.
void mark_degeneracy(const ThreeSiteSpectrum& spec, int level, bool& degenerate,
                     std::optional<double>& alternate) {
  double best_gap = kDegeneracyTolerance;
  for (int other = 0; other < 3; ++other) {
    if (other == level) continue;
    const double gap = std::abs(spec.energies(other) - spec.energies(level));
    if (gap <= best_gap) {
      best_gap = gap;
      degenerate = true;
      alternate = product_of(spec.states.col(other));
    }
  }
}

}  // namespace

void ThreeSiteParams::validate() const {
  for (double v : {e_left, e_center, e_right, t, s}) {
    if (!std::isfinite(v)) throw std::invalid_argument("three-site parameters must be finite");
  }
  if (t == 0.0) throw std::invalid_argument("center transfer t must be non-zero");
}

ThreeSiteParams ThreeSiteParams::contraction_default() {
  return {.e_left = 0.0, .e_center = 100.0, .e_right = 0.0, .t = 1.0, .s = 0.001};
}

core::ComplexOperator three_site_hamiltonian(const ThreeSiteParams& p) {
  p.validate();
  return core::ComplexOperator(real_hamiltonian(p).cast<core::Complex>());
}

ThreeSiteSpectrum three_site_spectrum(const ThreeSiteParams& p) {
  p.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(real_hamiltonian(p));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

OccupationResult occupation_product(const ThreeSiteParams& p, Level level) {
  const auto spec = three_site_spectrum(p);
  OccupationResult out;
  out.level = static_cast<int>(level);
  out.energy = spec.energies(out.level);
  out.product = product_of(spec.states.col(out.level));
  mark_degeneracy(spec, out.level, out.degenerate, out.alternate);
  return out;
}

ThreeSiteParams sweep_params(const ThreeSiteParams& base, SweepAxis axis, double x) {
  ThreeSiteParams p = base;
  if (axis == SweepAxis::kDirectTransfer) {
    p.s = x;
  } else {
    const double mean = 0.5 * (base.e_left + base.e_right);
    p.e_left = mean + 0.5 * x;
    p.e_right = mean - 0.5 * x;
  }
  return p;
}

std::vector<SweepPoint> contraction_sweep(const ThreeSiteParams& base, SweepAxis axis,
                                          std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("grid must be sorted ascending");
  }
  std::vector<SweepPoint> curve;
  curve.reserve(grid.size());
  Eigen::Vector3d previous;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto spec = three_site_spectrum(sweep_params(base, axis, grid[k]));
    SweepPoint point;
    point.x = grid[k];
    if (k == 0) {
      point.level = static_cast<int>(Level::kMiddle);
    } else {
      std::array<double, 3> overlap{};
      for (int j = 0; j < 3; ++j) overlap[j] = std::abs(previous.dot(spec.states.col(j)));
      point.level = static_cast<int>(std::max_element(overlap.begin(), overlap.end()) -
                                     overlap.begin());
      std::array<double, 3> sorted = overlap;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      point.ambiguous = sorted[0] * sorted[0] - sorted[1] * sorted[1] < 0.5;
    }
    const Eigen::Vector3d state = spec.states.col(point.level);
    point.product = product_of(state);
    mark_degeneracy(spec, point.level, point.degenerate, point.alternate);
    previous = state;
    curve.push_back(point);
  }
  return curve;
}

}  // namespace ancnet::cell
