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

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ancnet/core/operator.hpp"

namespace ancnet::cell {

// One electron on a left/center/right triple of dots: site energies plus
// the center transfer t and the direct left-right transfer s. Energies are
// in units of a reference energy; the contraction analysis uses t = 1.
struct ThreeSiteParams {
  double e_left = 0.0;
  double e_center = 0.0;
  double e_right = 0.0;
  double t = 1.0;
  double s = 0.0;

  // Throws std::invalid_argument for t == 0 or non-finite values.
  void validate() const;

  // Base point of the contraction analysis: ancilla pair at zero energy,
  // center site 100 t above it, s = 0.001 t.
  static ThreeSiteParams contraction_default();
};

// Hermitian 3x3 in the (l, c, r) basis with H_lc = t, H_cr = -t, H_lr = s.
core::ComplexOperator three_site_hamiltonian(const ThreeSiteParams& p);

struct ThreeSiteSpectrum {
  Eigen::Vector3d energies;  // ascending
  Eigen::Matrix3d states;    // columns, real
};
ThreeSiteSpectrum three_site_spectrum(const ThreeSiteParams& p);

enum class Level { kLowest = 0, kMiddle = 1, kHighest = 2 };

inline constexpr double kDegeneracyTolerance = 1e-10;

struct OccupationResult {
  double product = 0.0;  // P_l * P_r of the selected eigenstate
  int level = 1;         // index into the ascending spectrum
  double energy = 0.0;
  bool degenerate = false;
  // Product of the level the selected one is degenerate with, if any.
  std::optional<double> alternate;
};

OccupationResult occupation_product(const ThreeSiteParams& p, Level level = Level::kMiddle);

enum class SweepAxis { kDirectTransfer, kDetuning };

struct SweepPoint {
  double x = 0.0;
  double product = 0.0;
  int level = 1;
  bool degenerate = false;
  bool ambiguous = false;  // no clearly continuing eigenvector at this point
  std::optional<double> alternate;
};

// Parameters at sweep coordinate x. The detuning axis sets E_l - E_r = x
// around the base mean of E_l and E_r; the transfer axis sets s = x.
ThreeSiteParams sweep_params(const ThreeSiteParams& base, SweepAxis axis, double x);

// Occupation product along `grid` (ascending, non-empty). The middle level is
// selected at the first point and followed by maximal eigenvector overlap.
std::vector<SweepPoint> contraction_sweep(const ThreeSiteParams& base, SweepAxis axis,
                                          std::span<const double> grid);

}  // namespace ancnet::cell
