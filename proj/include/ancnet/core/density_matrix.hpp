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

#include <string>
#include <vector>

#include "ancnet/core/operator.hpp"

namespace ancnet::core {

inline constexpr double kDensityHermitianTolerance = 1e-12;
inline constexpr double kDensityTraceTolerance = 1e-9;
inline constexpr double kDensityPositivityTolerance = 1e-9;

// Hermitian, unit-trace, positive semidefinite matrix over a labelled basis.
// The constructor enforces all three invariants; use `validate` to check a
// raw matrix without throwing.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries, std::vector<std::string> basis_labels = {});

  static DensityMatrix pure(const Ket& ket, std::vector<std::string> basis_labels = {});
  static DensityMatrix maximally_mixed(Index dim);

  Index dim() const noexcept { return entries_.rows(); }
  const Matrix& matrix() const noexcept { return entries_; }
  Complex operator()(Index row, Index col) const { return entries_(row, col); }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }

  double trace_error() const;
  double min_eigenvalue() const;
  double population(Index i) const { return entries_(i, i).real(); }

  // Empty string when `m` is a valid density matrix, else the first
  // violated invariant.
  static std::string validate(const Matrix& m);

 private:
  Matrix entries_;
  std::vector<std::string> labels_;
};

std::vector<std::string> numeric_labels(Index dim);

}  // namespace ancnet::core
