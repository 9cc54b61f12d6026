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

#include "ancnet/core/types.hpp"

namespace ancnet::core {

inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;

// Square complex matrix with finite entries. Gates, Hamiltonians and
// ladder operators are all carried as ComplexOperator.
class ComplexOperator {
 public:
  // Throws std::invalid_argument for empty, non-square or non-finite input.
  explicit ComplexOperator(Matrix entries);

  static ComplexOperator identity(Index dim);
  static ComplexOperator zero(Index dim);

  Index dim() const noexcept { return entries_.rows(); }
  const Matrix& matrix() const noexcept { return entries_; }
  Complex operator()(Index row, Index col) const { return entries_(row, col); }

  ComplexOperator adjoint() const;

  // max |U^dagger U - I|
  double unitarity_error() const;
  bool is_unitary(double tol = kUnitaryTolerance) const {
    return unitarity_error() <= tol;
  }
  // max |H - H^dagger|
  double hermiticity_error() const;
  bool is_hermitian(double tol = kHermitianTolerance) const {
    return hermiticity_error() <= tol;
  }

  friend ComplexOperator operator*(const ComplexOperator& a, const ComplexOperator& b);

 private:
  Matrix entries_;
};

// Pure state. `normalized` kets are checked to unit norm within 1e-9.
class Ket {
 public:
  explicit Ket(Vector amplitudes, bool normalized = true);

  static Ket basis(Index dim, Index index);

  Index dim() const noexcept { return amplitudes_.size(); }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](Index i) const { return amplitudes_(i); }
  double norm() const { return amplitudes_.norm(); }
  Ket normalized() const;

 private:
  Vector amplitudes_;
};

}  // namespace ancnet::core
