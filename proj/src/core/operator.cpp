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

#include "ancnet/core/operator.hpp"

#include <stdexcept>

namespace ancnet::core {

ComplexOperator::ComplexOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("operator must be a non-empty square matrix");
  }
  if (!entries_.allFinite()) {
    throw std::invalid_argument("operator has non-finite entries");
  }
}

ComplexOperator ComplexOperator::identity(Index dim) {
  return ComplexOperator(Matrix::Identity(dim, dim));
}

ComplexOperator ComplexOperator::zero(Index dim) {
  return ComplexOperator(Matrix::Zero(dim, dim));
}

ComplexOperator ComplexOperator::adjoint() const {
  return ComplexOperator(entries_.adjoint());
}

double ComplexOperator::unitarity_error() const {
  return max_abs(entries_.adjoint() * entries_ - Matrix::Identity(dim(), dim()));
}

double ComplexOperator::hermiticity_error() const {
  return max_abs(entries_ - entries_.adjoint());
}

ComplexOperator operator*(const ComplexOperator& a, const ComplexOperator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("operator product dimension mismatch");
  }
  return ComplexOperator(a.entries_ * b.entries_);
}

Ket::Ket(Vector amplitudes, bool normalized) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw std::invalid_argument("ket must be non-empty");
  if (!amplitudes_.allFinite()) throw std::invalid_argument("ket has non-finite amplitudes");
  if (normalized && std::abs(amplitudes_.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("ket is not normalized");
  }
}

Ket Ket::basis(Index dim, Index index) {
  if (index < 0 || index >= dim) throw std::out_of_range("basis index out of range");
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return Ket(std::move(v));
}

Ket Ket::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return Ket(amplitudes_ / n);
}

}  // namespace ancnet::core
