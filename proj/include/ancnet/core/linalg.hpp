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
#include <span>
#include <vector>

#include "ancnet/core/density_matrix.hpp"
#include "ancnet/core/operator.hpp"

namespace ancnet::core {

inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 20;

// Kronecker product with the row-major convention index = i_a * dim_b + i_b,
// so the left operand is the slow tensor factor. Products larger than `cap`
// are rejected with std::length_error.
ComplexOperator tensor_product(const ComplexOperator& a, const ComplexOperator& b,
                               std::size_t cap = kDefaultDimensionCap);
Matrix kron(const Matrix& a, const Matrix& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

struct HermitianSpectrum {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // columns
};
HermitianSpectrum hermitian_spectrum(const ComplexOperator& h);

// exp(-i h t) for Hermitian h (hbar = 1), via eigendecomposition.
ComplexOperator unitary_propagator(const ComplexOperator& h, double t);

// e^{-iHt} rho e^{+iHt}. Throws std::invalid_argument for non-Hermitian h
// or mismatched dimensions.
DensityMatrix evolve_unitary(const DensityMatrix& rho, const ComplexOperator& h, double t);

// Tr(rho^2)
double purity(const DensityMatrix& rho);

// Reduced state over the subsystems listed in `keep` (ascending or not; the
// result keeps the original factor order). `dims` lists the tensor factors
// slowest first and must multiply to rho.dim().
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Index> dims,
                            std::span<const std::size_t> keep);

}  // namespace ancnet::core
