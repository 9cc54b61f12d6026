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

#include "ancnet/core/density_matrix.hpp"

#include <stdexcept>

namespace ancnet::core {

namespace {

double smallest_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

std::vector<std::string> numeric_labels(Index dim) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::string DensityMatrix::validate(const Matrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) return "density matrix must be square and non-empty";
  if (!m.allFinite()) return "density matrix has non-finite entries";
  if (max_abs(m - m.adjoint()) > kDensityHermitianTolerance) return "density matrix is not Hermitian";
  if (std::abs(m.trace().real() - 1.0) > kDensityTraceTolerance) return "density matrix trace differs from 1";
  if (smallest_eigenvalue(m) < -kDensityPositivityTolerance) return "density matrix has a negative eigenvalue";
  return {};
}

DensityMatrix::DensityMatrix(Matrix entries, std::vector<std::string> basis_labels)
    : entries_(std::move(entries)), labels_(std::move(basis_labels)) {
  if (auto problem = validate(entries_); !problem.empty()) {
    throw std::invalid_argument(problem);
  }
  if (labels_.empty()) labels_ = numeric_labels(entries_.rows());
  if (static_cast<Index>(labels_.size()) != entries_.rows()) {
    throw std::invalid_argument("basis label count does not match dimension");
  }
}

DensityMatrix DensityMatrix::pure(const Ket& ket, std::vector<std::string> basis_labels) {
  const Vector& v = ket.amplitudes();
  Matrix m = v * v.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m), std::move(basis_labels));
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::trace_error() const {
  return std::abs(entries_.trace() - Complex{1.0, 0.0});
}

double DensityMatrix::min_eigenvalue() const {
  return smallest_eigenvalue(entries_);
}

}  // namespace ancnet::core
