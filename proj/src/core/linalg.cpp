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

#include "ancnet/core/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ancnet::core {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexOperator tensor_product(const ComplexOperator& a, const ComplexOperator& b,
                               std::size_t cap) {
  const auto da = static_cast<std::size_t>(a.dim());
  const auto db = static_cast<std::size_t>(b.dim());
  if (da > cap / db) {
    throw std::length_error("tensor product dimension " + std::to_string(da) + "x" +
                            std::to_string(db) + " exceeds cap " + std::to_string(cap));
  }
  return ComplexOperator(kron(a.matrix(), b.matrix()));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::string> labels;
  labels.reserve(a.basis_labels().size() * b.basis_labels().size());
  for (const auto& la : a.basis_labels()) {
    for (const auto& lb : b.basis_labels()) labels.push_back(la + "," + lb);
  }
  Matrix m = kron(a.matrix(), b.matrix());
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m), std::move(labels));
}

HermitianSpectrum hermitian_spectrum(const ComplexOperator& h) {
  if (!h.is_hermitian()) throw std::invalid_argument("operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexOperator unitary_propagator(const ComplexOperator& h, double t) {
  const auto spectrum = hermitian_spectrum(h);
  Vector phases(spectrum.values.size());
  for (Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(-kI * spectrum.values(k) * t);
  }
  return ComplexOperator(spectrum.vectors * phases.asDiagonal() * spectrum.vectors.adjoint());
}

DensityMatrix evolve_unitary(const DensityMatrix& rho, const ComplexOperator& h, double t) {
  if (rho.dim() != h.dim()) throw std::invalid_argument("Hamiltonian/state dimension mismatch");
  if (t == 0.0) return rho;
  const Matrix u = unitary_propagator(h, t).matrix();
  Matrix out = u * rho.matrix() * u.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out), rho.basis_labels());
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().cwiseAbs2().sum();
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Index> dims,
                            std::span<const std::size_t> keep) {
  if (dims.empty()) throw std::invalid_argument("partial_trace: empty tensor structure");
  Index total = 1;
  for (Index d : dims) {
    if (d <= 0) throw std::invalid_argument("partial_trace: non-positive factor dimension");
    total *= d;
  }
  if (total != rho.dim()) {
    throw std::invalid_argument("partial_trace: factor dimensions do not multiply to state dimension");
  }
  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw std::invalid_argument("partial_trace: subsystem index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: subsystem listed twice");
    kept[k] = true;
  }
  if (keep.empty()) throw std::invalid_argument("partial_trace: nothing to keep");

  // Row-major strides; first factor slowest.
  std::vector<Index> stride(n);
  Index s = 1;
  for (std::size_t k = n; k-- > 0;) {
    stride[k] = s;
    s *= dims[k];
  }
  Index kept_dim = 1;
  std::vector<Index> kept_stride(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    if (kept[k]) {
      kept_stride[k] = kept_dim;
      kept_dim *= dims[k];
    }
  }
  // Split every flat index into a kept part and a traced-out part.
  std::vector<Index> kept_part(static_cast<std::size_t>(total));
  std::vector<Index> traced_part(static_cast<std::size_t>(total));
  for (Index idx = 0; idx < total; ++idx) {
    Index kp = 0;
    Index tp = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Index digit = (idx / stride[k]) % dims[k];
      if (kept[k]) {
        kp += digit * kept_stride[k];
      } else {
        tp = tp * dims[k] + digit;
      }
    }
    kept_part[static_cast<std::size_t>(idx)] = kp;
    traced_part[static_cast<std::size_t>(idx)] = tp;
  }
  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  const Matrix& m = rho.matrix();
  for (Index r = 0; r < total; ++r) {
    for (Index c = 0; c < total; ++c) {
      if (traced_part[static_cast<std::size_t>(r)] == traced_part[static_cast<std::size_t>(c)]) {
        out(kept_part[static_cast<std::size_t>(r)], kept_part[static_cast<std::size_t>(c)]) += m(r, c);
      }
    }
  }
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out));
}

}  // namespace ancnet::core
