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

#include <limits>
#include <vector>

#include <Eigen/SparseCore>

#include "ancnet/core/density_matrix.hpp"
#include "ancnet/core/operator.hpp"

namespace ancnet::decoherence {

using core::ComplexOperator;
using core::DensityMatrix;
using core::Index;
using core::Matrix;

inline constexpr double kInfiniteTime = std::numeric_limits<double>::infinity();
inline constexpr double kTraceFailure = 1e-6;

// Ancilla lowering operator |0><1| and its adjoint.
Matrix ancilla_lowering();
Matrix ancilla_raising();

// dRho/dt = -i[H, rho] - (1/2 tau_a)([a^dag, a rho] + h.c.) with `a` acting on
// the ancilla factor. Accepts dim 4 (qubit (x) ancilla, qubit slow) or dim 2
// (bare ancilla). tau_a = infinity switches the dissipator off.
// Throws std::invalid_argument for non-Hermitian h, bad dims or tau_a <= 0.
Matrix lindblad_rhs(const DensityMatrix& rho, const ComplexOperator& h, double tau_a);
Matrix lindblad_rhs(const Matrix& rho, const Matrix& h, double tau_a);

struct IntegrationStats {
  std::size_t steps = 0;
  double max_trace_error = 0.0;       // over every step
  double max_symmetrization = 0.0;    // largest |rho - rho^dag| removed
  double min_eigenvalue = 1.0;        // of the final state
};

// Fixed-step RK4 over `duration` with step duration / ceil(duration / dt).
// Throws std::invalid_argument if dt > duration / 1000 and IntegrationError
// when the trace drifts beyond 1e-6.
DensityMatrix integrate_master_equation(const DensityMatrix& rho0, const ComplexOperator& h,
                                        double tau_a, double duration, double dt,
                                        IntegrationStats* stats = nullptr);

// General form for the schedule simulator:
//   drho/dt = -i(K rho - rho K^dag) + sum_j rate_j L_j rho L_j^dag,
//   K = H - (i/2) sum_j rate_j L_j^dag L_j.
class LindbladGenerator {
 public:
  using Sparse = Eigen::SparseMatrix<core::Complex>;

  explicit LindbladGenerator(Index dim);

  Index dim() const noexcept { return dim_; }
  void add_hamiltonian(const Sparse& h);
  void add_jump(const Sparse& l, double rate);

  Matrix apply(const Matrix& rho) const;
  bool empty() const noexcept { return !has_h_ && jumps_.empty(); }

 private:
  Index dim_;
  bool has_h_ = false;
  Sparse k_;
  std::vector<std::pair<Sparse, double>> jumps_;
};

// RK4 with n steps over `duration`, symmetrized after each step.
Matrix integrate(const LindbladGenerator& gen, Matrix rho, double duration, std::size_t steps,
                 IntegrationStats* stats = nullptr);

}  // namespace ancnet::decoherence
