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

#include "ancnet/decoherence/master_equation.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "ancnet/common/error.hpp"
#include "ancnet/common/log.hpp"
#include "ancnet/core/linalg.hpp"

namespace ancnet::decoherence {

namespace {

constexpr double kDtSlack = 1e-12;

double symmetrize(Matrix& rho) {
  const double dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return dev;
}

double min_eig(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void check_trace(const Matrix& rho, IntegrationStats* stats) {
  const double err = std::abs(rho.trace() - core::Complex(1.0, 0.0));
  if (stats) stats->max_trace_error = std::max(stats->max_trace_error, err);
  if (!(err <= kTraceFailure)) {
    throw IntegrationError("trace drift " + std::to_string(err) +
                           " exceeds 1e-6; reduce the time step");
  }
}

}  // namespace

Matrix ancilla_lowering() {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = 1.0;
  return a;
}

Matrix ancilla_raising() { return ancilla_lowering().adjoint(); }

Matrix lindblad_rhs(const Matrix& rho, const Matrix& h, double tau_a) {
  if (rho.rows() != h.rows() || rho.rows() != rho.cols() || h.rows() != h.cols()) {
    throw std::invalid_argument("lindblad_rhs: dimension mismatch");
  }
  if (rho.rows() != 2 && rho.rows() != 4) {
    throw std::invalid_argument("lindblad_rhs: expects a 2- or 4-dimensional system");
  }
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > core::kHermitianTolerance) {
    throw std::invalid_argument("lindblad_rhs: Hamiltonian is not Hermitian");
  }
  if (!(tau_a > 0.0)) throw std::invalid_argument("lindblad_rhs: tau_a must be positive");

  Matrix out = -core::kI * (h * rho - rho * h);
  if (std::isinf(tau_a)) return out;

  Matrix a = ancilla_lowering();
  if (rho.rows() == 4) a = core::kron(Matrix::Identity(2, 2), a);
  const Matrix ad = a.adjoint();
  const Matrix ar = a * rho;
  const Matrix comm = ad * ar - ar * ad;  // [a^dag, a rho]
  out -= (0.5 / tau_a) * (comm + comm.adjoint());
  return out;
}

Matrix lindblad_rhs(const DensityMatrix& rho, const ComplexOperator& h, double tau_a) {
  return lindblad_rhs(rho.matrix(), h.matrix(), tau_a);
}

DensityMatrix integrate_master_equation(const DensityMatrix& rho0, const ComplexOperator& h,
                                        double tau_a, double duration, double dt,
                                        IntegrationStats* stats) {
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("duration must be finite and non-negative");
  }
  if (duration == 0.0) return rho0;
  if (!(dt > 0.0) || dt > duration / 1000.0 * (1.0 + kDtSlack)) {
    throw std::invalid_argument("dt must satisfy 0 < dt <= duration / 1000");
  }
  // Validates h and dims once.
  (void)lindblad_rhs(rho0, h, tau_a);

  const auto n = static_cast<std::size_t>(std::ceil(duration / dt * (1.0 - kDtSlack)));
  const double step = duration / static_cast<double>(n);
  const Matrix& hm = h.matrix();
  Matrix rho = rho0.matrix();
  double worst_sym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix k1 = lindblad_rhs(rho, hm, tau_a);
    const Matrix k2 = lindblad_rhs(rho + 0.5 * step * k1, hm, tau_a);
    const Matrix k3 = lindblad_rhs(rho + 0.5 * step * k2, hm, tau_a);
    const Matrix k4 = lindblad_rhs(rho + step * k3, hm, tau_a);
    rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    worst_sym = std::max(worst_sym, symmetrize(rho));
    check_trace(rho, stats);
  }
  if (worst_sym > 0.0) logger()->trace("symmetrization removed up to {:.3e}", worst_sym);
  if (stats) {
    stats->steps += n;
    stats->max_symmetrization = std::max(stats->max_symmetrization, worst_sym);
    stats->min_eigenvalue = min_eig(rho);
  }
  return DensityMatrix(std::move(rho), rho0.basis_labels());
}

LindbladGenerator::LindbladGenerator(Index dim) : dim_(dim), k_(dim, dim) {}

void LindbladGenerator::add_hamiltonian(const Sparse& h) {
  if (h.rows() != dim_ || h.cols() != dim_) throw std::invalid_argument("generator dim mismatch");
  k_ += h;
  has_h_ = true;
}

void LindbladGenerator::add_jump(const Sparse& l, double rate) {
  if (l.rows() != dim_ || l.cols() != dim_) throw std::invalid_argument("generator dim mismatch");
  if (!(rate >= 0.0)) throw std::invalid_argument("jump rate must be non-negative");
  if (rate == 0.0) return;
  const Sparse ldl = Sparse(l.adjoint()) * l;
  k_ -= core::Complex(0.0, 0.5 * rate) * ldl;
  jumps_.emplace_back(l, rate);
}

Matrix LindbladGenerator::apply(const Matrix& rho) const {
  const Matrix krho = -core::kI * (k_ * rho);
  Matrix out = krho + krho.adjoint();
  for (const auto& [l, rate] : jumps_) {
    const Matrix lr = l * rho;
    out += rate * (lr * l.adjoint());
  }
  return out;
}

Matrix integrate(const LindbladGenerator& gen, Matrix rho, double duration, std::size_t steps,
                 IntegrationStats* stats) {
  if (duration == 0.0 || gen.empty()) return rho;
  if (steps == 0) throw std::invalid_argument("integrate: zero steps");
  const double h = duration / static_cast<double>(steps);
  double worst_sym = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    const Matrix k1 = gen.apply(rho);
    const Matrix k2 = gen.apply(rho + 0.5 * h * k1);
    const Matrix k3 = gen.apply(rho + 0.5 * h * k2);
    const Matrix k4 = gen.apply(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    worst_sym = std::max(worst_sym, symmetrize(rho));
    check_trace(rho, stats);
  }
  if (stats) {
    stats->steps += steps;
    stats->max_symmetrization = std::max(stats->max_symmetrization, worst_sym);
  }
  return rho;
}

}  // namespace ancnet::decoherence
