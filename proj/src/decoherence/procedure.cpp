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

#include "ancnet/decoherence/procedure.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ancnet/core/linalg.hpp"
#include "ancnet/gates/gates.hpp"

namespace ancnet::decoherence {

namespace {

constexpr std::array<core::Index, 2> kDims{2, 2};
constexpr std::array<std::size_t, 1> kKeepQubit{0};

DecoherenceParams fill_defaults(DecoherenceParams p) {
  if (p.gate_time == 0.0) p.gate_time = std::numbers::pi / p.exchange_j;
  if (p.dt == 0.0) p.dt = p.gate_time / kDefaultStepsPerGate;
  return p;
}

DensityMatrix qubit_part(const DensityMatrix& full) {
  return core::partial_trace(full, kDims, kKeepQubit);
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexOperator& u) {
  Matrix r = u.matrix() * rho.matrix() * u.matrix().adjoint();
  r = (0.5 * (r + r.adjoint())).eval();
  return DensityMatrix(std::move(r));
}

double excited_population(const DensityMatrix& full) { return full.population(1) + full.population(3); }

}  // namespace

void DecoherenceParams::validate() const {
  if (!(tau_a > 0.0)) throw std::invalid_argument("tau_a must be positive");
  if (!(exchange_j > 0.0) || !std::isfinite(exchange_j)) {
    throw std::invalid_argument("exchange energy J must be positive and finite");
  }
  if (!(gate_time > 0.0) || !std::isfinite(gate_time)) {
    throw std::invalid_argument("gate_time must be positive and finite");
  }
  if (!(dt > 0.0) || dt > gate_time / 1000.0 * (1.0 + 1e-12)) {
    throw std::invalid_argument("dt must satisfy 0 < dt <= gate_time / 1000");
  }
}

DecoherenceParams DecoherenceParams::for_time_ratio(double rt_inverse, double exchange_j) {
  if (!(rt_inverse >= 0.0) || !std::isfinite(rt_inverse)) {
    throw std::invalid_argument("inverse time ratio must be finite and >= 0");
  }
  DecoherenceParams p;
  p.exchange_j = exchange_j;
  p = fill_defaults(p);
  p.tau_a = rt_inverse == 0.0 ? kInfiniteTime : p.gate_time / rt_inverse;
  return p;
}

Matrix operation_block(double exchange_j) {
  Matrix h(2, 2);
  h << -1.0, 2.0,
       2.0, -1.0;
  return 0.25 * exchange_j * h;
}

ComplexOperator embedded_operation_hamiltonian(double exchange_j) {
  Matrix p0 = Matrix::Zero(2, 2);
  Matrix p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return ComplexOperator(core::kron(Matrix::Identity(2, 2), p0) +
                         core::kron(operation_block(exchange_j), p1));
}

ComplexOperator ancilla_pi_pulse() {
  return ComplexOperator(core::kron(Matrix::Identity(2, 2), gates::pi_pulse_matrix().matrix()));
}

ProcedureResult run_operation_procedure(const DensityMatrix& w0, const DecoherenceParams& params,
                                        ProcedureOptions options) {
  if (w0.dim() != 2) throw std::invalid_argument("initial qubit state must be 2x2");
  params.validate();
  Matrix ground = Matrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  const DensityMatrix ancilla0(ground);

  ProcedureResult res{w0, 1.0, core::tensor_product(w0, ancilla0), 0, 0, 0, {}, {}};
  auto sample = [&](double t, const DensityMatrix& full) {
    if (!options.record_trajectory) return;
    res.trajectory.push_back({t, core::purity(qubit_part(full)), full.matrix().trace().real()});
  };

  const ComplexOperator pulse = ancilla_pi_pulse();
  const ComplexOperator h_op = embedded_operation_hamiltonian(params.exchange_j);
  const ComplexOperator h_zero = ComplexOperator::zero(4);
  const double t = params.gate_time;

  DensityMatrix rho = res.full_rho;
  sample(0.0, rho);
  rho = conjugate(rho, pulse);                                                   // (i)
  rho = integrate_master_equation(rho, h_op, params.tau_a, t, params.dt, &res.stats);  // (ii)
  sample(t, rho);
  const double min_after_gate = res.stats.min_eigenvalue;
  rho = conjugate(rho, pulse);                                                   // (iii)
  res.ancilla_after_return = excited_population(rho);
  rho = integrate_master_equation(rho, h_zero, params.tau_a, t, params.dt, &res.stats);  // (iv)
  sample(2.0 * t, rho);
  res.stats.min_eigenvalue = std::min(min_after_gate, res.stats.min_eigenvalue);

  res.full_rho = rho;
  res.final_rho = qubit_part(rho);
  res.final_purity = core::purity(res.final_rho);
  res.ancilla_final = excited_population(rho);
  const DensityMatrix reset = core::tensor_product(res.final_rho, ancilla0);
  res.product_residual = core::max_abs(rho.matrix() - reset.matrix());
  return res;
}

void validate_ratio_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i])) {
      throw std::invalid_argument("grid values must be finite and >= 0");
    }
    if (i > 0 && grid[i] < grid[i - 1]) throw std::invalid_argument("grid must be sorted ascending");
  }
}

std::vector<CurvePoint> purity_vs_time_ratio(const std::vector<double>& grid,
                                             const DecoherenceParams& templ) {
  validate_ratio_grid(grid);
  const DensityMatrix start = DensityMatrix::pure(core::Ket::basis(2, 0));
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double r : grid) {
    DecoherenceParams p = fill_defaults(templ);
    p.tau_a = r == 0.0 ? kInfiniteTime : p.gate_time / r;
    const ProcedureResult res = run_operation_procedure(start, p);
    out.push_back({r, res.final_purity, res.stats.max_trace_error, res.stats.min_eigenvalue});
  }
  return out;
}

std::string_view to_string(ReferenceInitial initial) {
  return initial == ReferenceInitial::kExcited ? "excited" : "superposition";
}

std::vector<CurvePoint> two_level_reference(ReferenceInitial initial,
                                            const std::vector<double>& grid,
                                            const DecoherenceParams& templ) {
  validate_ratio_grid(grid);
  core::Vector v = core::Vector::Zero(2);
  if (initial == ReferenceInitial::kExcited) {
    v(1) = 1.0;
  } else {
    v(0) = v(1) = std::sqrt(0.5);
  }
  const DensityMatrix start = DensityMatrix::pure(core::Ket(v));
  const ComplexOperator h_zero = ComplexOperator::zero(2);
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double r : grid) {
    DecoherenceParams p = fill_defaults(templ);
    p.tau_a = r == 0.0 ? kInfiniteTime : p.gate_time / r;
    p.validate();
    IntegrationStats stats;
    const DensityMatrix rho =
        integrate_master_equation(start, h_zero, p.tau_a, p.gate_time, p.dt, &stats);
    out.push_back({r, core::purity(rho), stats.max_trace_error, stats.min_eigenvalue});
  }
  return out;
}

}  // namespace ancnet::decoherence
