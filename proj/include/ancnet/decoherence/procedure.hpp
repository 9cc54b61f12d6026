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
#include <string_view>
#include <vector>

#include "ancnet/decoherence/master_equation.hpp"

namespace ancnet::decoherence {

struct DecoherenceParams {
  double tau_a = kInfiniteTime;
  double exchange_j = 1.0;
  double gate_time = 0.0;
  double dt = 0.0;

  // Throws std::invalid_argument.
  void validate() const;

  // gate_time = pi / J (one full flip), tau_a = gate_time / rt_inverse
  // (infinite for rt_inverse = 0), dt = gate_time / 2000.
  static DecoherenceParams for_time_ratio(double rt_inverse, double exchange_j = 1.0);
};

inline constexpr int kDefaultStepsPerGate = 2000;

// Operation Hamiltonian on the qubit while the ancilla is excited:
// (J/4)[[-1, 2], [2, -1]].
Matrix operation_block(double exchange_j);
// I_q (x) |0><0|_a + H_op (x) |1><1|_a, qubit slow.
ComplexOperator embedded_operation_hamiltonian(double exchange_j);
// I_q (x) pi_pulse_matrix on the ancilla.
ComplexOperator ancilla_pi_pulse();

struct TrajectoryPoint {
  double time;
  double purity;
  double trace;
};

struct ProcedureResult {
  DensityMatrix final_rho;      // qubit, after the ancilla is traced out
  double final_purity = 1.0;
  DensityMatrix full_rho;       // qubit (x) ancilla at the end
  double ancilla_after_return = 0.0;  // excited population after step (iii)
  double ancilla_final = 0.0;
  double product_residual = 0.0;      // max |full - final (x) |0><0||
  IntegrationStats stats;
  std::vector<TrajectoryPoint> trajectory;
};

struct ProcedureOptions {
  bool record_trajectory = false;
};

// pi-pulse, dissipative gating for gate_time, pi-pulse back, damping for
// gate_time. `w0` is the initial qubit state (2x2).
ProcedureResult run_operation_procedure(const DensityMatrix& w0, const DecoherenceParams& params,
                                        ProcedureOptions options = {});

struct CurvePoint {
  double rt_inverse;
  double purity;
  double trace_error;
  double min_eigenvalue;
};

// One procedure run per grid point starting from |0,0>. `templ` supplies J;
// gate_time defaults to pi / J and dt to gate_time / 2000 when left at 0.
std::vector<CurvePoint> purity_vs_time_ratio(const std::vector<double>& grid,
                                             const DecoherenceParams& templ = {});

enum class ReferenceInitial { kExcited, kSuperposition };
std::string_view to_string(ReferenceInitial initial);

// Amplitude damping of a bare two-level system for gate_time at each point.
std::vector<CurvePoint> two_level_reference(ReferenceInitial initial,
                                            const std::vector<double>& grid,
                                            const DecoherenceParams& templ = {});

// Throws std::invalid_argument unless non-empty, ascending and >= 0.
void validate_ratio_grid(const std::vector<double>& grid);

}  // namespace ancnet::decoherence
