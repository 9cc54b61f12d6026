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

#include "ancnet/gates/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ancnet::gates {

using core::Complex;
using core::kI;
using core::Matrix;

namespace {

double wrap(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0.0) r += period;
  return r;
}

void require_positive(double rate, const char* what) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

char axis_letter(Axis axis) {
  switch (axis) {
    case Axis::kX: return 'X';
    case Axis::kY: return 'Y';
    case Axis::kZ: return 'Z';
  }
  return '?';
}

ComplexOperator swap_unitary(double theta) {
  const double c = std::cos(theta);
  const Complex mis = -kI * std::sin(theta);
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = c;
  u(1, 2) = mis;
  u(2, 1) = mis;
  u(2, 2) = c;
  u(3, 3) = 1.0;
  return ComplexOperator(std::move(u));
}

ComplexOperator rotation_unitary(Axis axis, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Matrix u(2, 2);
  switch (axis) {
    case Axis::kX:
      u << c, -kI * s,
           -kI * s, c;
      break;
    case Axis::kY:
      u << c, -s,
           s, c;
      break;
    case Axis::kZ:
      u << Complex(c, -s), 0.0,
           0.0, Complex(c, s);
      break;
  }
  return ComplexOperator(std::move(u));
}

ComplexOperator phase_unitary(double phi) {
  Matrix u = Matrix::Identity(2, 2);
  u(1, 1) = std::exp(kI * phi);
  return ComplexOperator(std::move(u));
}

ComplexOperator pi_pulse_matrix() {
  Matrix u(2, 2);
  u << 0.0, -1.0,
       1.0, 0.0;
  return ComplexOperator(std::move(u));
}

ComplexOperator transition_pulse(const cell::CellSpec& spec, int source, int target,
                                 SpinSelect spin) {
  if (source < 0 || source > spec.m() || target < 0 || target > spec.m()) {
    throw std::out_of_range("pi-pulse level outside 0..m");
  }
  if (source == target) throw std::invalid_argument("pi-pulse needs two distinct levels");
  Matrix u = Matrix::Identity(spec.dim(), spec.dim());
  const Matrix pulse = pi_pulse_matrix().matrix();
  for (int w = 0; w < 2; ++w) {
    if (spin == SpinSelect::kUp && w != 0) continue;
    const core::Index g = spec.index(w, source);
    const core::Index e = spec.index(w, target);
    u(g, g) = pulse(0, 0);
    u(g, e) = pulse(0, 1);
    u(e, g) = pulse(1, 0);
    u(e, e) = pulse(1, 1);
  }
  return ComplexOperator(std::move(u));
}

ComplexOperator pi_pulse_unitary(const cell::CellSpec& spec, int level) {
  if (level < 1 || level > spec.m()) {
    throw std::out_of_range("activation level must lie in 1..m");
  }
  return transition_pulse(spec, cell::kSleepLevel, level, SpinSelect::kBoth);
}

ComplexOperator conditioned_qubit_gate(const cell::CellSpec& spec, int level,
                                       const ComplexOperator& qubit_gate) {
  if (qubit_gate.dim() != 2) throw std::invalid_argument("qubit gate must be 2x2");
  Matrix u = Matrix::Identity(spec.dim(), spec.dim());
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      u(spec.index(a, level), spec.index(b, level)) = qubit_gate(a, b);
    }
  }
  return ComplexOperator(std::move(u));
}

ComplexOperator exchange_hamiltonian(double exchange_j) {
  Matrix h = Matrix::Zero(4, 4);
  const double q = 0.25 * exchange_j;
  h(0, 0) = -q;
  h(1, 1) = -q;
  h(1, 2) = 2.0 * q;
  h(2, 1) = 2.0 * q;
  h(2, 2) = -q;
  h(3, 3) = -q;
  return ComplexOperator(std::move(h));
}

ComplexOperator swap_window_hamiltonian(double exchange_j) {
  Matrix h = exchange_hamiltonian(exchange_j).matrix();
  h += 0.25 * exchange_j * Matrix::Identity(4, 4);
  return ComplexOperator(std::move(h));
}

ComplexOperator rotation_window_hamiltonian(Axis axis, double rate) {
  // exp(-i (rate/2) sigma t) = rotation_unitary(axis, rate * t)
  Matrix sigma(2, 2);
  switch (axis) {
    case Axis::kX: sigma << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::kY: sigma << 0.0, -kI, kI, 0.0; break;
    case Axis::kZ: sigma << 1.0, 0.0, 0.0, -1.0; break;
  }
  return ComplexOperator(0.5 * rate * sigma);
}

ComplexOperator phase_window_hamiltonian(double rate) {
  Matrix h = Matrix::Zero(2, 2);
  h(1, 1) = -rate;
  return ComplexOperator(std::move(h));
}

double swap_angle_for_time(double exchange_j, double t) { return 0.5 * exchange_j * t; }

double swap_time_for_angle(double exchange_j, double theta) {
  require_positive(exchange_j, "exchange energy");
  return 2.0 * wrap(theta, 2.0 * std::numbers::pi) / exchange_j;
}

double rotation_time_for_angle(double rate, double theta) {
  require_positive(rate, "rotation rate");
  return wrap(theta, 4.0 * std::numbers::pi) / rate;
}

double phase_time_for_angle(double rate, double phi) {
  require_positive(rate, "phase rate");
  return wrap(phi, 2.0 * std::numbers::pi) / rate;
}

}  // namespace ancnet::gates
