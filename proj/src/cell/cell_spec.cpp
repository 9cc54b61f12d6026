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

#include "ancnet/cell/cell_spec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ancnet::cell {

Role fixed_role(int level) {
  switch (level) {
    case kSleepLevel: return Role::kSleep;
    case kPhaseLevel: return Role::kPhase;
    case kRotXLevel: return Role::kRotX;
    case kRotYLevel: return Role::kRotY;
    case kRotZLevel: return Role::kRotZ;
    case kMeasureLevel: return Role::kMeasure;
    default:
      if (level < 0) throw std::out_of_range("negative ancilla level");
      return Role::kPort;
  }
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::kSleep: return "sleep";
    case Role::kPhase: return "phase";
    case Role::kRotX: return "rot_x";
    case Role::kRotY: return "rot_y";
    case Role::kRotZ: return "rot_z";
    case Role::kMeasure: return "measure";
    case Role::kPort: return "port";
  }
  return "unknown";
}

std::optional<Role> role_from_string(std::string_view name) {
  for (Role r : {Role::kSleep, Role::kPhase, Role::kRotX, Role::kRotY, Role::kRotZ,
                 Role::kMeasure, Role::kPort}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

CellSpec::CellSpec(int m, std::vector<double> energies, std::map<int, Role> roles)
    : m_(m), energies_(std::move(energies)), roles_(std::move(roles)) {
  if (m_ < 0 || m_ > kMaxAncillas) {
    throw std::invalid_argument("ancilla count must lie in 0.." + std::to_string(kMaxAncillas));
  }
  if (static_cast<int>(energies_.size()) != m_ + 1) {
    throw std::invalid_argument("expected " + std::to_string(m_ + 1) + " level energies");
  }
  for (double e : energies_) {
    if (!std::isfinite(e)) throw std::invalid_argument("level energies must be finite");
  }
  for (int i = 1; i <= m_; ++i) {
    if (!(energies_[static_cast<std::size_t>(i)] > energies_[0])) {
      throw std::invalid_argument("E_0 must be strictly the lowest level energy");
    }
  }
  for (int i = 0; i <= m_; ++i) {
    for (int j = i + 1; j <= m_; ++j) {
      if (energies_[static_cast<std::size_t>(i)] == energies_[static_cast<std::size_t>(j)]) {
        throw std::invalid_argument("level energies must be pairwise distinct");
      }
    }
  }
  if (roles_.empty()) {
    for (int i = 0; i <= m_; ++i) roles_.emplace(i, fixed_role(i));
  }
  roles_[kSleepLevel] = Role::kSleep;
  for (const auto& [level, role] : roles_) {
    if (level < 0 || level > m_) {
      throw std::invalid_argument("role assigned to level " + std::to_string(level) +
                                  " outside 0..m");
    }
    if (role != fixed_role(level)) {
      throw std::invalid_argument("level " + std::to_string(level) + " must have role " +
                                  std::string(to_string(fixed_role(level))));
    }
  }
}

CellSpec CellSpec::standard(int m) {
  std::vector<double> e(static_cast<std::size_t>(std::max(m, 0) + 1));
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<double>(i);
  return CellSpec(m, std::move(e));
}

double CellSpec::energy(int level) const {
  if (level < 0 || level > m_) throw std::out_of_range("ancilla level out of range");
  return energies_[static_cast<std::size_t>(level)];
}

std::optional<Role> CellSpec::role(int level) const {
  auto it = roles_.find(level);
  if (it == roles_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> CellSpec::ports() const {
  std::vector<int> out;
  for (const auto& [level, role] : roles_) {
    if (role == Role::kPort) out.push_back(level);
  }
  return out;
}

Index CellSpec::index(int qubit, int level) const {
  if (qubit < 0 || qubit > 1) throw std::out_of_range("qubit value must be 0 or 1");
  if (level < 0 || level > m_) throw std::out_of_range("ancilla level out of range");
  return static_cast<Index>(qubit) * (m_ + 1) + level;
}

CellSpec CellSpec::with_energies(std::vector<double> energies) const {
  return CellSpec(m_, std::move(energies), roles_);
}

double CellSpec::min_spacing() const {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < energies_.size(); ++i) {
    for (std::size_t j = i + 1; j < energies_.size(); ++j) {
      gap = std::min(gap, std::abs(energies_[i] - energies_[j]));
    }
  }
  return gap;
}

std::string BasisLabel::str() const {
  return "|" + std::to_string(qubit) + "," + std::to_string(ancilla) + ">";
}

std::vector<BasisLabel> contracted_basis(const CellSpec& spec) {
  std::vector<BasisLabel> out;
  out.reserve(static_cast<std::size_t>(spec.dim()));
  for (int w = 0; w < 2; ++w) {
    for (int i = 0; i <= spec.m(); ++i) out.push_back({w, i});
  }
  return out;
}

std::vector<std::string> contracted_labels(const CellSpec& spec) {
  std::vector<std::string> out;
  for (const auto& l : contracted_basis(spec)) out.push_back(l.str());
  return out;
}

CellState::CellState(CellSpec spec, core::DensityMatrix rho)
    : spec_(std::move(spec)), rho_(std::move(rho)) {
  if (rho_.dim() != spec_.dim()) {
    throw std::invalid_argument("cell state dimension does not match 2(m+1)");
  }
}

CellState CellState::from_qubit(const CellSpec& spec, const core::Ket& qubit, int level) {
  if (qubit.dim() != 2) throw std::invalid_argument("qubit ket must be two-dimensional");
  core::Vector v = core::Vector::Zero(spec.dim());
  v(spec.index(0, level)) = qubit[0];
  v(spec.index(1, level)) = qubit[1];
  return CellState(spec, core::DensityMatrix::pure(core::Ket(v), contracted_labels(spec)));
}

double CellState::population(int qubit, int level) const {
  return rho_.population(spec_.index(qubit, level));
}

double CellState::ancilla_population(int level) const {
  return population(0, level) + population(1, level);
}

}  // namespace ancnet::cell
