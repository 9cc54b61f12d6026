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

#include "ancnet/network/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "ancnet/common/error.hpp"
#include "ancnet/common/rng.hpp"
#include "ancnet/core/linalg.hpp"
#include "ancnet/gates/gates.hpp"
#include "ancnet/network/validator.hpp"

namespace ancnet::network {

namespace {

using core::Index;
using core::Matrix;
using core::Vector;
using Sparse = decoherence::LindbladGenerator::Sparse;

constexpr double kTimeTolerance = 1e-12;

// Product space of the touched cells, each restricted to the levels the
// schedule uses. Slot 0 is the slowest factor; inside a slot the qubit is
// slower than the level.
class Register {
 public:
  Register(const PulseSchedule& s, const LatticeTopology& topo) : topo_(topo) {
    std::set<std::size_t> extra;
    for (const Event& e : s.events) {
      extra.insert(e.cell);
      if (e.partner) extra.insert(*e.partner);
    }
    cells_ = s.placement;
    for (std::size_t c : s.placement) extra.erase(c);
    cells_.insert(cells_.end(), extra.begin(), extra.end());

    levels_.assign(cells_.size(), {0});
    for (const Event& e : s.events) {
      auto add = [&](std::size_t cell, int level) {
        auto& l = levels_[slot(cell)];
        if (std::find(l.begin(), l.end(), level) == l.end()) l.push_back(level);
      };
      add(e.cell, e.ancilla);
      if (e.kind == EventKind::kPiPulse) add(e.cell, e.source);
      if (e.partner) add(*e.partner, e.partner_ancilla);
    }
    for (auto& l : levels_) std::sort(l.begin(), l.end());

    dim_ = 1;
    strides_.assign(cells_.size(), 1);
    for (std::size_t k = cells_.size(); k-- > 0;) {
      strides_[k] = dim_;
      const Index d = local_dim(static_cast<int>(k));
      if (dim_ > static_cast<Index>(core::kDefaultDimensionCap) / d) {
        throw Error("schedule touches too many cells to simulate");
      }
      dim_ *= d;
    }
  }

  Index dim() const { return dim_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<std::size_t>& cells() const { return cells_; }
  const cell::CellSpec& spec(int s) const { return topo_.cell(cells_[s]); }
  const std::vector<int>& levels(int s) const { return levels_[s]; }
  Index local_dim(int s) const { return 2 * static_cast<Index>(levels_[s].size()); }

  int slot(std::size_t cell) const {
    auto it = std::find(cells_.begin(), cells_.end(), cell);
    if (it == cells_.end()) throw std::logic_error("cell not in register");
    return static_cast<int>(it - cells_.begin());
  }

  Index local(int s, int w, int level) const {
    const auto& l = levels_[s];
    const auto pos = std::find(l.begin(), l.end(), level) - l.begin();
    return w * static_cast<Index>(l.size()) + pos;
  }
  int qubit_of(int s, Index loc) const { return static_cast<int>(loc / levels_[s].size()); }
  int level_of(int s, Index loc) const { return levels_[s][loc % levels_[s].size()]; }
  Index digit(Index global, int s) const { return (global / strides_[s]) % local_dim(s); }

  // Global offset of each combined local index over `slots` (first slowest).
  std::vector<Index> offsets(const std::vector<int>& slots) const {
    std::vector<Index> out{0};
    for (int s : slots) {
      std::vector<Index> next;
      for (Index base : out) {
        for (Index j = 0; j < local_dim(s); ++j) next.push_back(base + j * strides_[s]);
      }
      out = std::move(next);
    }
    return out;
  }

  // Global indices whose digits in `slots` are zero.
  std::vector<Index> bases(const std::vector<int>& slots) const {
    std::vector<Index> out;
    for (Index g = 0; g < dim_; ++g) {
      bool zero = true;
      for (int s : slots) zero = zero && digit(g, s) == 0;
      if (zero) out.push_back(g);
    }
    return out;
  }

 private:
  const LatticeTopology& topo_;
  std::vector<std::size_t> cells_;
  std::vector<std::vector<int>> levels_;
  std::vector<Index> strides_;
  Index dim_ = 1;
};

// A local operator on one or two register slots.
struct LocalOp {
  std::vector<int> slots;
  Matrix u;
  std::vector<Index> offsets;
  std::vector<Index> bases;
};

LocalOp make_local(const Register& reg, std::vector<int> slots, Matrix u) {
  LocalOp op{std::move(slots), std::move(u), {}, {}};
  op.offsets = reg.offsets(op.slots);
  op.bases = reg.bases(op.slots);
  return op;
}

// Rows of x <- U acting on the slots.
void apply_rows(const LocalOp& op, Matrix& x) {
  const Index n = static_cast<Index>(op.offsets.size());
  Matrix block(n, x.cols());
  for (Index b : op.bases) {
    for (Index j = 0; j < n; ++j) block.row(j) = x.row(b + op.offsets[j]);
    const Matrix out = op.u * block;
    for (Index j = 0; j < n; ++j) x.row(b + op.offsets[j]) = out.row(j);
  }
}

Sparse embed(const LocalOp& op) {
  std::vector<Eigen::Triplet<core::Complex>> trip;
  const Index n = static_cast<Index>(op.offsets.size());
  for (Index b : op.bases) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (op.u(i, j) != core::Complex(0.0, 0.0)) {
          trip.emplace_back(b + op.offsets[i], b + op.offsets[j], op.u(i, j));
        }
      }
    }
  }
  const Index d = op.bases.size() * n;
  Sparse m(d, d);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

// Qubit operator `q` (2^k) placed on the sector where slot k sits on
// sector_levels[k]; `identity_elsewhere` picks the background.
Matrix sector_operator(const Register& reg, const std::vector<int>& slots,
                       const std::vector<int>& sector_levels, const Matrix& q,
                       bool identity_elsewhere) {
  Index d = 1;
  for (int s : slots) d *= reg.local_dim(s);
  Matrix m = identity_elsewhere ? Matrix(Matrix::Identity(d, d)) : Matrix(Matrix::Zero(d, d));
  const int k = static_cast<int>(slots.size());
  const int nq = 1 << k;
  auto index = [&](int bits) {
    Index idx = 0;
    for (int t = 0; t < k; ++t) {
      const int w = (bits >> (k - 1 - t)) & 1;
      idx = idx * reg.local_dim(slots[t]) + reg.local(slots[t], w, sector_levels[t]);
    }
    return idx;
  };
  for (int a = 0; a < nq; ++a) {
    for (int b = 0; b < nq; ++b) m(index(a), index(b)) = q(a, b);
  }
  return m;
}

Matrix restrict_cell(const Register& reg, int s, const Matrix& full) {
  const auto& spec = reg.spec(s);
  const Index d = reg.local_dim(s);
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      m(i, j) = full(spec.index(reg.qubit_of(s, i), reg.level_of(s, i)),
                     spec.index(reg.qubit_of(s, j), reg.level_of(s, j)));
    }
  }
  return m;
}

struct Prepared {
  std::optional<LocalOp> unitary;   // pulses and windows
  std::optional<Sparse> hamiltonian;  // windows, noisy mode
  std::vector<int> slots;
};

class Engine {
 public:
  Engine(const PulseSchedule& s, const LatticeTopology& topo, const std::vector<core::Ket>& initial,
         const SimulationOptions& opt)
      : s_(s), topo_(topo), reg_(s, topo), noise_(opt.noise) {
    if (!initial.empty() && initial.size() != s.placement.size()) {
      throw std::invalid_argument("one initial state per placed qubit required");
    }
    if (noise_) {
      if (!(noise_->tau_a > 0.0)) throw std::invalid_argument("tau_a must be positive");
      if (!(noise_->dt > 0.0)) throw std::invalid_argument("dt must be positive");
      if (reg_.dim() > kNoisyDimensionCap) {
        throw Error(fmt::format("noisy simulation needs dimension {} > {}", reg_.dim(),
                                kNoisyDimensionCap));
      }
    }
    psi0_ = Vector::Zero(reg_.dim());
    psi0_(0) = 1.0;
    for (std::size_t q = 0; q < initial.size(); ++q) {
      if (initial[q].dim() != 2) throw std::invalid_argument("initial qubit states must be 2-dim");
      Matrix u = Matrix::Zero(2, 2);
      u.col(0) = initial[q].amplitudes();
      u(0, 1) = -std::conj(u(1, 0));
      u(1, 1) = std::conj(u(0, 0));
      const int slot = static_cast<int>(q);
      Matrix m = sector_operator(reg_, {slot}, {0}, u, true);
      Matrix x = psi0_;
      apply_rows(make_local(reg_, {slot}, std::move(m)), x);
      psi0_ = x.col(0);
    }
    prepare();
  }

  const Register& reg() const { return reg_; }

  struct Outcome {
    Matrix state;  // column vector (noiseless) or density matrix
    std::vector<CellMeasurement> measurements;
    decoherence::IntegrationStats stats;
  };

  Outcome run(std::uint64_t seed, bool noisy) const {
    Rng rng(seed);
    Outcome out;
    Matrix x = noisy ? Matrix(psi0_ * psi0_.adjoint()) : Matrix(psi0_);
    double now = 0.0;
    for (std::size_t i = 0; i < s_.events.size(); ++i) {
      const Event& e = s_.events[i];
      if (noisy) {
        evolve(x, now, e.start_time, i, out.stats);
        now = std::max(now, e.start_time);
      }
      switch (e.kind) {
        case EventKind::kPiPulse:
          apply(prep_[i].unitary.value(), x, noisy);
          break;
        case EventKind::kRotationWindow:
        case EventKind::kPhaseWindow:
        case EventKind::kGatingWindow:
          if (!noisy) apply(prep_[i].unitary.value(), x, false);
          break;
        case EventKind::kReadout:
          out.measurements.push_back(measure(i, x, noisy, rng));
          break;
        case EventKind::kDampingWindow:
          break;
      }
    }
    if (noisy) evolve(x, now, s_.end_time(), s_.events.size(), out.stats);
    out.state = std::move(x);
    return out;
  }

 private:
  void prepare() {
    const auto& t = s_.timing;
    prep_.resize(s_.events.size());
    for (std::size_t i = 0; i < s_.events.size(); ++i) {
      const Event& e = s_.events[i];
      Prepared& p = prep_[i];
      const int a = reg_.slot(e.cell);
      p.slots = {a};
      switch (e.kind) {
        case EventKind::kPiPulse: {
          const auto spin = e.spin_up_only ? gates::SpinSelect::kUp : gates::SpinSelect::kBoth;
          const Matrix full = gates::transition_pulse(reg_.spec(a), e.source, e.ancilla, spin).matrix();
          p.unitary = make_local(reg_, {a}, restrict_cell(reg_, a, full));
          break;
        }
        case EventKind::kRotationWindow:
          p.unitary = make_local(reg_, {a},
                                 sector_operator(reg_, {a}, {e.ancilla},
                                                 gates::rotation_unitary(e.axis, e.theta).matrix(), true));
          if (noise_) {
            p.hamiltonian = embed(make_local(
                reg_, {a},
                sector_operator(reg_, {a}, {e.ancilla},
                                gates::rotation_window_hamiltonian(e.axis, t.rotation_rate).matrix(),
                                false)));
          }
          break;
        case EventKind::kPhaseWindow:
          p.unitary = make_local(
              reg_, {a}, sector_operator(reg_, {a}, {e.ancilla}, gates::phase_unitary(e.phi).matrix(), true));
          if (noise_) {
            p.hamiltonian = embed(make_local(
                reg_, {a},
                sector_operator(reg_, {a}, {e.ancilla},
                                gates::phase_window_hamiltonian(t.phase_rate).matrix(), false)));
          }
          break;
        case EventKind::kGatingWindow: {
          const int b = reg_.slot(*e.partner);
          p.slots = {a, b};
          const std::vector<int> sector{e.ancilla, e.partner_ancilla};
          p.unitary = make_local(reg_, {a, b},
                                 sector_operator(reg_, {a, b}, sector,
                                                 gates::swap_unitary(e.theta).matrix(), true));
          if (noise_) {
            p.hamiltonian = embed(make_local(
                reg_, {a, b},
                sector_operator(reg_, {a, b}, sector,
                                gates::swap_window_hamiltonian(t.exchange_j).matrix(), false)));
          }
          break;
        }
        case EventKind::kReadout:
        case EventKind::kDampingWindow:
          break;
      }
    }
    if (noise_) {
      for (int s = 0; s < static_cast<int>(reg_.size()); ++s) {
        std::vector<Sparse> jumps;
        for (int level : reg_.levels(s)) {
          if (level == 0) continue;
          Matrix l = Matrix::Zero(reg_.local_dim(s), reg_.local_dim(s));
          for (int w = 0; w < 2; ++w) l(reg_.local(s, w, 0), reg_.local(s, w, level)) = 1.0;
          jumps.push_back(embed(make_local(reg_, {s}, std::move(l))));
        }
        jumps_.push_back(std::move(jumps));
      }
    }
  }

  static void apply(const LocalOp& op, Matrix& x, bool density) {
    apply_rows(op, x);
    if (!density) return;
    Matrix y = x.adjoint();
    apply_rows(op, y);
    x = std::move(y);
  }

  // Continuous evolution from t0 to t1 under every started event (index < i)
  // covering each sub-interval.
  void evolve(Matrix& rho, double t0, double t1, std::size_t i,
              decoherence::IntegrationStats& stats) const {
    if (!(t1 > t0 + kTimeTolerance)) return;
    std::vector<double> cuts{t0, t1};
    for (std::size_t k = 0; k < i; ++k) {
      for (double t : {s_.events[k].start_time, s_.events[k].end_time()}) {
        if (t > t0 && t < t1) cuts.push_back(t);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const double rate = std::isinf(noise_->tau_a) ? 0.0 : 1.0 / noise_->tau_a;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double u = cuts[c], v = cuts[c + 1];
      if (v - u <= kTimeTolerance) continue;
      decoherence::LindbladGenerator gen(reg_.dim());
      std::set<int> damped;
      for (std::size_t k = 0; k < i; ++k) {
        const Event& e = s_.events[k];
        if (e.kind == EventKind::kPiPulse || e.duration <= 0.0) continue;
        if (e.start_time > u + kTimeTolerance || e.end_time() < v - kTimeTolerance) continue;
        if (prep_[k].hamiltonian) gen.add_hamiltonian(*prep_[k].hamiltonian);
        for (int s : prep_[k].slots) damped.insert(s);
      }
      if (rate > 0.0) {
        for (int s : damped) {
          for (const auto& l : jumps_[s]) gen.add_jump(l, rate);
        }
      }
      const auto steps = static_cast<std::size_t>(std::ceil((v - u) / noise_->dt));
      rho = decoherence::integrate(gen, std::move(rho), v - u, std::max<std::size_t>(steps, 1), &stats);
    }
  }

  CellMeasurement measure(std::size_t i, Matrix& x, bool density, Rng& rng) const {
    const Event& e = s_.events[i];
    const int s = reg_.slot(e.cell);
    auto weight = [&](int level) {
      double w = 0.0;
      for (Index g = 0; g < reg_.dim(); ++g) {
        if (reg_.level_of(s, reg_.digit(g, s)) != level) continue;
        w += density ? x(g, g).real() : std::norm(x(g, 0));
      }
      return w;
    };
    const double up = weight(e.ancilla);
    const double down = weight(0);
    const double total = up + down;
    if (!(total > 0.0)) throw Error("readout found no weight on ancilla 0 or 5");
    CellMeasurement m{i, e.cell, -1, 0, up / total, down / total};
    for (std::size_t q = 0; q < s_.placement.size(); ++q) {
      if (s_.placement[q] == e.cell) m.qubit = static_cast<int>(q);
    }
    m.outcome = rng.uniform() < m.p0 ? 0 : 1;
    const int keep = m.outcome == 0 ? e.ancilla : 0;
    const double norm = m.outcome == 0 ? up : down;
    for (Index g = 0; g < reg_.dim(); ++g) {
      if (reg_.level_of(s, reg_.digit(g, s)) == keep) continue;
      x.row(g).setZero();
      if (density) x.col(g).setZero();
    }
    x /= density ? norm : std::sqrt(norm);
    return m;
  }

  const PulseSchedule& s_;
  const LatticeTopology& topo_;
  Register reg_;
  std::optional<NoiseModel> noise_;
  Vector psi0_;
  std::vector<Prepared> prep_;
  std::vector<std::vector<Sparse>> jumps_;
};

struct Reduced {
  Matrix rho;
  std::optional<Vector> sleeping;
  double excitation;
};

Reduced reduce(const Register& reg, const Matrix& x, bool density) {
  const int n = static_cast<int>(reg.size());
  const Index dq = Index{1} << n;
  const Index d = reg.dim();
  std::vector<Index> qidx(d), aidx(d);
  for (Index g = 0; g < d; ++g) {
    Index q = 0, a = 0;
    for (int s = 0; s < n; ++s) {
      const Index loc = reg.digit(g, s);
      q = 2 * q + reg.qubit_of(s, loc);
      a = a * static_cast<Index>(reg.levels(s).size()) + (loc % reg.levels(s).size());
    }
    qidx[g] = q;
    aidx[g] = a;
  }
  Reduced r{Matrix::Zero(dq, dq), std::nullopt, 0.0};
  if (density) {
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        if (aidx[i] == aidx[j]) r.rho(qidx[i], qidx[j]) += x(i, j);
      }
    }
  } else {
    Index anc = 1;
    for (int s = 0; s < n; ++s) anc *= static_cast<Index>(reg.levels(s).size());
    Matrix m = Matrix::Zero(dq, anc);
    for (Index g = 0; g < d; ++g) m(qidx[g], aidx[g]) = x(g, 0);
    r.rho = m * m.adjoint();
    r.sleeping = m.col(0);
  }
  double sleeping = 0.0;
  for (Index g = 0; g < d; ++g) {
    if (aidx[g] == 0) sleeping += density ? x(g, g).real() : std::norm(x(g, 0));
  }
  r.excitation = std::max(0.0, 1.0 - sleeping);
  return r;
}

}  // namespace

SimulationResult simulate_schedule(const PulseSchedule& schedule, const LatticeTopology& topology,
                                   const std::vector<core::Ket>& initial,
                                   const SimulationOptions& options, std::uint64_t seed) {
  validate_schedule(schedule, topology);
  const Engine engine(schedule, topology, initial, options);
  const bool noisy = options.noise.has_value();
  const auto ideal = engine.run(seed, false);

  SimulationResult res;
  res.register_cells = engine.reg().cells();
  if (!noisy) {
    Reduced r = reduce(engine.reg(), ideal.state, false);
    res.qubit_rho = std::move(r.rho);
    res.qubit_state = std::move(r.sleeping);
    res.ancilla_excitation = r.excitation;
    res.measurements = ideal.measurements;
    res.fidelity = 1.0;
    return res;
  }
  auto noisy_run = engine.run(seed, true);
  Reduced r = reduce(engine.reg(), noisy_run.state, true);
  res.qubit_rho = std::move(r.rho);
  res.ancilla_excitation = r.excitation;
  res.measurements = std::move(noisy_run.measurements);
  res.stats = noisy_run.stats;
  const Vector psi = ideal.state.col(0);
  res.fidelity = std::real(psi.dot(noisy_run.state * psi));
  return res;
}

TrialSummary run_trials(const PulseSchedule& schedule, const LatticeTopology& topology,
                        const std::vector<core::Ket>& initial, const SimulationOptions& options,
                        std::uint64_t seed, std::size_t trials) {
  TrialSummary sum;
  std::set<int> measured;
  for (const Event& e : schedule.events) {
    if (e.kind != EventKind::kReadout) continue;
    for (std::size_t q = 0; q < schedule.placement.size(); ++q) {
      if (schedule.placement[q] == e.cell) measured.insert(static_cast<int>(q));
    }
  }
  sum.measured_qubits.assign(measured.begin(), measured.end());
  if (trials == 0) return sum;
  double fid = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto r = simulate_schedule(schedule, topology, initial, options, derive_seed(seed, i));
    std::string key(sum.measured_qubits.size(), '?');
    for (const auto& m : r.measurements) {
      if (m.qubit < 0) continue;
      const auto pos = std::find(sum.measured_qubits.begin(), sum.measured_qubits.end(), m.qubit) -
                       sum.measured_qubits.begin();
      key[pos] = static_cast<char>('0' + m.outcome);
    }
    ++sum.histogram[key];
    fid += r.fidelity;
  }
  sum.mean_fidelity = fid / static_cast<double>(trials);
  return sum;
}

}  // namespace ancnet::network
