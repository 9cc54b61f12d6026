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

// Reference implementations used only by tests. They avoid the library's
// own kernels: Kronecker products by explicit loops, exponentials through
// Eigen's Pade-based MatrixFunctions module, eigen-pairs from closed forms.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;
inline const C I{0.0, 1.0};

inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline M expm(const M& a) { return a.exp(); }

inline M pauli(char axis) {
  M s(2, 2);
  switch (axis) {
    case 'x': s << 0, 1, 1, 0; break;
    case 'y': s << 0, -I, I, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

inline M rotation(char axis, double theta) { return expm(-I * (theta / 2) * pauli(axis)); }

inline M cnot() {
  M c = M::Zero(4, 4);
  c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1.0;
  return c;
}

// max |a - e^{i phase} b| after aligning on the largest entry of b.
inline double phase_aligned_distance(const M& a, const M& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const C phase = a(r, c) / b(r, c);
  return (a - (phase / std::abs(phase)) * b).cwiseAbs().maxCoeff();
}

inline double max_abs(const M& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

struct Random {
  std::mt19937_64 eng;
  explicit Random(std::uint64_t seed) : eng(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng);
  }
  double normal() { return std::normal_distribution<double>()(eng); }
  M matrix(Eigen::Index n) {
    M m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = C(normal(), normal());
    return m;
  }
  M hermitian(Eigen::Index n) {
    M m = matrix(n);
    return 0.5 * (m + m.adjoint());
  }
  V ket(Eigen::Index n) {
    V v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = C(normal(), normal());
    return v / v.norm();
  }
  M density(Eigen::Index n) {
    M a = matrix(n);
    M r = a * a.adjoint();
    return r / r.trace().real();
  }
};

// Lindblad superoperator in row-major vectorisation vec(rho)_{i n + j}.
inline M liouvillian(const M& h, const std::vector<M>& jumps) {
  const Eigen::Index n = h.rows();
  const M id = M::Identity(n, n);
  M l = -I * (kron(h, id) - kron(id, h.transpose()));
  for (const M& a : jumps) {
    const M ada = a.adjoint() * a;
    l += kron(a, a.conjugate()) - 0.5 * kron(ada, id) - 0.5 * kron(id, ada.transpose());
  }
  return l;
}

inline V vec(const M& rho) {
  V v(rho.size());
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j) v(i * rho.cols() + j) = rho(i, j);
  return v;
}

inline M unvec(const V& v, Eigen::Index n) {
  M m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

inline M evolve_exact(const M& rho, const M& h, const std::vector<M>& jumps, double t) {
  return unvec(expm(liouvillian(h, jumps) * t) * vec(rho), rho.rows());
}

inline double purity(const M& rho) { return (rho * rho).trace().real(); }

// Three-site model H = [[el, t, s], [t, ec, -t], [s, -t, er]]: ascending
// eigenvalues by the trigonometric cubic formula.
inline std::array<double, 3> three_site_roots(double el, double ec, double er, double t,
                                              double s) {
  const double c2 = -(el + ec + er);
  const double c1 = el * ec + ec * er + el * er - 2 * t * t - s * s;
  const double c0 = -(el * ec * er - el * t * t - er * t * t - ec * s * s - 2 * t * t * s);
  const double q = (3 * c1 - c2 * c2) / 9;
  const double r = (9 * c2 * c1 - 27 * c0 - 2 * c2 * c2 * c2) / 54;
  const double rho = std::sqrt(-q * q * q);
  const double phi = std::acos(std::clamp(r / rho, -1.0, 1.0));
  const double mag = 2 * std::sqrt(-q);
  const double pi = std::numbers::pi;
  std::array<double, 3> x{mag * std::cos(phi / 3) - c2 / 3,
                          mag * std::cos((phi + 2 * pi) / 3) - c2 / 3,
                          mag * std::cos((phi + 4 * pi) / 3) - c2 / 3};
  std::sort(x.begin(), x.end());
  return x;
}

// Eigenvector for eigenvalue x: largest cross product of two rows of H - x.
inline Eigen::Vector3d three_site_vector(double el, double ec, double er, double t, double s,
                                         double x) {
  Eigen::Matrix3d h;
  h << el - x, t, s, t, ec - x, -t, s, -t, er - x;
  Eigen::Vector3d best = Eigen::Vector3d::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Eigen::Vector3d v = h.row(i).transpose().cross(h.row(j).transpose());
      if (v.norm() > best.norm()) best = v;
    }
  return best.normalized();
}

inline double three_site_product(double el, double ec, double er, double t, double s, int level) {
  const auto v = three_site_vector(el, ec, er, t, s, three_site_roots(el, ec, er, t, s)[level]);
  return v(0) * v(0) * v(2) * v(2);
}

}  // namespace oracle
