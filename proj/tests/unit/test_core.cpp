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

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ancnet/core/density_matrix.hpp"
#include "ancnet/core/linalg.hpp"
#include "ancnet/core/operator.hpp"
#include "oracle.hpp"

using namespace ancnet::core;
using oracle::C;
using oracle::M;

namespace {

DensityMatrix dm(const M& m) { return DensityMatrix(m); }

M reduced_by_loops(const M& rho, Eigen::Index da, Eigen::Index db, bool keep_first) {
  const Eigen::Index n = keep_first ? da : db;
  M out = M::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < (keep_first ? db : da); ++k) {
        const Eigen::Index r = keep_first ? i * db + k : k * db + i;
        const Eigen::Index c = keep_first ? j * db + k : k * db + j;
        out(i, j) += rho(r, c);
      }
  return out;
}

}  // namespace

TEST_CASE("operator construction rejects malformed input") {
  CHECK_THROWS_AS(ComplexOperator(M(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(ComplexOperator(M(0, 0)), std::invalid_argument);
  M bad = M::Identity(2, 2);
  bad(0, 1) = C(std::nan(""), 0);
  CHECK_THROWS_AS(ComplexOperator{bad}, std::invalid_argument);
  bad(0, 1) = C(0, INFINITY);
  CHECK_THROWS_AS(ComplexOperator{bad}, std::invalid_argument);
}

TEST_CASE("unitary and hermitian flags") {
  CHECK(ComplexOperator::identity(5).is_unitary());
  CHECK(ComplexOperator(oracle::rotation('y', 0.3)).is_unitary());
  CHECK_FALSE(ComplexOperator(2.0 * M::Identity(2, 2)).is_unitary());
  CHECK(ComplexOperator(oracle::pauli('y')).is_hermitian());
  M a(2, 2);
  a << 0, 1, 0, 0;
  CHECK_FALSE(ComplexOperator(a).is_hermitian());
}

TEST_CASE("ket validation") {
  CHECK_THROWS_AS(Ket(oracle::V::Ones(2)), std::invalid_argument);
  CHECK_NOTHROW(Ket(oracle::V::Ones(2), false));
  CHECK(Ket(oracle::V::Ones(2), false).normalized().norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(Ket::basis(3, 3), std::out_of_range);
  CHECK(Ket::basis(3, 2)[2] == C(1.0));
}

TEST_CASE("density matrix invariants") {
  oracle::Random rnd(11);
  CHECK_NOTHROW(dm(rnd.density(4)));
  M rho = rnd.density(3);
  CHECK(DensityMatrix::validate(rho).empty());

  M non_herm = rho;
  non_herm(0, 1) += 1e-9;
  CHECK_FALSE(DensityMatrix::validate(non_herm).empty());
  CHECK_THROWS_AS(dm(non_herm), std::invalid_argument);

  CHECK_THROWS_AS(dm(1.01 * rho), std::invalid_argument);

  M negative = M::Zero(2, 2);
  negative(0, 0) = 1.1;
  negative(1, 1) = -0.1;
  CHECK_THROWS_AS(dm(negative), std::invalid_argument);

  CHECK_THROWS_AS(DensityMatrix(M::Identity(2, 2) * 0.5, {"a"}), std::invalid_argument);
  const auto mixed = DensityMatrix::maximally_mixed(4);
  CHECK(mixed.trace_error() < 1e-15);
  CHECK(mixed.min_eigenvalue() == doctest::Approx(0.25));
  CHECK(numeric_labels(3).size() == 3);
}

TEST_CASE("kron examples") {
  const M i2 = M::Identity(2, 2);
  CHECK(max_abs(kron(i2, i2) - M::Identity(4, 4)) == 0.0);

  const M sx = oracle::pauli('x');
  const M k = kron(sx, i2);
  M expected = M::Zero(4, 4);
  expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = 1.0;
  CHECK(max_abs(k - expected) == 0.0);

  M upi(2, 2);
  upi << 0, 1, -1, 0;
  const M both = kron(upi, upi);
  CHECK(max_abs(both * both - M::Identity(4, 4)) < 1e-15);
}

TEST_CASE("kron matches loop oracle and is associative") {
  oracle::Random rnd(3);
  for (int trial = 0; trial < 20; ++trial) {
    const M a = rnd.matrix(2 + trial % 3);
    const M b = rnd.matrix(1 + trial % 4);
    const M c = rnd.matrix(2);
    CHECK(max_abs(kron(a, b) - oracle::kron(a, b)) == 0.0);
    CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) <= 1e-14);
  }
}

TEST_CASE("tensor product dimension cap") {
  const auto a = ComplexOperator::identity(4);
  CHECK_THROWS_AS(tensor_product(a, a, 15), std::length_error);
  CHECK(tensor_product(a, a, 16).dim() == 16);
  const auto big = ComplexOperator::identity(1100);
  CHECK_THROWS_AS(tensor_product(big, big), std::length_error);
}

TEST_CASE("propagator equals matrix exponential") {
  oracle::Random rnd(5);
  for (int trial = 0; trial < 10; ++trial) {
    const M h = rnd.hermitian(5);
    const double t = rnd.uniform(-3, 3);
    const M u = unitary_propagator(ComplexOperator(h), t).matrix();
    CHECK(max_abs(u - oracle::expm(-oracle::I * t * h)) < 1e-11);
  }
  M nh(2, 2);
  nh << 0, 1, 0, 0;
  CHECK_THROWS_AS(unitary_propagator(ComplexOperator(nh), 1.0), std::invalid_argument);
}

TEST_CASE("evolve_unitary examples") {
  oracle::Random rnd(6);
  const DensityMatrix rho = dm(rnd.density(3));
  const ComplexOperator h(rnd.hermitian(3));
  CHECK(max_abs(evolve_unitary(rho, h, 0.0).matrix() - rho.matrix()) < 1e-14);

  const double j = 1.7;
  M block(2, 2);
  block << -1, 2, 2, -1;
  M ground = M::Zero(2, 2);
  ground(0, 0) = 1.0;
  const auto flipped = evolve_unitary(dm(ground), ComplexOperator(0.25 * j * block),
                                      std::numbers::pi / j);
  CHECK(flipped(1, 1).real() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(flipped(0, 0)) < 1e-10);

  M diag = M::Zero(3, 3);
  diag.diagonal() << 0.3, -1.2, 2.5;
  const auto same = evolve_unitary(rho, ComplexOperator(diag), 4.2);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(same(i, i) - rho(i, i)) < 1e-12);
}

TEST_CASE("evolve_unitary preserves trace, purity and composes") {
  oracle::Random rnd(7);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityMatrix rho = dm(rnd.density(4));
    const ComplexOperator h(rnd.hermitian(4));
    const double t1 = rnd.uniform(0, 2), t2 = rnd.uniform(0, 2);
    const auto out = evolve_unitary(rho, h, t1 + t2);
    CHECK(std::abs(out.matrix().trace().real() - 1.0) < 1e-10);
    CHECK(std::abs(purity(out) - purity(rho)) < 1e-10);
    const auto two = evolve_unitary(evolve_unitary(rho, h, t1), h, t2);
    CHECK(max_abs(out.matrix() - two.matrix()) < 1e-10);
    const M u = oracle::expm(-oracle::I * (t1 + t2) * h.matrix());
    CHECK(max_abs(out.matrix() - u * rho.matrix() * u.adjoint()) < 1e-10);
  }
}

TEST_CASE("purity examples") {
  oracle::Random rnd(8);
  CHECK(purity(DensityMatrix::pure(Ket(rnd.ket(6)))) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(DensityMatrix::maximally_mixed(2)) == doctest::Approx(0.5).epsilon(1e-15));
  M d = M::Zero(2, 2);
  d(0, 0) = 0.75;
  d(1, 1) = 0.25;
  CHECK(purity(dm(d)) == doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("partial trace") {
  oracle::Random rnd(9);
  const std::array<Index, 2> dims{2, 2};
  const std::array<std::size_t, 1> first{0};
  const std::array<std::size_t, 1> second{1};

  oracle::V bell = oracle::V::Zero(4);
  bell(0) = bell(3) = std::sqrt(0.5);
  const auto reduced = partial_trace(DensityMatrix::pure(Ket(bell)), dims, first);
  CHECK(max_abs(reduced.matrix() - 0.5 * M::Identity(2, 2)) < 1e-15);

  for (int trial = 0; trial < 20; ++trial) {
    const M q = rnd.density(2), a = rnd.density(3);
    const DensityMatrix prod = tensor_product(dm(q), dm(a));
    const std::array<Index, 2> qa{2, 3};
    CHECK(max_abs(partial_trace(prod, qa, first).matrix() - q) < 1e-12);
    CHECK(max_abs(partial_trace(prod, qa, second).matrix() - a) < 1e-12);

    const M r = rnd.density(4);
    CHECK(max_abs(partial_trace(dm(r), dims, first).matrix() - reduced_by_loops(r, 2, 2, true)) <
          1e-14);
    CHECK(max_abs(partial_trace(dm(r), dims, second).matrix() - reduced_by_loops(r, 2, 2, false)) <
          1e-14);
    CHECK(std::abs(partial_trace(dm(r), dims, first).matrix().trace().real() - 1.0) < 1e-12);
  }

  const DensityMatrix r4 = dm(rnd.density(4));
  const std::array<Index, 2> wrong{2, 3};
  CHECK_THROWS_AS(partial_trace(r4, wrong, first), std::invalid_argument);
  const std::array<std::size_t, 1> out_of_range{2};
  CHECK_THROWS_AS(partial_trace(r4, dims, out_of_range), std::invalid_argument);
  const std::array<std::size_t, 2> twice{0, 0};
  CHECK_THROWS_AS(partial_trace(r4, dims, twice), std::invalid_argument);
}
