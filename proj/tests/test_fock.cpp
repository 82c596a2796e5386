// Copyright 2026 The minienv Authors
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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "minienv/fock.hpp"
#include "minienv/states.hpp"
#include "support.hpp"

using namespace minienv;
using minienv::testing::error_of;
using minienv::testing::max_abs;

TEST_CASE("annihilation matrix elements") {
  const FockOperator a1 = annihilation(1);
  CHECK(a1.dim() == 2);
  CHECK(a1(0, 1) == Complex(1.0));
  CHECK(a1(0, 0) == Complex(0.0));
  CHECK(a1(1, 0) == Complex(0.0));
  CHECK(a1(1, 1) == Complex(0.0));

  const FockOperator a2 = annihilation(2);
  CHECK(a2(1, 2).real() == doctest::Approx(1.41421356).epsilon(1e-9));

  CHECK(error_of([] { annihilation(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("canonical commutator holds below the cutoff") {
  const int cutoff = 20;
  const Matrix a = annihilation(cutoff).matrix();
  const Matrix comm = a * a.adjoint() - a.adjoint() * a;
  const Matrix id = Matrix::Identity(cutoff + 1, cutoff + 1);
  CHECK(max_abs((comm - id).topLeftCorner(cutoff, cutoff)) < 1e-13);
  // Truncation moves the whole deficit to the last level.
  CHECK(comm(cutoff, cutoff).real() == doctest::Approx(-double(cutoff)));
}

TEST_CASE("tensor product") {
  const FockOperator i6 = tensor(identity(2), identity(3));
  CHECK(i6.dim() == 6);
  CHECK(i6.mode_count() == 2);
  CHECK(i6.mode_dims()[0] == 2);
  CHECK(i6.mode_dims()[1] == 3);
  CHECK(max_abs(i6.matrix() - Matrix::Identity(6, 6)) == 0.0);

  // a x I acting on |1>|0> gives |0>|0>.
  const int cutoff = 2;
  const FockOperator op = tensor(annihilation(cutoff), identity(cutoff + 1));
  Vector ket = Vector::Zero(op.dim());
  ket(1 * (cutoff + 1) + 0) = 1.0;
  Vector expected = Vector::Zero(op.dim());
  expected(0) = 1.0;
  CHECK(max_abs(op.matrix() * ket - expected) < 1e-15);

  CHECK(error_of([&] { tensor(i6, identity(2)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("trace of a tensor product factorizes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const FockOperator x(testing::random_hermitian(rng, 4));
    const FockOperator y(testing::random_hermitian(rng, 4));
    // Brute force: sum over the joint diagonal index pairs.
    Complex brute = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) brute += x(i, i) * y(k, k);
    CHECK(std::abs(trace(tensor(x, y)) - brute) < 1e-12);
  }
}

TEST_CASE("tensor is associative up to index bookkeeping") {
  std::mt19937_64 rng(5);
  const FockOperator x(testing::random_matrix(rng, 2));
  const FockOperator y(testing::random_matrix(rng, 2));
  const FockOperator z(testing::random_matrix(rng, 2));
  // Re-read two-mode results as single-mode operators of dim 4.
  const FockOperator xy(tensor(x, y).matrix());
  const FockOperator yz(tensor(y, z).matrix());
  const FockOperator left = tensor(xy, z);
  const FockOperator right = tensor(x, yz);
  CHECK(left.dim() == 8);
  CHECK(right.dim() == 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Complex brute = x(i >> 2, j >> 2) * y((i >> 1) & 1, (j >> 1) & 1) *
                            z(i & 1, j & 1);
      CHECK(std::abs(left(i, j) - brute) < 1e-14);
      CHECK(std::abs(right(i, j) - brute) < 1e-14);
    }
}

TEST_CASE("partial trace") {
  std::mt19937_64 rng(3);
  SUBCASE("product states return the A factor") {
    for (int trial = 0; trial < 10; ++trial) {
      const FockOperator ra = testing::random_density(rng, 3 + trial % 3);
      const FockOperator rb = testing::random_density(rng, 2 + trial % 4);
      const FockOperator reduced = partial_trace_b(tensor(ra, rb));
      CHECK(reduced.mode_count() == 1);
      CHECK(max_abs(reduced.matrix() - ra.matrix()) <= 1e-12);
      CHECK(std::abs(trace(reduced) - Complex(1.0)) < 1e-12);
    }
  }
  SUBCASE("maximally entangled pair reduces to I/2") {
    Vector psi = Vector::Zero(4);
    psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
    const FockOperator rho(psi * psi.adjoint(), {2, 2});
    const FockOperator reduced = partial_trace_b(rho);
    CHECK(max_abs(reduced.matrix() - 0.5 * Matrix::Identity(2, 2)) < 1e-15);
    CHECK(purity(reduced) == doctest::Approx(0.5));
  }
  SUBCASE("single-mode input is rejected") {
    CHECK(error_of([] { partial_trace_b(identity(3)); }) ==
          ErrorCode::InvalidArgument);
  }
}

TEST_CASE("purity") {
  SUBCASE("pure coherent state") {
    const FockOperator rho = coherent_state(CoherentSpec::make(2.0, 40));
    CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("thermal states against the geometric series") {
    for (double nbar : {1.0, 25.0}) {
      // Oracle: sum p_k^2 term by term far past any cutoff used below.
      double series = 0.0;
      const double r = nbar / (1.0 + nbar);
      double pk = 1.0 / (1.0 + nbar);
      for (int k = 0; k < 5000; ++k, pk *= r) series += pk * pk;
      const int cutoff = smallest_thermal_cutoff(nbar, 1e-12);
      const double p = purity(thermal_state(ThermalSpec::make(nbar, cutoff)));
      CHECK(std::abs(p - series) < 1e-9);
      CHECK(std::abs(p - 1.0 / (1.0 + 2.0 * nbar)) < 1e-9);
    }
  }
  SUBCASE("non-hermitian input violates the contract") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 0.1;
    CHECK(error_of([&] { purity(FockOperator(m)); }) ==
          ErrorCode::NumericalContract);
  }
  SUBCASE("bounds on random density matrices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const int dim = 2 + trial % 7;
      const FockOperator rho = testing::random_density(rng, dim, 1 + trial % dim);
      const double p = purity(rho);
      CHECK(p <= 1.0 + 1e-9);
      CHECK(p >= 1.0 / dim - 1e-9);
    }
  }
}

TEST_CASE("trace is linear") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    const FockOperator x(testing::random_matrix(rng, 8));
    const FockOperator y(testing::random_matrix(rng, 8));
    const Complex a(g(rng), g(rng)), b(g(rng), g(rng));
    const Complex lhs = trace(a * x + b * y);
    const Complex rhs = a * trace(x) + b * trace(y);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("hermitian eigendecomposition") {
  SUBCASE("diagonal") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const auto s = hermitian_eigendecompose(FockOperator(d));
    CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(2.0));
    CHECK(s.eigenvalues(2) == doctest::Approx(3.0));
  }
  SUBCASE("pauli x") {
    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    const auto s = hermitian_eigendecompose(FockOperator(x));
    CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(1.0));
  }
  SUBCASE("number operator") {
    const auto s = hermitian_eigendecompose(number_operator(10));
    for (int n = 0; n <= 10; ++n)
      CHECK(std::abs(s.eigenvalues(n) - n) < 1e-12);
  }
  SUBCASE("reconstruction") {
    std::mt19937_64 rng(29);
    for (int dim : {2, 5, 16, 40}) {
      const FockOperator h(testing::random_hermitian(rng, dim));
      const auto s = hermitian_eigendecompose(h);
      const Matrix back =
          s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() *
          s.eigenvectors.adjoint();
      CHECK(max_abs(back - h.matrix()) <= 1e-10 * dim);
      CHECK(max_abs(s.eigenvectors.adjoint() * s.eigenvectors -
                    Matrix::Identity(dim, dim)) < 1e-12);
    }
  }
  SUBCASE("non-hermitian input") {
    CHECK(error_of([] { hermitian_eigendecompose(annihilation(3)); }) ==
          ErrorCode::InvalidArgument);
  }
}

TEST_CASE("construction rejects inconsistent shapes and non-finite entries") {
  CHECK(error_of([] { FockOperator(Matrix::Identity(6, 6), {2, 2}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] { FockOperator(Matrix::Identity(8, 8), {2, 2, 2}); }) ==
        ErrorCode::InvalidArgument);
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK(error_of([&] { FockOperator{bad}; }) == ErrorCode::NumericalContract);
}

TEST_CASE("trace distance") {
  const FockOperator vac = coherent_state(CoherentSpec::make(0.0, 5));
  Matrix one = Matrix::Zero(6, 6);
  one(1, 1) = 1.0;
  CHECK(trace_distance(vac, FockOperator(one)) == doctest::Approx(1.0));
  CHECK(trace_distance(vac, vac) == doctest::Approx(0.0));
}
