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

#ifndef MINIENV_TESTS_SUPPORT_HPP
#define MINIENV_TESTS_SUPPORT_HPP

#include <optional>
#include <random>

#include "minienv/error.hpp"
#include "minienv/fock.hpp"

namespace minienv::testing {

// Returns the error code raised by f, or nullopt when f returns normally.
template <class F>
std::optional<ErrorCode> error_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return std::nullopt;
}

inline Matrix random_matrix(std::mt19937_64 &rng, int dim) {
  std::normal_distribution<double> g;
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline Matrix random_hermitian(std::mt19937_64 &rng, int dim) {
  const Matrix m = random_matrix(rng, dim);
  return 0.5 * (m + m.adjoint());
}

// G G^dagger / Tr, optionally of reduced rank.
inline FockOperator random_density(std::mt19937_64 &rng, int dim, int rank = 0) {
  std::normal_distribution<double> g;
  const int r = rank > 0 ? rank : dim;
  Matrix m(dim, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < dim; ++i) m(i, j) = Complex(g(rng), g(rng));
  Matrix rho = m * m.adjoint();
  rho /= rho.trace();
  return FockOperator(0.5 * (rho + rho.adjoint()));
}

inline double max_abs(const Matrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace minienv::testing

#endif  // MINIENV_TESTS_SUPPORT_HPP
