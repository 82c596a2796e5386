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

#ifndef MINIENV_FOCK_HPP
#define MINIENV_FOCK_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace minienv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Relative tolerances used by the hermiticity and positivity contracts;
// both are scaled by the matrix dimension.
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kPositivityTolerance = 1e-10;

// Dense operator on a truncated number basis of one or two modes. For two
// modes, mode A is the slow index: |n>_A |m>_B sits at n * dim_b + m.
//
// Values are immutable; every constructor rejects non-finite entries.
class FockOperator {
 public:
  FockOperator(Matrix entries, std::vector<int> mode_dims);

  // Single-mode operator with dim = entries.rows().
  explicit FockOperator(Matrix entries);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  int mode_count() const noexcept { return static_cast<int>(dims_.size()); }
  std::span<const int> mode_dims() const noexcept { return dims_; }
  int cutoff() const noexcept { return dim() - 1; }

  const Matrix &matrix() const noexcept { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  bool same_shape(const FockOperator &other) const noexcept {
    return dims_ == other.dims_;
  }

 private:
  Matrix entries_;
  std::vector<int> dims_;
};

FockOperator operator+(const FockOperator &a, const FockOperator &b);
FockOperator operator-(const FockOperator &a, const FockOperator &b);
FockOperator operator*(const FockOperator &a, const FockOperator &b);
FockOperator operator*(Complex s, const FockOperator &a);
FockOperator adjoint(const FockOperator &a);

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns
};

/// Truncated lowering operator: <n-1|a|n> = sqrt(n) for n = 1..cutoff.
FockOperator annihilation(int cutoff);
FockOperator creation(int cutoff);
FockOperator number_operator(int cutoff);
FockOperator identity(int dim);

/// Kronecker product of two single-mode operators, A as the slow index.
FockOperator tensor(const FockOperator &a, const FockOperator &b);

/// Reduces a two-mode operator to mode A by summing over mode B.
FockOperator partial_trace_b(const FockOperator &rho);

Complex trace(const FockOperator &op);

/// max |H - H^dagger| over all entries.
double hermiticity_defect(const Matrix &h);
bool is_hermitian(const FockOperator &op,
                  double tol = kHermitianTolerance);

/// Tr rho^2. Throws NumericalContract when rho is not hermitian within
/// 1e-10 * dim or when its trace is further than trace_tol from 1.
double purity(const FockOperator &rho, double trace_tol = 1e-6);

inline double linear_entropy(const FockOperator &rho, double trace_tol = 1e-6) {
  return 1.0 - purity(rho, trace_tol);
}

SpectralDecomposition hermitian_eigendecompose(const FockOperator &h);

/// exp(-i h s) for hermitian h, through its eigendecomposition.
Matrix unitary_exp(const SpectralDecomposition &h, double s);

/// Half the trace norm of a - b; both must be hermitian.
double trace_distance(const FockOperator &a, const FockOperator &b);

/// Re Tr(op rho).
double expectation(const FockOperator &op, const FockOperator &rho);

double min_eigenvalue(const FockOperator &h);

}  // namespace minienv

#endif  // MINIENV_FOCK_HPP
