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

#include "minienv/fock.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "minienv/error.hpp"

namespace minienv {

namespace {

int product(const std::vector<int> &dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

void require_same_shape(const FockOperator &a, const FockOperator &b,
                        const char *op) {
  if (!a.same_shape(b))
    fail(ErrorCode::InvalidArgument,
         std::string(op) + ": operand shapes differ");
}

void require_hermitian(const FockOperator &op, const char *where,
                       ErrorCode code) {
  const double defect = hermiticity_defect(op.matrix());
  if (defect > kHermitianTolerance * op.dim())
    fail(code, std::string(where) + ": operator is not hermitian (defect " +
                   format_value(defect) + ")");
}

}  // namespace

FockOperator::FockOperator(Matrix entries, std::vector<int> mode_dims)
    : entries_(std::move(entries)), dims_(std::move(mode_dims)) {
  if (dims_.empty() || dims_.size() > 2)
    fail(ErrorCode::InvalidArgument, "FockOperator: one or two modes required");
  for (int d : dims_)
    if (d < 1) fail(ErrorCode::InvalidArgument, "FockOperator: mode dim < 1");
  if (entries_.rows() != entries_.cols() || entries_.rows() != product(dims_))
    fail(ErrorCode::InvalidArgument,
         "FockOperator: matrix shape does not match mode dims");
  if (!entries_.allFinite())
    fail(ErrorCode::NumericalContract, "FockOperator: non-finite entries");
}

FockOperator::FockOperator(Matrix entries)
    : FockOperator(entries, std::vector<int>{static_cast<int>(entries.rows())}) {}

FockOperator operator+(const FockOperator &a, const FockOperator &b) {
  require_same_shape(a, b, "operator+");
  return {a.matrix() + b.matrix(), {a.mode_dims().begin(), a.mode_dims().end()}};
}

FockOperator operator-(const FockOperator &a, const FockOperator &b) {
  require_same_shape(a, b, "operator-");
  return {a.matrix() - b.matrix(), {a.mode_dims().begin(), a.mode_dims().end()}};
}

FockOperator operator*(const FockOperator &a, const FockOperator &b) {
  require_same_shape(a, b, "operator*");
  return {a.matrix() * b.matrix(), {a.mode_dims().begin(), a.mode_dims().end()}};
}

FockOperator operator*(Complex s, const FockOperator &a) {
  return {s * a.matrix(), {a.mode_dims().begin(), a.mode_dims().end()}};
}

FockOperator adjoint(const FockOperator &a) {
  return {a.matrix().adjoint(), {a.mode_dims().begin(), a.mode_dims().end()}};
}

FockOperator annihilation(int cutoff) {
  if (cutoff < 1)
    fail(ErrorCode::InvalidArgument, "annihilation: cutoff must be >= 1");
  Matrix m = Matrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) m(n - 1, n) = std::sqrt(double(n));
  return FockOperator(std::move(m));
}

FockOperator creation(int cutoff) { return adjoint(annihilation(cutoff)); }

FockOperator number_operator(int cutoff) {
  if (cutoff < 1)
    fail(ErrorCode::InvalidArgument, "number_operator: cutoff must be >= 1");
  Matrix m = Matrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) m(n, n) = double(n);
  return FockOperator(std::move(m));
}

FockOperator identity(int dim) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "identity: dim must be >= 1");
  return FockOperator(Matrix::Identity(dim, dim));
}

FockOperator tensor(const FockOperator &a, const FockOperator &b) {
  if (a.mode_count() != 1 || b.mode_count() != 1)
    fail(ErrorCode::InvalidArgument, "tensor: both factors must be single-mode");
  const int da = a.dim(), db = b.dim();
  Matrix m(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      m.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
  return {std::move(m), {da, db}};
}

FockOperator partial_trace_b(const FockOperator &rho) {
  if (rho.mode_count() != 2)
    fail(ErrorCode::InvalidArgument, "partial_trace_b: two-mode input required");
  require_hermitian(rho, "partial_trace_b", ErrorCode::InvalidArgument);
  const int da = rho.mode_dims()[0], db = rho.mode_dims()[1];
  Matrix out(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out(i, j) = rho.matrix().block(i * db, j * db, db, db).trace();
  return FockOperator(std::move(out));
}

Complex trace(const FockOperator &op) { return op.matrix().trace(); }

double hermiticity_defect(const Matrix &h) {
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const FockOperator &op, double tol) {
  return hermiticity_defect(op.matrix()) <= tol * op.dim();
}

double purity(const FockOperator &rho, double trace_tol) {
  require_hermitian(rho, "purity", ErrorCode::NumericalContract);
  const double tr = trace(rho).real();
  if (std::abs(tr - 1.0) > trace_tol)
    fail(ErrorCode::NumericalContract,
         "purity: trace " + format_value(tr) + " is not 1 within tolerance");
  // Tr(rho rho^dagger) equals Tr rho^2 for hermitian rho.
  const double p = rho.matrix().squaredNorm();
  if (p > 1.0 + 1e-9)
    fail(ErrorCode::NumericalContract,
         "purity: Tr rho^2 = " + format_value(p) + " exceeds 1");
  return p;
}

SpectralDecomposition hermitian_eigendecompose(const FockOperator &h) {
  require_hermitian(h, "hermitian_eigendecompose", ErrorCode::InvalidArgument);
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  // Real symmetric input (the exchange Hamiltonian, diagonal states) takes
  // the real solver, several times cheaper.
  if (sym.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> real(sym.real());
    if (real.info() != Eigen::Success)
      fail(ErrorCode::NumericalContract,
           "hermitian_eigendecompose: solver did not converge");
    return {real.eigenvalues(), real.eigenvectors().cast<Complex>()};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::NumericalContract,
         "hermitian_eigendecompose: solver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix unitary_exp(const SpectralDecomposition &h, double s) {
  const auto n = h.eigenvalues.size();
  Vector phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::polar(1.0, -h.eigenvalues(i) * s);
  return h.eigenvectors * phases.asDiagonal() * h.eigenvectors.adjoint();
}

double trace_distance(const FockOperator &a, const FockOperator &b) {
  require_same_shape(a, b, "trace_distance");
  const auto spec = hermitian_eigendecompose(a - b);
  return 0.5 * spec.eigenvalues.cwiseAbs().sum();
}

double expectation(const FockOperator &op, const FockOperator &rho) {
  require_same_shape(op, rho, "expectation");
  return (op.matrix() * rho.matrix()).trace().real();
}

double min_eigenvalue(const FockOperator &h) {
  return hermitian_eigendecompose(h).eigenvalues(0);
}

}  // namespace minienv
