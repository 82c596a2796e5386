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

#include "minienv/joint.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "minienv/error.hpp"

namespace minienv {

namespace {

void require_tail(double tail, double tol, const char *what, int cutoff) {
  if (tail >= tol)
    fail(ErrorCode::CutoffTooSmall,
         std::string(what) + ": tail mass " + format_value(tail) +
             " at cutoff " + std::to_string(cutoff) +
             " is not below tolerance " + format_value(tol));
}

void require_time(double t, const char *where) {
  if (!(t >= 0.0) || !std::isfinite(t))
    fail(ErrorCode::InvalidArgument,
         std::string(where) + ": t must be finite and >= 0");
}

void require_model(const JointConfig &cfg, Model m, const char *where) {
  if (cfg.model != m)
    fail(ErrorCode::InvalidArgument,
         std::string(where) + ": config model must be '" +
             std::string(model_name(m)) + "'");
}

// Rows n of mode A, columns m of mode B, for a joint vector with A slow.
Eigen::Map<const Matrix> as_b_by_a(const Complex *data, int dim_a, int dim_b) {
  return Eigen::Map<const Matrix>(data, dim_b, dim_a);
}

}  // namespace

int max_joint_dim() {
  if (const char *env = std::getenv("MINIENV_MAX_JOINT_DIM")) {
    int value = 0;
    const char *end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return kDefaultMaxJointDim;
}

void JointConfig::validate() const {
  if (cutoff_a < 1 || cutoff_b < 1)
    fail(ErrorCode::InvalidArgument, "JointConfig: cutoffs must be >= 1");
  if (!(coupling > 0.0) || !std::isfinite(coupling))
    fail(ErrorCode::InvalidArgument, "JointConfig: coupling must be > 0");
  if (!(omega >= 0.0) || !std::isfinite(omega))
    fail(ErrorCode::InvalidArgument, "JointConfig: omega must be >= 0");
  if (model == Model::MasterEq)
    fail(ErrorCode::InvalidArgument,
         "JointConfig: model must be amplitude or kerr");
}

void JointConfig::require_within_cap() const {
  const int cap = max_dim > 0 ? max_dim : max_joint_dim();
  const long dim = static_cast<long>(cutoff_a + 1) * (cutoff_b + 1);
  if (dim > cap)
    fail(ErrorCode::InvalidArgument,
         "JointConfig: joint dimension " + std::to_string(dim) +
             " exceeds cap " + std::to_string(cap) +
             " (set MINIENV_MAX_JOINT_DIM to raise it)");
}

FockOperator build_joint_hamiltonian(const JointConfig &cfg) {
  cfg.validate();
  cfg.require_within_cap();
  const int ca = cfg.cutoff_a, cb = cfg.cutoff_b;
  if (cfg.model == Model::PhaseKerr) {
    const int db = cb + 1;
    Matrix h = Matrix::Zero(cfg.joint_dim(), cfg.joint_dim());
    for (int n = 0; n <= ca; ++n)
      for (int m = 0; m <= cb; ++m)
        h(n * db + m, n * db + m) =
            cfg.omega * (n + m) + cfg.coupling * double(n) * double(m);
    return {std::move(h), {ca + 1, cb + 1}};
  }
  const FockOperator ia = identity(ca + 1), ib = identity(cb + 1);
  const FockOperator a = annihilation(ca), b = annihilation(cb);
  const FockOperator free =
      tensor(number_operator(ca), ib) + tensor(ia, number_operator(cb));
  const FockOperator exchange =
      tensor(adjoint(a), b) + tensor(a, adjoint(b));
  return Complex(cfg.omega) * free + Complex(cfg.coupling) * exchange;
}

AmplitudeEngine::AmplitudeEngine(Complex alpha0, double nbar,
                                 const JointConfig &cfg, double tol)
    : cfg_(cfg) {
  cfg_.validate();
  require_model(cfg_, Model::Amplitude, "AmplitudeEngine");
  // Excitations are exchanged, so each mode must hold both initial states.
  const int low = std::min(cfg_.cutoff_a, cfg_.cutoff_b);
  require_tail(coherent_tail(alpha0, low), tol, "AmplitudeEngine (coherent)", low);
  require_tail(thermal_tail(nbar, low), tol, "AmplitudeEngine (thermal)", low);

  spectrum_ = hermitian_eigendecompose(build_joint_hamiltonian(cfg_));

  const int da = cfg_.cutoff_a + 1, db = cfg_.cutoff_b + 1;
  const Vector amps = coherent_amplitudes(alpha0, cfg_.cutoff_a);
  const std::vector<double> p = thermal_weights(nbar, cfg_.cutoff_b);
  std::vector<int> ks;
  for (int k = 0; k < db; ++k)
    if (p[k] > 0.0) ks.push_back(k);

  Matrix initial = Matrix::Zero(da * db, static_cast<Eigen::Index>(ks.size()));
  for (std::size_t j = 0; j < ks.size(); ++j) {
    for (int n = 0; n < da; ++n) initial(n * db + ks[j], j) = amps(n);
    weights_.push_back(p[ks[j]]);
  }
  coeffs_ = spectrum_.eigenvectors.adjoint() * initial;
}

Matrix AmplitudeEngine::evolved(double t) const {
  require_time(t, "AmplitudeEngine");
  const auto n = spectrum_.eigenvalues.size();
  Vector phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::polar(1.0, -spectrum_.eigenvalues(i) * t);
  return spectrum_.eigenvectors * (phases.asDiagonal() * coeffs_);
}

FockOperator AmplitudeEngine::reduced_state(double t) const {
  const Matrix psi = evolved(t);
  const int da = cfg_.cutoff_a + 1, db = cfg_.cutoff_b + 1;
  Matrix rho = Matrix::Zero(da, da);
  for (Eigen::Index j = 0; j < psi.cols(); ++j) {
    const auto m = as_b_by_a(psi.col(j).data(), da, db);
    rho.noalias() += weights_[j] * (m.transpose() * m.conjugate());
  }
  return FockOperator(0.5 * (rho + rho.adjoint()));
}

Occupations AmplitudeEngine::occupations(double t) const {
  const Matrix psi = evolved(t);
  const int da = cfg_.cutoff_a + 1, db = cfg_.cutoff_b + 1;
  Occupations occ;
  for (Eigen::Index j = 0; j < psi.cols(); ++j)
    for (int n = 0; n < da; ++n)
      for (int m = 0; m < db; ++m) {
        const double w = weights_[j] * std::norm(psi(n * db + m, j));
        occ.na += n * w;
        occ.nb += m * w;
      }
  return occ;
}

std::vector<double> AmplitudeEngine::component_norms(double t) const {
  const Matrix psi = evolved(t);
  std::vector<double> out;
  out.reserve(psi.cols());
  for (Eigen::Index j = 0; j < psi.cols(); ++j) out.push_back(psi.col(j).squaredNorm());
  return out;
}

Vector AmplitudeEngine::component(std::size_t k, double t) const {
  if (k >= weights_.size())
    fail(ErrorCode::InvalidArgument, "AmplitudeEngine: component out of range");
  return evolved(t).col(static_cast<Eigen::Index>(k));
}

FockOperator evolve_amplitude(Complex alpha0, double nbar, double t,
                              const JointConfig &cfg, double tol) {
  return AmplitudeEngine(alpha0, nbar, cfg, tol).reduced_state(t);
}

FockOperator evolve_kerr_reduced(Complex alpha0, double nbar, double t,
                                 const JointConfig &cfg, double tol) {
  cfg.validate();
  require_model(cfg, Model::PhaseKerr, "evolve_kerr_reduced");
  require_time(t, "evolve_kerr_reduced");
  require_tail(coherent_tail(alpha0, cfg.cutoff_a), tol,
               "evolve_kerr_reduced (coherent)", cfg.cutoff_a);
  require_tail(thermal_tail(nbar, cfg.cutoff_b), tol,
               "evolve_kerr_reduced (thermal)", cfg.cutoff_b);

  const int da = cfg.cutoff_a + 1;
  const Vector amps = coherent_amplitudes(alpha0, cfg.cutoff_a);
  const std::vector<double> p = thermal_weights(nbar, cfg.cutoff_b);
  // Column k holds sqrt(p_k) |alpha_k>; rotating alpha by phi multiplies
  // the n-th amplitude by exp(i n phi).
  Matrix cols(da, static_cast<Eigen::Index>(p.size()));
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double phi = -(cfg.omega + cfg.coupling * double(k)) * t;
    const double w = std::sqrt(p[k]);
    for (int n = 0; n < da; ++n)
      cols(n, static_cast<Eigen::Index>(k)) = w * amps(n) * std::polar(1.0, n * phi);
  }
  const Matrix rho = cols * cols.adjoint();
  return FockOperator(0.5 * (rho + rho.adjoint()));
}

FockOperator kerr_joint_state(Complex alpha0, double nbar, double t,
                              const JointConfig &cfg, double tol) {
  require_model(cfg, Model::PhaseKerr, "kerr_joint_state");
  require_time(t, "kerr_joint_state");
  const FockOperator h = build_joint_hamiltonian(cfg);
  const FockOperator rho0 =
      tensor(coherent_state(CoherentSpec::make(alpha0, cfg.cutoff_a), tol),
             thermal_state(ThermalSpec::make(nbar, cfg.cutoff_b), tol));
  // H is diagonal: rho_ij(t) = exp(-i (E_i - E_j) t) rho_ij(0).
  const int dim = cfg.joint_dim();
  Matrix rho(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i)
      rho(i, j) = std::polar(1.0, -(h(i, i).real() - h(j, j).real()) * t) *
                  rho0(i, j);
  return {std::move(rho), {cfg.cutoff_a + 1, cfg.cutoff_b + 1}};
}

Occupations mean_occupation_exchange(Complex alpha0, double nbar, double t,
                                     const JointConfig &cfg, double tol) {
  cfg.validate();
  if (cfg.model == Model::Amplitude)
    return AmplitudeEngine(alpha0, nbar, cfg, tol).occupations(t);
  const FockOperator rho_a = evolve_kerr_reduced(alpha0, nbar, t, cfg, tol);
  Occupations occ;
  occ.na = expectation(number_operator(cfg.cutoff_a), rho_a);
  const std::vector<double> p = thermal_weights(nbar, cfg.cutoff_b);
  for (std::size_t k = 0; k < p.size(); ++k) occ.nb += double(k) * p[k];
  return occ;
}

}  // namespace minienv
