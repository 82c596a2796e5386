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

#include "minienv/master.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "minienv/error.hpp"

namespace minienv {

namespace {

// Applies the generator entrywise. The ladder operators are bidiagonal, so
// every product reduces to an index shift:
//   (a rho a^dag)_ij = sqrt((i+1)(j+1)) rho_{i+1,j+1}
//   (a^dag rho a)_ij = sqrt(i j) rho_{i-1,j-1}
//   (a a^dag)_ii     = i+1 below the cutoff, 0 at the cutoff (truncated product)
class LindbladGenerator {
 public:
  explicit LindbladGenerator(const LindbladConfig &cfg)
      : dim_(cfg.cutoff + 1),
        down_(cfg.gamma * (1.0 + cfg.nbar)),
        up_(cfg.gamma * cfg.nbar),
        omega_(cfg.omega),
        sqrt_(dim_ + 1),
        raise_diag_(dim_) {
    for (int n = 0; n <= dim_; ++n) sqrt_[n] = std::sqrt(double(n));
    for (int n = 0; n < dim_; ++n) raise_diag_[n] = (n + 1 < dim_) ? n + 1.0 : 0.0;
  }

  void apply(const Matrix &rho, Matrix &out) const {
    const int c = dim_ - 1;
    out.resize(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      for (int i = 0; i < dim_; ++i) {
        const Complex r = rho(i, j);
        Complex v = -(down_ * double(i + j) + up_ * (raise_diag_[i] + raise_diag_[j])) * r;
        if (i < c && j < c)
          v += 2.0 * down_ * sqrt_[i + 1] * sqrt_[j + 1] * rho(i + 1, j + 1);
        if (i > 0 && j > 0)
          v += 2.0 * up_ * sqrt_[i] * sqrt_[j] * rho(i - 1, j - 1);
        if (omega_ != 0.0) v += Complex(0.0, -omega_ * double(i - j)) * r;
        out(i, j) = v;
      }
    }
  }

 private:
  int dim_;
  double down_;
  double up_;
  double omega_;
  std::vector<double> sqrt_;
  std::vector<double> raise_diag_;
};

struct Integration {
  std::vector<FockOperator> states;
  double max_trace_drift = 0.0;
  double max_hermiticity_drift = 0.0;
  double min_eigenvalue = 1.0;
};

Integration integrate(const FockOperator &rho0, const LindbladConfig &cfg,
                      std::span<const double> times, double h) {
  const LindbladGenerator gen(cfg);
  Matrix rho = rho0.matrix();
  const Complex trace0 = rho.trace();
  const int dim = cfg.cutoff + 1;
  Matrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim);

  Integration out;
  out.states.reserve(times.size());
  double t = 0.0;
  for (double target : times) {
    const double span = target - t;
    const auto substeps =
        static_cast<long>(std::ceil(span / h - 1e-9));
    if (substeps > 0) {
      const double dt = span / static_cast<double>(substeps);
      for (long s = 0; s < substeps; ++s) {
        gen.apply(rho, k1);
        tmp = rho + (0.5 * dt) * k1;
        gen.apply(tmp, k2);
        tmp = rho + (0.5 * dt) * k2;
        gen.apply(tmp, k3);
        tmp = rho + dt * k3;
        gen.apply(tmp, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double herm = hermiticity_defect(rho);
        out.max_hermiticity_drift = std::max(out.max_hermiticity_drift, herm);
        if (!(herm <= cfg.hermiticity_tolerance))
          fail(ErrorCode::IntegrationFailure,
               "evolve_master: hermiticity drift " + format_value(herm) +
                   " in one step at t = " + format_value(t) +
                   " (step " + format_value(dt) + " too large?)");
        rho = 0.5 * (rho + rho.adjoint()).eval();
        const double drift = std::abs(rho.trace() - trace0);
        out.max_trace_drift = std::max(out.max_trace_drift, drift);
        if (!(drift <= cfg.trace_tolerance))
          fail(ErrorCode::IntegrationFailure,
               "evolve_master: trace drift " + format_value(drift) +
                   " at t = " + format_value(t) + " (step " +
                   format_value(dt) + " too large?)");
      }
    }
    t = target;
    FockOperator snap(rho);
    const double lowest = min_eigenvalue(snap);
    out.min_eigenvalue = std::min(out.min_eigenvalue, lowest);
    if (lowest < -cfg.positivity_tolerance)
      fail(ErrorCode::IntegrationFailure,
           "evolve_master: negative eigenvalue " + format_value(lowest) +
               " at t = " + format_value(t));
    out.states.push_back(std::move(snap));
  }
  return out;
}

double state_purity(const FockOperator &rho) { return rho.matrix().squaredNorm(); }

}  // namespace

void LindbladConfig::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    fail(ErrorCode::InvalidArgument, "LindbladConfig: gamma must be > 0");
  if (!(nbar >= 0.0) || !std::isfinite(nbar))
    fail(ErrorCode::InvalidArgument, "LindbladConfig: nbar must be >= 0");
  if (cutoff < 1)
    fail(ErrorCode::InvalidArgument, "LindbladConfig: cutoff must be >= 1");
  if (!(step >= 0.0) || !std::isfinite(step))
    fail(ErrorCode::InvalidArgument, "LindbladConfig: step must be >= 0");
  if (!(omega >= 0.0) || !std::isfinite(omega))
    fail(ErrorCode::InvalidArgument, "LindbladConfig: omega must be >= 0");
}

double LindbladConfig::default_step() const {
  // Gershgorin bound on the generator's spectral radius. Stability alone
  // would allow about 2/radius, but nearly pure states need the local error
  // well under the positivity tolerance, which takes roughly 8x smaller.
  const double radius = 4.0 * gamma * (1.0 + 2.0 * nbar) * (cutoff + 1) +
                        omega * cutoff;
  return std::min(0.05 / gamma, 0.25 / radius);
}

FockOperator lindblad_rhs(const FockOperator &rho, const LindbladConfig &cfg) {
  cfg.validate();
  if (rho.mode_count() != 1 || rho.dim() != cfg.cutoff + 1)
    fail(ErrorCode::InvalidArgument,
         "lindblad_rhs: rho dimension " + std::to_string(rho.dim()) +
             " does not match cutoff " + std::to_string(cfg.cutoff));
  Matrix out;
  LindbladGenerator(cfg).apply(rho.matrix(), out);
  return FockOperator(std::move(out));
}

std::vector<double> MasterTrajectory::linear_entropy() const {
  std::vector<double> z;
  z.reserve(states.size());
  for (const auto &s : states) z.push_back(1.0 - purity(s));
  return z;
}

MasterTrajectory evolve_master(const FockOperator &rho0,
                               const LindbladConfig &cfg,
                               std::span<const double> times) {
  cfg.validate();
  if (rho0.mode_count() != 1 || rho0.dim() != cfg.cutoff + 1)
    fail(ErrorCode::InvalidArgument,
         "evolve_master: rho0 dimension does not match cutoff");
  if (!is_hermitian(rho0))
    fail(ErrorCode::InvalidArgument, "evolve_master: rho0 is not hermitian");
  if (times.empty())
    fail(ErrorCode::InvalidArgument, "evolve_master: empty time grid");
  if (!(times.front() >= 0.0) || !std::is_sorted(times.begin(), times.end()))
    fail(ErrorCode::InvalidArgument,
         "evolve_master: times must be ascending from t >= 0");

  const double h = cfg.step > 0.0 ? cfg.step : cfg.default_step();
  Integration run = integrate(rho0, cfg, times, h);

  MasterTrajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.step = h;
  traj.max_trace_drift = run.max_trace_drift;
  traj.max_hermiticity_drift = run.max_hermiticity_drift;
  traj.min_eigenvalue = run.min_eigenvalue;
  if (cfg.refine) {
    const Integration half = integrate(rho0, cfg, times, 0.5 * h);
    double delta = 0.0;
    for (std::size_t i = 0; i < run.states.size(); ++i)
      delta = std::max(delta, std::abs(state_purity(run.states[i]) -
                                       state_purity(half.states[i])));
    traj.richardson_delta = delta;
  }
  traj.states = std::move(run.states);
  return traj;
}

FockOperator closed_form_master_state(double t, const ModelParams &p,
                                      int cutoff, double tol) {
  const MasterSolution s = master_solution_params(t, p);
  return displaced_thermal_state(s.alpha_t, s.nbar_t, cutoff, tol);
}

int default_master_cutoff(Complex alpha0, double nbar, double tol) {
  const double a = std::abs(alpha0);
  const int from_amplitude = static_cast<int>(std::ceil(a * a + 6.0 * a + 1.0));
  return std::max({from_amplitude, smallest_thermal_cutoff(nbar, tol),
                   smallest_coherent_cutoff(alpha0, tol)});
}

}  // namespace minienv
