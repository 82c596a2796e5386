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

#ifndef MINIENV_ANALYTIC_HPP
#define MINIENV_ANALYTIC_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "minienv/fock.hpp"

namespace minienv {

// Environment models for oscillator A:
//   MasterEq  - Markovian thermal bath, rate gamma
//   Amplitude - one thermal oscillator, exchange coupling kappa
//   PhaseKerr - one thermal oscillator, cross-Kerr coupling lambda
enum class Model { MasterEq, Amplitude, PhaseKerr };

std::string_view model_name(Model m) noexcept;  // "master", "amplitude", "kerr"
std::optional<Model> parse_model(std::string_view name) noexcept;

struct ModelParams {
  Complex alpha0{};  // initial coherent amplitude of oscillator A
  double nbar = 0.0;
  double rate = 1.0;  // gamma, kappa or lambda
  double omega = 0.0;
  Model model = Model::MasterEq;

  void validate() const;
  ModelParams with_model(Model m) const {
    ModelParams p = *this;
    p.model = m;
    return p;
  }
};

struct PFunctionGaussian {
  Complex center{};    // C(t)
  double width = 0.0;  // S(t)

  // Value of the P-function at phase-space point alpha; only defined for
  // width > 0 (width 0 is the delta-like coherent limit).
  double operator()(Complex alpha) const;
};

struct EntropySeries {
  std::vector<double> times;
  std::vector<double> zeta;
  Model model = Model::MasterEq;
  ModelParams params;
};

struct MasterSolution {
  Complex alpha_t{};
  double nbar_t = 0.0;
};

struct HeisenbergCoeffs {
  Complex a{};  // A(t)
  Complex b{};  // B(t)
};

// Default thermal tail tolerance for the cross-Kerr double sum.
inline constexpr double kZeta3Tolerance = 1e-8;

double zeta1(double t, const ModelParams &p);
double zeta2(double t, const ModelParams &p);

/// Cross-Kerr linear entropy with explicit truncation kmax. Throws
/// CutoffTooSmall when the thermal tail above kmax is >= tol.
double zeta3(double t, const ModelParams &p, int kmax,
             double tol = kZeta3Tolerance);
double zeta3(double t, const ModelParams &p);

/// Dispatches on p.model using default truncations.
double zeta(double t, const ModelParams &p);

// Precomputed lag weights for repeated cross-Kerr evaluations. The
// truncated thermal weights are renormalized so zeta3(0) is exactly 0.
class Zeta3Kernel {
 public:
  Zeta3Kernel(const ModelParams &p, int kmax, double tol = kZeta3Tolerance);
  explicit Zeta3Kernel(const ModelParams &p);

  double operator()(double t) const;
  int kmax() const noexcept { return kmax_; }

 private:
  double alpha_sq_;
  double rate_;
  int kmax_;
  std::vector<double> lag_;  // lag_[d] = sum_k w_k w_{k+d}
};

int default_zeta3_kmax(double nbar, double tol = kZeta3Tolerance);

MasterSolution master_solution_params(double t, const ModelParams &p);
HeisenbergCoeffs heisenberg_coeffs(double t, const ModelParams &p);
PFunctionGaussian p_function_gaussian(double t, const ModelParams &p);

/// Closed-form decoherence-time estimate for each model. Throws
/// NoDecoherence when the model never mixes (nbar = 0, or alpha0 = 0 for
/// the cross-Kerr model).
double decoherence_time_estimate(const ModelParams &p);

/// Maximum of the model's analytic linear entropy: 2n/(1+2n) for the
/// master and amplitude models, the maximum of zeta3 over one recurrence
/// period for the cross-Kerr model.
double analytic_plateau(const ModelParams &p);

/// First time the series reaches (1 - 1/e) of the analytic plateau, with
/// linear interpolation between grid points. Throws NotReached otherwise.
double measured_decoherence_time(const EntropySeries &series);

std::optional<double> recurrence_time(const ModelParams &p);

/// zeta3_tol sets the thermal truncation of the cross-Kerr sum.
EntropySeries analytic_series(const ModelParams &p,
                              std::span<const double> times,
                              double zeta3_tol = kZeta3Tolerance);

std::vector<double> linear_grid(double t0, double t1, std::size_t points);

}  // namespace minienv

#endif  // MINIENV_ANALYTIC_HPP
