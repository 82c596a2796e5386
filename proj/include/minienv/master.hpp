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

#ifndef MINIENV_MASTER_HPP
#define MINIENV_MASTER_HPP

#include <optional>
#include <span>
#include <vector>

#include "minienv/analytic.hpp"
#include "minienv/fock.hpp"
#include "minienv/states.hpp"

namespace minienv {

struct LindbladConfig {
  double gamma = 1.0;
  double nbar = 0.0;
  int cutoff = 20;
  double step = 0.0;  // fixed RK4 step; 0 selects default_step()
  bool refine = false;  // rerun at half step and report the purity change
  double omega = 0.0;   // optional free rotation -i[omega a^dagger a, rho]
  double trace_tolerance = 1e-8;
  double hermiticity_tolerance = 1e-10;  // per-step drift
  double positivity_tolerance = 1e-8;

  void validate() const;

  /// min(0.05/gamma, 0.25/L) where L bounds the spectral radius of the
  /// truncated generator. Chosen for accuracy on nearly pure states, well
  /// inside the RK4 stability region.
  double default_step() const;
};

/// Right-hand side of the thermal Lindblad equation (plus optional free
/// rotation). Operator products use the truncated matrices, so the result
/// is traceless exactly up to rounding.
FockOperator lindblad_rhs(const FockOperator &rho, const LindbladConfig &cfg);

struct MasterTrajectory {
  std::vector<double> times;
  std::vector<FockOperator> states;
  double step = 0.0;
  double max_trace_drift = 0.0;
  double max_hermiticity_drift = 0.0;
  double min_eigenvalue = 0.0;
  std::optional<double> richardson_delta;  // set when cfg.refine

  std::vector<double> linear_entropy() const;
};

/// Fixed-step RK4 integration from t = 0, sampled at `times` (ascending,
/// >= 0). Throws IntegrationFailure when trace, hermiticity or positivity
/// drift past the configured tolerances.
MasterTrajectory evolve_master(const FockOperator &rho0,
                               const LindbladConfig &cfg,
                               std::span<const double> times);

/// Displaced thermal state of the exact solution at time t.
FockOperator closed_form_master_state(double t, const ModelParams &p,
                                      int cutoff,
                                      double tol = kSingleModeTolerance);

/// max(ceil(|a|^2 + 6|a| + 1), thermal cutoff for tol).
int default_master_cutoff(Complex alpha0, double nbar,
                          double tol = kSingleModeTolerance);

}  // namespace minienv

#endif  // MINIENV_MASTER_HPP
