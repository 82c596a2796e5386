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

#ifndef MINIENV_JOINT_HPP
#define MINIENV_JOINT_HPP

#include <vector>

#include "minienv/analytic.hpp"
#include "minienv/fock.hpp"
#include "minienv/states.hpp"

namespace minienv {

inline constexpr int kDefaultMaxJointDim = 4096;

/// Joint-dimension cap: MINIENV_MAX_JOINT_DIM when set to a positive
/// integer, kDefaultMaxJointDim otherwise.
int max_joint_dim();

struct JointConfig {
  int cutoff_a = 10;
  int cutoff_b = 10;
  double coupling = 1.0;  // kappa or lambda
  double omega = 0.0;
  Model model = Model::Amplitude;
  int max_dim = 0;  // 0 reads max_joint_dim()

  int joint_dim() const noexcept { return (cutoff_a + 1) * (cutoff_b + 1); }
  void validate() const;
  void require_within_cap() const;
};

/// H = omega (a^dag a + b^dag b) + kappa (a^dag b + b^dag a), or
/// H = omega (a^dag a + b^dag b) + lambda a^dag a b^dag b, with hbar = 1.
FockOperator build_joint_hamiltonian(const JointConfig &cfg);

struct Occupations {
  double na = 0.0;
  double nb = 0.0;
};

// Exchange-coupled pair |alpha0><alpha0| x thermal(nbar). Each thermal
// component |alpha0>|k> is propagated as a pure state under
// U(t) = V exp(-i L t) V^dag with the eigendecomposition computed once.
class AmplitudeEngine {
 public:
  AmplitudeEngine(Complex alpha0, double nbar, const JointConfig &cfg,
                  double tol = kJointTolerance);

  /// Tr_B of the evolved joint state, summed over thermal components in
  /// ascending k.
  FockOperator reduced_state(double t) const;

  Occupations occupations(double t) const;

  /// Norm^2 of every evolved pure component, for unitarity checks.
  std::vector<double> component_norms(double t) const;

  /// Evolved pure component k as a joint vector.
  Vector component(std::size_t k, double t) const;

  std::size_t component_count() const noexcept { return weights_.size(); }
  const JointConfig &config() const noexcept { return cfg_; }

 private:
  Matrix evolved(double t) const;

  JointConfig cfg_;
  SpectralDecomposition spectrum_;
  Matrix coeffs_;  // V^dag applied to each initial component, as columns
  std::vector<double> weights_;
};

FockOperator evolve_amplitude(Complex alpha0, double nbar, double t,
                              const JointConfig &cfg,
                              double tol = kJointTolerance);

/// sum_k p_k |alpha_k><alpha_k|, alpha_k = alpha0 exp(-i (omega + lambda k) t),
/// built directly in the A-mode basis.
FockOperator evolve_kerr_reduced(Complex alpha0, double nbar, double t,
                                 const JointConfig &cfg,
                                 double tol = kJointTolerance);

/// Explicit two-mode cross-Kerr state U (rho_A(0) x rho_B(0)) U^dag.
/// Subject to the joint-dimension cap.
FockOperator kerr_joint_state(Complex alpha0, double nbar, double t,
                              const JointConfig &cfg,
                              double tol = kJointTolerance);

Occupations mean_occupation_exchange(Complex alpha0, double nbar, double t,
                                     const JointConfig &cfg,
                                     double tol = kJointTolerance);

}  // namespace minienv

#endif  // MINIENV_JOINT_HPP
