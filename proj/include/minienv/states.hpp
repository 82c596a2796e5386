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

#ifndef MINIENV_STATES_HPP
#define MINIENV_STATES_HPP

#include <vector>

#include "minienv/fock.hpp"

namespace minienv {

// Tail-mass tolerances. Joint brute force uses the looser one so that the
// two-mode dimension stays tractable.
inline constexpr double kSingleModeTolerance = 1e-10;
inline constexpr double kJointTolerance = 1e-6;

/// Thermal occupation from hbar*omega / (k_B T); x must be positive.
double nbar_of_temperature(double hbar_omega_over_kT);

/// Geometric weights n^k / (1+n)^(k+1), k = 0..cutoff (not renormalized).
std::vector<double> thermal_weights(double nbar, int cutoff);

/// Mass of the discarded levels k > cutoff: (n/(1+n))^(cutoff+1).
double thermal_tail(double nbar, int cutoff);

/// Number-basis amplitudes of |alpha>, n = 0..cutoff (not renormalized).
Vector coherent_amplitudes(Complex alpha, int cutoff);

/// Poisson mass above cutoff for mean |alpha|^2.
double coherent_tail(Complex alpha, int cutoff);

int smallest_thermal_cutoff(double nbar, double tol);
int smallest_coherent_cutoff(Complex alpha, double tol);

/// Smallest common cutoff for a two-mode run where the excitations of
/// |alpha> and thermal(nbar) may all end up in one mode: the tail of the
/// Poisson * geometric convolution drops below tol.
int smallest_exchange_cutoff(Complex alpha, double nbar, double tol);

struct ThermalSpec {
  double nbar = 0.0;
  int cutoff = 1;
  double tail_mass = 0.0;

  static ThermalSpec make(double nbar, int cutoff);
};

struct CoherentSpec {
  Complex alpha{};
  int cutoff = 1;
  double tail_mass = 0.0;

  static CoherentSpec make(Complex alpha, int cutoff);
};

/// |alpha><alpha| truncated; trace = 1 - tail_mass. Throws CutoffTooSmall
/// when tail_mass >= tol.
FockOperator coherent_state(const CoherentSpec &spec,
                            double tol = kSingleModeTolerance);

FockOperator thermal_state(const ThermalSpec &spec,
                           double tol = kSingleModeTolerance);

/// exp(alpha a^dagger - conj(alpha) a) built by exponentiating the
/// truncated generator, so the result is exactly unitary on the cutoff.
FockOperator displacement_operator(Complex alpha, int cutoff);

/// D(alpha) thermal(nbar_t) D(alpha)^dagger.
FockOperator displaced_thermal_state(Complex alpha, double nbar_t, int cutoff,
                                     double tol = kSingleModeTolerance);

/// <alpha|beta> in closed form.
Complex coherent_overlap(Complex alpha, Complex beta);

}  // namespace minienv

#endif  // MINIENV_STATES_HPP
