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

#ifndef MINIENV_BRUTEFORCE_HPP
#define MINIENV_BRUTEFORCE_HPP

#include <span>

#include "minienv/analytic.hpp"
#include "minienv/states.hpp"

namespace minienv {

struct BruteForceOptions {
  int cutoff_a = 0;  // 0 picks the smallest cutoff meeting the tolerance
  int cutoff_b = 0;
  double single_tol = kSingleModeTolerance;  // master engine
  double joint_tol = kJointTolerance;        // two-oscillator engines
  double step = 0.0;                         // RK4 step, 0 = default
};

struct BruteForceRun {
  EntropySeries series;
  int cutoff_a = 0;
  int cutoff_b = 0;  // 0 for the single-mode master engine
};

/// Linear entropy of oscillator A from the truncated-Fock engines: RK4 for
/// the master equation, joint diagonalization for the exchange coupling,
/// and the explicit coherent mixture for cross-Kerr.
BruteForceRun bruteforce_series(const ModelParams &p,
                                std::span<const double> times,
                                const BruteForceOptions &opts = {});

}  // namespace minienv

#endif  // MINIENV_BRUTEFORCE_HPP
