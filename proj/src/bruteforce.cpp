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

#include "minienv/bruteforce.hpp"

#include <algorithm>
#include <string>

#include "minienv/error.hpp"
#include "minienv/joint.hpp"
#include "minienv/master.hpp"

namespace minienv {

namespace {

// Truncated states carry trace 1 - tail on each mode.
double trace_slack(double tol) { return std::max(1e-6, 4.0 * tol); }

// Linear entropy of the retained state renormalized to unit trace. The raw
// 1 - Tr rho^2 would report about twice the discarded tail as mixedness.
double retained_linear_entropy(const FockOperator &rho, double tol) {
  const double p = purity(rho, trace_slack(tol));
  const double tr = trace(rho).real();
  return std::max(0.0, 1.0 - p / (tr * tr));
}

}  // namespace

BruteForceRun bruteforce_series(const ModelParams &p,
                                std::span<const double> times,
                                const BruteForceOptions &opts) {
  p.validate();
  BruteForceRun run;
  run.series.times.assign(times.begin(), times.end());
  run.series.model = p.model;
  run.series.params = p;
  auto &zeta = run.series.zeta;
  zeta.reserve(times.size());

  switch (p.model) {
    case Model::MasterEq: {
      const int cutoff = opts.cutoff_a > 0
                             ? opts.cutoff_a
                             : default_master_cutoff(p.alpha0, p.nbar, opts.single_tol);
      const FockOperator rho0 =
          coherent_state(CoherentSpec::make(p.alpha0, cutoff), opts.single_tol);
      // The thermal steady state must also fit below the cutoff.
      const double tail = thermal_tail(p.nbar, cutoff);
      if (tail >= opts.single_tol)
        fail(ErrorCode::CutoffTooSmall,
             "master engine: thermal tail " + format_value(tail) +
                 " at cutoff " + std::to_string(cutoff) +
                 " is not below tolerance " + format_value(opts.single_tol));
      LindbladConfig cfg;
      cfg.gamma = p.rate;
      cfg.nbar = p.nbar;
      cfg.cutoff = cutoff;
      cfg.step = opts.step;
      cfg.omega = p.omega;
      const MasterTrajectory traj = evolve_master(rho0, cfg, times);
      for (const auto &rho : traj.states) zeta.push_back(retained_linear_entropy(rho, opts.single_tol));
      run.cutoff_a = cutoff;
      break;
    }
    case Model::Amplitude: {
      const int automatic = smallest_exchange_cutoff(p.alpha0, p.nbar, opts.joint_tol);
      JointConfig cfg;
      cfg.cutoff_a = opts.cutoff_a > 0 ? opts.cutoff_a : automatic;
      cfg.cutoff_b = opts.cutoff_b > 0 ? opts.cutoff_b : automatic;
      cfg.coupling = p.rate;
      cfg.omega = p.omega;
      cfg.model = Model::Amplitude;
      const AmplitudeEngine engine(p.alpha0, p.nbar, cfg, opts.joint_tol);
      for (double t : times)
        zeta.push_back(retained_linear_entropy(engine.reduced_state(t), opts.joint_tol));
      run.cutoff_a = cfg.cutoff_a;
      run.cutoff_b = cfg.cutoff_b;
      break;
    }
    case Model::PhaseKerr: {
      JointConfig cfg;
      cfg.cutoff_a = opts.cutoff_a > 0
                         ? opts.cutoff_a
                         : smallest_coherent_cutoff(p.alpha0, opts.joint_tol);
      cfg.cutoff_b = opts.cutoff_b > 0
                         ? opts.cutoff_b
                         : smallest_thermal_cutoff(p.nbar, opts.joint_tol);
      cfg.coupling = p.rate;
      cfg.omega = p.omega;
      cfg.model = Model::PhaseKerr;
      for (double t : times)
        zeta.push_back(retained_linear_entropy(
            evolve_kerr_reduced(p.alpha0, p.nbar, t, cfg, opts.joint_tol), opts.joint_tol));
      run.cutoff_a = cfg.cutoff_a;
      run.cutoff_b = cfg.cutoff_b;
      break;
    }
  }
  return run;
}

}  // namespace minienv
