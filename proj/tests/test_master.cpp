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

#include <cmath>

#include "doctest.h"
#include "minienv/master.hpp"
#include "support.hpp"

using namespace minienv;
using minienv::testing::error_of;
using minienv::testing::max_abs;

namespace {

LindbladConfig config(double nbar, int cutoff, double gamma = 1.0) {
  LindbladConfig cfg;
  cfg.gamma = gamma;
  cfg.nbar = nbar;
  cfg.cutoff = cutoff;
  return cfg;
}

ModelParams master_params(Complex alpha0, double nbar) {
  ModelParams p;
  p.model = Model::MasterEq;
  p.alpha0 = alpha0;
  p.nbar = nbar;
  return p;
}

// The generator written with dense matrix products.
Matrix dense_rhs(const Matrix &rho, const LindbladConfig &cfg) {
  const Matrix a = annihilation(cfg.cutoff).matrix();
  const Matrix ad = a.adjoint();
  const Matrix n = ad * a;
  const Matrix m = a * ad;
  const double down = cfg.gamma * (1.0 + cfg.nbar);
  const double up = cfg.gamma * cfg.nbar;
  Matrix out = down * (2.0 * a * rho * ad - n * rho - rho * n) +
               up * (2.0 * ad * rho * a - m * rho - rho * m);
  if (cfg.omega != 0.0) out += Complex(0.0, -cfg.omega) * (n * rho - rho * n);
  return out;
}

}  // namespace

TEST_CASE("right-hand side") {
  std::mt19937_64 rng(13);
  SUBCASE("matches dense products") {
    for (double nbar : {0.0, 0.4, 2.0}) {
      for (double omega : {0.0, 1.5}) {
        LindbladConfig cfg = config(nbar, 11, 0.7);
        cfg.omega = omega;
        const FockOperator rho = testing::random_density(rng, 12);
        const Matrix got = lindblad_rhs(rho, cfg).matrix();
        CHECK(max_abs(got - dense_rhs(rho.matrix(), cfg)) < 1e-12);
      }
    }
  }
  SUBCASE("thermal state is a fixed point") {
    for (double nbar : {0.5, 1.0, 3.0}) {
      for (double gamma : {0.1, 1.0, 7.0}) {
        const int cutoff = 60;
        const FockOperator th = thermal_state(ThermalSpec::make(nbar, cutoff), 1.0);
        CHECK(max_abs(lindblad_rhs(th, config(nbar, cutoff, gamma)).matrix()) < 1e-10);
      }
    }
  }
  SUBCASE("vacuum is stationary at zero temperature") {
    const FockOperator vac = coherent_state(CoherentSpec::make(0.0, 10));
    CHECK(max_abs(lindblad_rhs(vac, config(0.0, 10)).matrix()) == 0.0);
  }
  SUBCASE("traceless and hermitian") {
    for (int trial = 0; trial < 20; ++trial) {
      const FockOperator rho = testing::random_density(rng, 20);
      const Matrix d = lindblad_rhs(rho, config(1.3, 19, 0.9)).matrix();
      CHECK(std::abs(d.trace()) < 1e-12 * 20);
      CHECK(max_abs(d - d.adjoint()) < 1e-13);
    }
  }
  SUBCASE("dimension mismatch") {
    const FockOperator rho = testing::random_density(rng, 5);
    CHECK(error_of([&] { lindblad_rhs(rho, config(1.0, 8)); }) ==
          ErrorCode::InvalidArgument);
  }
}

TEST_CASE("zero temperature keeps the coherent state pure") {
  const int cutoff = default_master_cutoff(2.0, 0.0);
  const auto rho0 = coherent_state(CoherentSpec::make(2.0, cutoff));
  const auto times = linear_grid(0.0, 3.0, 61);
  const MasterTrajectory traj = evolve_master(rho0, config(0.0, cutoff), times);
  for (const auto &rho : traj.states) CHECK(std::abs(purity(rho) - 1.0) < 1e-7);
}

TEST_CASE("thermal bath at nbar = 1") {
  const int cutoff = 40;
  const ModelParams p = master_params(2.0, 1.0);
  const auto rho0 = coherent_state(CoherentSpec::make(2.0, cutoff));
  const auto times = linear_grid(0.0, 3.0, 300);
  LindbladConfig cfg = config(1.0, cutoff);
  cfg.refine = true;
  const MasterTrajectory traj = evolve_master(rho0, cfg, times);
  REQUIRE(traj.states.size() == times.size());
  CHECK(traj.step <= 0.05);
  CHECK(traj.max_trace_drift < 1e-8);
  CHECK(traj.max_hermiticity_drift < 1e-10);
  CHECK(traj.min_eigenvalue >= -1e-8);

  {  // linear entropy follows the closed form
    const auto z = traj.linear_entropy();
    double worst = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
      worst = std::max(worst, std::abs(z[i] - zeta1(times[i], p)));
    CHECK(worst < 1e-5);
  }
  {  // amplitude decays as exp(-gamma t)
    const Matrix a = annihilation(cutoff).matrix();
    for (std::size_t i = 0; i < times.size(); i += 10) {
      const Complex mean = (a * traj.states[i].matrix()).trace();
      CHECK(std::abs(mean - 2.0 * std::exp(-times[i])) < 1e-6);
    }
  }
  {  // halving the step barely moves the purity
    REQUIRE(traj.richardson_delta.has_value());
    CHECK(*traj.richardson_delta < 1e-7);
  }
  {  // linear entropy is nondecreasing
    const auto z = traj.linear_entropy();
    for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i] >= z[i - 1] - 1e-8);
  }
}

TEST_CASE("closed-form displaced thermal state") {
  const int cutoff = 40;
  const ModelParams p = master_params(2.0, 1.0);
  SUBCASE("t = 0 is the coherent state") {
    const auto rho = closed_form_master_state(0.0, p, cutoff);
    const auto coh = coherent_state(CoherentSpec::make(2.0, cutoff));
    CHECK(max_abs(rho.matrix() - coh.matrix()) < 1e-12);
  }
  SUBCASE("agrees with the integrator") {
    const std::vector<double> times{0.1, 0.5, 1.0};
    const auto rho0 = coherent_state(CoherentSpec::make(2.0, cutoff));
    const MasterTrajectory traj = evolve_master(rho0, config(1.0, cutoff), times);
    for (std::size_t i = 0; i < times.size(); ++i)
      CHECK(trace_distance(traj.states[i], closed_form_master_state(times[i], p, cutoff)) <
            1e-5);
  }
  SUBCASE("long times reach thermal equilibrium") {
    const auto th = thermal_state(ThermalSpec::make(1.0, cutoff));
    // The residual displacement 2 e^{-gamma t} sets the distance: about
    // 4e-5 at gamma t = 10, below 1e-6 by gamma t = 16.
    CHECK(trace_distance(closed_form_master_state(10.0, p, cutoff), th) < 1e-4);
    CHECK(trace_distance(closed_form_master_state(16.0, p, cutoff), th) < 1e-6);
  }
}

TEST_CASE("free rotation leaves the purity alone") {
  const int cutoff = 30;
  const auto rho0 = coherent_state(CoherentSpec::make(Complex(1.0, 1.0), cutoff));
  const auto times = linear_grid(0.0, 2.0, 21);
  LindbladConfig cfg = config(0.8, cutoff);
  LindbladConfig rotating = cfg;
  rotating.omega = 3.0;
  rotating.step = cfg.default_step();  // same step, only the generator differs
  const auto still = evolve_master(rho0, cfg, times).linear_entropy();
  const auto turning = evolve_master(rho0, rotating, times).linear_entropy();
  for (std::size_t i = 0; i < times.size(); ++i)
    CHECK(std::abs(still[i] - turning[i]) < 1e-9);
}

TEST_CASE("integrator failures and bad input") {
  const int cutoff = 40;
  const auto rho0 = coherent_state(CoherentSpec::make(2.0, cutoff));
  SUBCASE("oversized step") {
    LindbladConfig cfg = config(1.0, cutoff);
    cfg.step = 0.5;
    CHECK(error_of([&] { evolve_master(rho0, cfg, linear_grid(0.0, 3.0, 7)); }) ==
          ErrorCode::IntegrationFailure);
  }
  SUBCASE("times must ascend from zero") {
    const std::vector<double> back{0.0, 1.0, 0.5};
    CHECK(error_of([&] { evolve_master(rho0, config(1.0, cutoff), back); }) ==
          ErrorCode::InvalidArgument);
    const std::vector<double> negative{-0.1, 1.0};
    CHECK(error_of([&] { evolve_master(rho0, config(1.0, cutoff), negative); }) ==
          ErrorCode::InvalidArgument);
  }
  SUBCASE("dimension mismatch") {
    CHECK(error_of([&] { evolve_master(rho0, config(1.0, 20), std::vector<double>{1.0}); }) ==
          ErrorCode::InvalidArgument);
  }
  SUBCASE("configuration") {
    CHECK(error_of([] { config(1.0, 10, 0.0).validate(); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { config(-1.0, 10).validate(); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { config(1.0, 0).validate(); }) == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("default cutoff") {
  CHECK(default_master_cutoff(2.0, 0.0) >= 17);
  CHECK(default_master_cutoff(0.0, 1.0) == smallest_thermal_cutoff(1.0, kSingleModeTolerance));
  CHECK(default_master_cutoff(5.0, 0.0) >= smallest_coherent_cutoff(5.0, kSingleModeTolerance));
}
