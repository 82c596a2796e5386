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
#include <numbers>

#include "doctest.h"
#include "minienv/analytic.hpp"
#include "minienv/states.hpp"
#include "support.hpp"

using namespace minienv;
using minienv::testing::error_of;

namespace {

constexpr double kPi = std::numbers::pi;

ModelParams params(Model m, Complex alpha0, double nbar, double rate = 1.0,
                   double omega = 0.0) {
  ModelParams p;
  p.model = m;
  p.alpha0 = alpha0;
  p.nbar = nbar;
  p.rate = rate;
  p.omega = omega;
  return p;
}

// Plain double sum over the truncated thermal weights, one cosine per pair.
// Weights are not renormalized; kmax is taken far beyond the tail.
double zeta3_double_sum(double t, double alpha_sq, double nbar, double rate,
                        int kmax) {
  std::vector<double> w(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    w[k] = std::pow(nbar, k) / std::pow(1.0 + nbar, k + 1);
  double s = 0.0;
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= kmax; ++l)
      s += w[k] * w[l] *
           std::exp(-2.0 * alpha_sq * (1.0 - std::cos(rate * (k - l) * t)));
  return 1.0 - s;
}

// Bisection on a monotone function for f(t) = target on [lo, hi].
template <class F>
double bisect(F f, double target, double lo, double hi) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("model names round trip") {
  for (Model m : {Model::MasterEq, Model::Amplitude, Model::PhaseKerr})
    CHECK(parse_model(model_name(m)) == m);
  CHECK_FALSE(parse_model("thermal").has_value());
}

TEST_CASE("parameter validation") {
  CHECK(error_of([] { params(Model::MasterEq, 1.0, 1.0, 0.0).validate(); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] { params(Model::MasterEq, 1.0, -0.5).validate(); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] { params(Model::MasterEq, 1.0, 1.0, 1.0, -1.0).validate(); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] { zeta1(-0.1, params(Model::MasterEq, 1.0, 1.0)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] { zeta2(-0.1, params(Model::Amplitude, 1.0, 1.0)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] { zeta1(0.1, params(Model::Amplitude, 1.0, 1.0)); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("zeta1") {
  const ModelParams p = params(Model::MasterEq, 2.0, 1.0);
  CHECK(zeta1(0.0, p) == 0.0);
  // High-precision value of 1 - 1/(1 + 2(1 - e^-1)).
  CHECK(std::abs(zeta1(0.5, p) - 0.558350922875770) < 1e-14);
  CHECK(std::abs(zeta1(40.0, params(Model::MasterEq, 5.0, 25.0)) - 50.0 / 51.0) < 1e-14);
  // Independent of alpha0.
  CHECK(zeta1(0.3, p) == zeta1(0.3, params(Model::MasterEq, Complex(0.0, 7.0), 1.0)));
}

TEST_CASE("zeta2") {
  const ModelParams p = params(Model::Amplitude, 1.0, 1.0);
  CHECK(std::abs(zeta2(kPi / 2, p) - 2.0 / 3.0) < 1e-14);
  for (int m = 1; m <= 4; ++m) CHECK(zeta2(m * kPi, p) < 1e-28);
  const ModelParams q = params(Model::Amplitude, 5.0, 25.0, 2.0);
  CHECK(std::abs(zeta2(kPi / 4, q) - 50.0 / 51.0) < 1e-14);
}

TEST_CASE("zeta3") {
  const ModelParams p = params(Model::PhaseKerr, 1.0, 1.0);
  CHECK(zeta3(0.0, p) == 0.0);
  CHECK(zeta3(2.0 * kPi, p) < 1e-12);
  // Even and odd parity masses 5/9 and 4/9 of the geometric distribution.
  const double expected = 4.0 / 9.0 * (1.0 - std::exp(-4.0));
  CHECK(std::abs(zeta3(kPi, p) - expected) < 1e-8);
  CHECK(std::abs(zeta3(kPi, p) - zeta3_double_sum(kPi, 1.0, 1.0, 1.0, 80)) < 1e-8);

  SUBCASE("double sum oracle on a grid") {
    // High-precision reference: nbar = 2, |alpha|^2 = 2.25, lambda t = 0.7.
    const ModelParams q = params(Model::PhaseKerr, 1.5, 2.0);
    CHECK(std::abs(zeta3(0.7, q) - 0.683403612443217) < 1e-8);
    for (double t : linear_grid(0.0, 2.0 * kPi, 37))
      CHECK(std::abs(zeta3(t, q) - zeta3_double_sum(t, 2.25, 2.0, 1.0, 120)) < 2e-8);
  }
  SUBCASE("truncation") {
    CHECK(error_of([&] { zeta3(1.0, p, 5); }) == ErrorCode::CutoffTooSmall);
    const int k = default_zeta3_kmax(1.0);
    CHECK(thermal_tail(1.0, k) < kZeta3Tolerance);
    CHECK(thermal_tail(1.0, k - 1) >= kZeta3Tolerance);
    for (double t : linear_grid(0.0, 2.0 * kPi, 50))
      CHECK(std::abs(zeta3(t, p, k) - zeta3(t, p, k + 10)) < 2.0 * kZeta3Tolerance);
  }
  SUBCASE("short-time behaviour is quadratic") {
    const ModelParams q = params(Model::PhaseKerr, 2.0, 2.0);
    // r(h) = zeta3(h)/h^2 = c0 + c1 h^2 + ..., so Richardson on h, h/2, h/4
    // should agree to far better than the raw ratios.
    const double h = 1e-2;
    const double r1 = zeta3(h, q) / (h * h);
    const double r2 = zeta3(h / 2, q) / (h * h / 4);
    const double r3 = zeta3(h / 4, q) / (h * h / 16);
    const double e12 = (4.0 * r2 - r1) / 3.0;
    const double e23 = (4.0 * r3 - r2) / 3.0;
    CHECK(std::abs(e12 - e23) < 1e-3 * std::abs(e23));
    CHECK(std::abs(e23 - e12) < std::abs(r3 - r2));
    // Leading coefficient |a|^2 lambda^2 E[(k-l)^2] = |a|^2 * 2 nbar (1 + nbar).
    CHECK(std::abs(e23 - 4.0 * 2.0 * 2.0 * 3.0) < 1e-3 * e23);
  }
}

TEST_CASE("linear entropy bounds") {
  for (double nbar : {0.5, 1.0, 2.0, 25.0}) {
    const double bound = 2.0 * nbar / (1.0 + 2.0 * nbar) + 1e-12;
    for (Model m : {Model::MasterEq, Model::Amplitude, Model::PhaseKerr}) {
      const ModelParams p = params(m, 1.5, nbar);
      const auto s = analytic_series(p, linear_grid(0.0, 7.0, 500));
      for (double z : s.zeta) {
        CHECK(z >= 0.0);
        CHECK(z <= bound);
      }
      CHECK(std::abs(s.zeta.front()) <= 1e-12);
    }
  }
}

TEST_CASE("zero temperature keeps every model pure") {
  for (Model m : {Model::MasterEq, Model::Amplitude, Model::PhaseKerr}) {
    const ModelParams p = params(m, 2.0, 0.0);
    for (double t : linear_grid(0.0, 10.0, 200)) CHECK(std::abs(zeta(t, p)) <= 1e-14);
  }
}

TEST_CASE("periodicity") {
  const auto grid = linear_grid(0.0, 9.0, 1000);
  const ModelParams a = params(Model::Amplitude, 1.0, 3.0, 1.3);
  const ModelParams k = params(Model::PhaseKerr, 1.2, 1.5, 0.7);
  const Zeta3Kernel z3(k);
  for (double t : grid) {
    CHECK(std::abs(zeta2(t + kPi / 1.3, a) - zeta2(t, a)) < 1e-12);
    CHECK(std::abs(z3(t + 2.0 * kPi / 0.7) - z3(t)) < 1e-12);
  }
}

TEST_CASE("zeta1 and zeta2 share the form 1 - 1/(1+x)") {
  const double nbar = 3.0;
  for (double x : {0.1, 0.5, 1.0, 2.5, 5.0}) {
    // Solve 2n(1 - e^{-2t}) = x and 2n sin^2 t = x for t.
    const double t1 = -0.5 * std::log(1.0 - x / (2.0 * nbar));
    const double t2 = std::asin(std::sqrt(x / (2.0 * nbar)));
    const double z1 = zeta1(t1, params(Model::MasterEq, 1.0, nbar));
    const double z2 = zeta2(t2, params(Model::Amplitude, 1.0, nbar));
    CHECK(std::abs(z1 - z2) < 1e-13);
    CHECK(std::abs(z1 - (1.0 - 1.0 / (1.0 + x))) < 1e-13);
  }
}

TEST_CASE("omega does not change the linear entropy") {
  for (Model m : {Model::MasterEq, Model::Amplitude, Model::PhaseKerr}) {
    for (double t : {0.0, 0.3, 1.7, 4.0}) {
      const double z0 = zeta(t, params(m, 1.0, 1.0, 1.0, 0.0));
      CHECK(zeta(t, params(m, 1.0, 1.0, 1.0, 1.0)) == z0);
      CHECK(zeta(t, params(m, 1.0, 1.0, 1.0, 10.0)) == z0);
    }
  }
}

TEST_CASE("exact master solution parameters") {
  const ModelParams p = params(Model::MasterEq, 5.0, 4.0);
  const MasterSolution s0 = master_solution_params(0.0, p);
  CHECK(s0.alpha_t == Complex(5.0));
  CHECK(s0.nbar_t == 0.0);
  const MasterSolution s1 = master_solution_params(std::log(2.0), p);
  CHECK(std::abs(s1.alpha_t - Complex(2.5)) < 1e-14);
  CHECK(std::abs(s1.nbar_t - 3.0) < 1e-14);
  const MasterSolution s2 = master_solution_params(50.0, p);
  CHECK(std::abs(s2.alpha_t) < 1e-20);
  CHECK(std::abs(s2.nbar_t - 4.0) < 1e-14);
  // Free rotation only changes the phase.
  const MasterSolution s3 = master_solution_params(0.4, params(Model::MasterEq, 5.0, 4.0, 1.0, 2.0));
  CHECK(std::abs(std::abs(s3.alpha_t) - 5.0 * std::exp(-0.4)) < 1e-14);
  CHECK(std::abs(std::arg(s3.alpha_t) + 0.8) < 1e-14);
  CHECK(error_of([&] { master_solution_params(-1.0, p); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Heisenberg coefficients") {
  const ModelParams p = params(Model::Amplitude, 1.0, 1.0);
  const HeisenbergCoeffs c0 = heisenberg_coeffs(0.0, p);
  CHECK(c0.a == Complex(1.0));
  CHECK(c0.b == Complex(0.0));
  const HeisenbergCoeffs swap = heisenberg_coeffs(kPi / 2, p);
  CHECK(std::abs(swap.a) < 1e-15);
  CHECK(std::abs(swap.b - Complex(0.0, -1.0)) < 1e-15);
  const HeisenbergCoeffs back = heisenberg_coeffs(kPi, p);
  CHECK(std::abs(back.a - Complex(-1.0)) < 1e-15);
  CHECK(std::abs(back.b) < 1e-15);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int i = 0; i < 100; ++i) {
    const ModelParams q = params(Model::Amplitude, 1.0, 1.0, u(rng) / 4, u(rng));
    const HeisenbergCoeffs c = heisenberg_coeffs(u(rng), q);
    CHECK(std::abs(std::norm(c.a) + std::norm(c.b) - 1.0) < 1e-14);
  }
}

TEST_CASE("Gaussian P-function") {
  const ModelParams p = params(Model::Amplitude, Complex(1.0, 0.5), 2.0);
  const PFunctionGaussian g0 = p_function_gaussian(0.0, p);
  CHECK(g0.width == 0.0);
  CHECK(g0.center == p.alpha0);
  CHECK(error_of([&] { g0(0.0); }) == ErrorCode::InvalidArgument);
  const PFunctionGaussian g1 = p_function_gaussian(kPi / 2, p);
  CHECK(std::abs(g1.width - 2.0) < 1e-14);
  CHECK(std::abs(g1.center) < 1e-15);
  for (double t : linear_grid(0.0, 5.0, 40)) {
    const PFunctionGaussian g = p_function_gaussian(t, p);
    CHECK(g.width >= 0.0);
    CHECK(g.width <= 2.0);
    CHECK(std::abs(g.center) <= std::abs(p.alpha0) + 1e-15);
    CHECK(p_function_gaussian(t, params(Model::Amplitude, 1.0, 0.0)).width == 0.0);
  }
  SUBCASE("normalized") {
    // Midpoint rule over a square wide enough for the tails.
    const PFunctionGaussian g = p_function_gaussian(0.6, p);
    const int n = 400;
    const double half = 12.0, h = 2.0 * half / n;
    double mass = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mass += g(g.center + Complex(-half + (i + 0.5) * h, -half + (j + 0.5) * h));
    CHECK(std::abs(mass * h * h - 1.0) < 1e-9);
  }
  SUBCASE("the state it describes has linear entropy zeta2") {
    // A Gaussian P-function of width S is a displaced thermal state of
    // occupation S, whose purity is 1/(1 + 2S).
    for (double t : {0.2, 0.9, 1.4}) {
      const PFunctionGaussian g = p_function_gaussian(t, p);
      const FockOperator rho = displaced_thermal_state(g.center, g.width, 90);
      CHECK(std::abs((1.0 - purity(rho)) - zeta2(t, p)) < 1e-9);
    }
  }
}

TEST_CASE("decoherence-time estimates") {
  CHECK(decoherence_time_estimate(params(Model::MasterEq, 5.0, 25.0)) ==
        doctest::Approx(0.01).epsilon(1e-14));
  CHECK(decoherence_time_estimate(params(Model::Amplitude, 5.0, 25.0)) ==
        doctest::Approx(1.0 / std::sqrt(50.0)).epsilon(1e-14));
  CHECK(decoherence_time_estimate(params(Model::PhaseKerr, 5.0, 25.0)) ==
        doctest::Approx(0.008).epsilon(1e-14));
  CHECK(decoherence_time_estimate(params(Model::PhaseKerr, 5.0, 1.0)) ==
        doctest::Approx(0.04).epsilon(1e-14));
  CHECK(error_of([] { decoherence_time_estimate(params(Model::MasterEq, 5.0, 0.0)); }) ==
        ErrorCode::NoDecoherence);
  CHECK(error_of([] { decoherence_time_estimate(params(Model::PhaseKerr, 0.0, 1.0)); }) ==
        ErrorCode::NoDecoherence);
}

TEST_CASE("measured decoherence times") {
  const double frac = 1.0 - std::exp(-1.0);
  SUBCASE("master") {
    const ModelParams p = params(Model::MasterEq, 5.0, 25.0);
    const auto s = analytic_series(p, linear_grid(0.0, 0.2, 4001));
    const double measured = measured_decoherence_time(s);
    const double root =
        bisect([&](double t) { return zeta1(t, p); }, frac * 50.0 / 51.0, 0.0, 1.0);
    CHECK(std::abs(measured - root) < 1e-6);
    CHECK(measured / 0.01 < 3.0);
    CHECK(measured / 0.01 > 1.0 / 3.0);
  }
  SUBCASE("amplitude") {
    const ModelParams p = params(Model::Amplitude, 5.0, 25.0);
    const auto s = analytic_series(p, linear_grid(0.0, 1.0, 4001));
    const double measured = measured_decoherence_time(s);
    const double root =
        bisect([&](double t) { return zeta2(t, p); }, frac * 50.0 / 51.0, 0.0, kPi / 2);
    CHECK(std::abs(measured - root) < 1e-5);
    const double est = 1.0 / std::sqrt(50.0);
    CHECK(measured / est < 3.0);
    CHECK(measured / est > 1.0 / 3.0);
  }
  SUBCASE("plateaus") {
    CHECK(analytic_plateau(params(Model::MasterEq, 1.0, 1.0)) == doctest::Approx(2.0 / 3.0));
    CHECK(analytic_plateau(params(Model::PhaseKerr, 0.0, 1.0)) == 0.0);
    // The cross-Kerr maximum is never below any sampled value.
    const ModelParams k = params(Model::PhaseKerr, 2.0, 2.0);
    const double top = analytic_plateau(k);
    for (double t : linear_grid(0.0, 2.0 * kPi, 3000)) CHECK(zeta3(t, k) <= top + 1e-12);
  }
  SUBCASE("flat series") {
    const auto s = analytic_series(params(Model::MasterEq, 1.0, 0.0), linear_grid(0.0, 3.0, 50));
    CHECK(error_of([&] { measured_decoherence_time(s); }) == ErrorCode::NotReached);
  }
  SUBCASE("series too short") {
    const auto s = analytic_series(params(Model::MasterEq, 1.0, 1.0), linear_grid(0.0, 0.01, 5));
    CHECK(error_of([&] { measured_decoherence_time(s); }) == ErrorCode::NotReached);
  }
}

TEST_CASE("recurrence times") {
  CHECK(recurrence_time(params(Model::Amplitude, 1.0, 1.0, 2.0)) == doctest::Approx(kPi / 2));
  CHECK(recurrence_time(params(Model::PhaseKerr, 1.0, 1.0)) == doctest::Approx(2.0 * kPi));
  CHECK_FALSE(recurrence_time(params(Model::MasterEq, 1.0, 1.0)).has_value());
}

TEST_CASE("time grids") {
  const auto g = linear_grid(0.0, 3.0, 301);
  CHECK(g.size() == 301);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 3.0);
  CHECK(g[100] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(error_of([] { linear_grid(0.0, 1.0, 1); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { linear_grid(-1.0, 1.0, 5); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { linear_grid(1.0, 1.0, 5); }) == ErrorCode::InvalidArgument);
}
