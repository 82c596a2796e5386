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

#include "minienv/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minienv/error.hpp"
#include "minienv/states.hpp"

namespace minienv {

namespace {

void require_time(double t, const char *where) {
  if (!(t >= 0.0) || !std::isfinite(t))
    fail(ErrorCode::InvalidArgument,
         std::string(where) + ": t must be finite and >= 0");
}

void require_model(const ModelParams &p, Model m, const char *where) {
  p.validate();
  if (p.model != m)
    fail(ErrorCode::InvalidArgument,
         std::string(where) + ": requires model '" +
             std::string(model_name(m)) + "', got '" +
             std::string(model_name(p.model)) + "'");
}

// x / (1 + x) == 1 - 1/(1 + x) without cancellation at small x.
double mixedness(double x) { return x / (1.0 + x); }

double golden_max(const auto &f, double lo, double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && (b - a) > 1e-14 * (1.0 + std::abs(b)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace

std::string_view model_name(Model m) noexcept {
  switch (m) {
    case Model::MasterEq: return "master";
    case Model::Amplitude: return "amplitude";
    case Model::PhaseKerr: return "kerr";
  }
  return "unknown";
}

std::optional<Model> parse_model(std::string_view name) noexcept {
  if (name == "master") return Model::MasterEq;
  if (name == "amplitude") return Model::Amplitude;
  if (name == "kerr") return Model::PhaseKerr;
  return std::nullopt;
}

void ModelParams::validate() const {
  if (!(rate > 0.0) || !std::isfinite(rate))
    fail(ErrorCode::InvalidArgument, "ModelParams: rate must be finite and > 0");
  if (!(nbar >= 0.0) || !std::isfinite(nbar))
    fail(ErrorCode::InvalidArgument, "ModelParams: nbar must be finite and >= 0");
  if (!(omega >= 0.0) || !std::isfinite(omega))
    fail(ErrorCode::InvalidArgument, "ModelParams: omega must be finite and >= 0");
  if (!std::isfinite(alpha0.real()) || !std::isfinite(alpha0.imag()))
    fail(ErrorCode::InvalidArgument, "ModelParams: alpha0 must be finite");
}

double PFunctionGaussian::operator()(Complex alpha) const {
  if (!(width > 0.0))
    fail(ErrorCode::InvalidArgument,
         "PFunctionGaussian: zero width is the coherent (delta) limit");
  return std::exp(-std::norm(alpha - center) / width) /
         (std::numbers::pi * width);
}

double zeta1(double t, const ModelParams &p) {
  require_model(p, Model::MasterEq, "zeta1");
  require_time(t, "zeta1");
  return mixedness(2.0 * p.nbar * -std::expm1(-2.0 * p.rate * t));
}

double zeta2(double t, const ModelParams &p) {
  require_model(p, Model::Amplitude, "zeta2");
  require_time(t, "zeta2");
  const double s = std::sin(p.rate * t);
  return mixedness(2.0 * p.nbar * s * s);
}

int default_zeta3_kmax(double nbar, double tol) {
  return smallest_thermal_cutoff(nbar, tol);
}

Zeta3Kernel::Zeta3Kernel(const ModelParams &p, int kmax, double tol)
    : alpha_sq_(std::norm(p.alpha0)), rate_(p.rate), kmax_(kmax) {
  require_model(p, Model::PhaseKerr, "zeta3");
  if (kmax < 1) fail(ErrorCode::InvalidArgument, "zeta3: kmax must be >= 1");
  const double tail = thermal_tail(p.nbar, kmax);
  if (tail >= tol)
    fail(ErrorCode::CutoffTooSmall,
         "zeta3: thermal tail " + format_value(tail) + " at kmax " +
             std::to_string(kmax) + " is not below " + format_value(tol));
  if (p.nbar == 0.0) {
    lag_ = {1.0};
    return;
  }
  // w_k = (1-r) r^k / (1 - r^(K+1)); the lag sums are geometric:
  // sum_{k=0}^{K-d} w_k w_{k+d}
  //   = (1-r)/(1+r) r^d (1 - r^(2(K-d+1))) / (1 - r^(K+1))^2
  const double r = p.nbar / (1.0 + p.nbar);
  const double log_r = std::log(r);
  const double norm = -std::expm1((kmax + 1) * log_r);
  const double pre = (1.0 - r) / (1.0 + r) / (norm * norm);
  lag_.resize(static_cast<std::size_t>(kmax) + 1);
  for (int d = 0; d <= kmax; ++d)
    lag_[d] = pre * std::exp(d * log_r) *
              -std::expm1(2.0 * (kmax - d + 1) * log_r);
}

Zeta3Kernel::Zeta3Kernel(const ModelParams &p)
    : Zeta3Kernel(p, default_zeta3_kmax(p.nbar)) {}

double Zeta3Kernel::operator()(double t) const {
  require_time(t, "zeta3");
  // 1 - sum_{k,l} w_k w_l exp(-2|a|^2 (1 - cos(rate (k-l) t))), using
  // sum w = 1 and 1 - cos x = 2 sin^2(x/2) to avoid cancellation.
  double sum = 0.0;
  for (std::size_t d = 1; d < lag_.size(); ++d) {
    const double s = std::sin(0.5 * rate_ * static_cast<double>(d) * t);
    sum += lag_[d] * -std::expm1(-4.0 * alpha_sq_ * s * s);
  }
  return 2.0 * sum;
}

double zeta3(double t, const ModelParams &p, int kmax, double tol) {
  return Zeta3Kernel(p, kmax, tol)(t);
}

double zeta3(double t, const ModelParams &p) { return Zeta3Kernel(p)(t); }

double zeta(double t, const ModelParams &p) {
  switch (p.model) {
    case Model::MasterEq: return zeta1(t, p);
    case Model::Amplitude: return zeta2(t, p);
    case Model::PhaseKerr: return zeta3(t, p);
  }
  fail(ErrorCode::InvalidArgument, "zeta: unknown model");
}

MasterSolution master_solution_params(double t, const ModelParams &p) {
  p.validate();
  require_time(t, "master_solution_params");
  // Interaction picture at omega = 0; a nonzero omega adds the free rotation.
  const Complex decay = std::exp(Complex(-p.rate * t, -p.omega * t));
  return {p.alpha0 * decay, p.nbar * -std::expm1(-2.0 * p.rate * t)};
}

HeisenbergCoeffs heisenberg_coeffs(double t, const ModelParams &p) {
  require_model(p, Model::Amplitude, "heisenberg_coeffs");
  require_time(t, "heisenberg_coeffs");
  const Complex free = std::polar(1.0, -p.omega * t);
  return {free * std::cos(p.rate * t),
          Complex(0.0, -1.0) * free * std::sin(p.rate * t)};
}

PFunctionGaussian p_function_gaussian(double t, const ModelParams &p) {
  require_model(p, Model::Amplitude, "p_function_gaussian");
  require_time(t, "p_function_gaussian");
  const double s = std::sin(p.rate * t);
  return {p.alpha0 * std::polar(1.0, -p.omega * t) * std::cos(p.rate * t),
          p.nbar * s * s};
}

double decoherence_time_estimate(const ModelParams &p) {
  p.validate();
  if (p.nbar == 0.0)
    fail(ErrorCode::NoDecoherence,
         "decoherence_time_estimate: nbar = 0, the state stays pure");
  switch (p.model) {
    case Model::MasterEq:
      return 1.0 / (4.0 * p.rate * p.nbar);
    case Model::Amplitude:
      return 1.0 / (p.rate * std::sqrt(2.0 * p.nbar));
    case Model::PhaseKerr:
      if (p.alpha0 == Complex{})
        fail(ErrorCode::NoDecoherence,
             "decoherence_time_estimate: alpha0 = 0 is invariant under cross-Kerr");
      return 1.0 / (5.0 * p.rate * std::sqrt(std::norm(p.alpha0) * p.nbar));
  }
  fail(ErrorCode::InvalidArgument, "decoherence_time_estimate: unknown model");
}

double analytic_plateau(const ModelParams &p) {
  p.validate();
  if (p.model != Model::PhaseKerr) return mixedness(2.0 * p.nbar);
  if (p.nbar == 0.0 || p.alpha0 == Complex{}) return 0.0;
  // zeta3 is symmetric about half its period, so [0, pi/lambda] suffices.
  const Zeta3Kernel z(p);
  const int grid = 4096;
  const double span = std::numbers::pi / p.rate;
  const double h = span / grid;
  int best = 0;
  double best_val = 0.0;
  for (int i = 0; i <= grid; ++i) {
    const double v = z(i * h);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = std::max(0.0, (best - 1) * h);
  const double hi = std::min(span, (best + 1) * h);
  return std::max(best_val, golden_max(z, lo, hi));
}

double measured_decoherence_time(const EntropySeries &series) {
  if (series.times.empty() || series.times.size() != series.zeta.size())
    fail(ErrorCode::InvalidArgument,
         "measured_decoherence_time: times and zeta must be non-empty and equal length");
  const double plateau = analytic_plateau(series.params.with_model(series.model));
  if (!(plateau > 0.0))
    fail(ErrorCode::NotReached,
         "measured_decoherence_time: model has no mixing plateau");
  const double threshold = (1.0 - std::exp(-1.0)) * plateau;
  for (std::size_t i = 0; i < series.zeta.size(); ++i) {
    if (series.zeta[i] < threshold) continue;
    if (i == 0) return series.times[0];
    const double z0 = series.zeta[i - 1], z1 = series.zeta[i];
    const double t0 = series.times[i - 1], t1 = series.times[i];
    return t0 + (threshold - z0) / (z1 - z0) * (t1 - t0);
  }
  fail(ErrorCode::NotReached,
       "measured_decoherence_time: series never reaches " +
           format_value(threshold));
}

std::optional<double> recurrence_time(const ModelParams &p) {
  p.validate();
  switch (p.model) {
    case Model::MasterEq: return std::nullopt;
    case Model::Amplitude: return std::numbers::pi / p.rate;
    case Model::PhaseKerr: return 2.0 * std::numbers::pi / p.rate;
  }
  return std::nullopt;
}

std::vector<double> linear_grid(double t0, double t1, std::size_t points) {
  if (points < 2)
    fail(ErrorCode::InvalidArgument, "linear_grid: at least 2 points required");
  if (!(t0 >= 0.0) || !(t1 > t0) || !std::isfinite(t1))
    fail(ErrorCode::InvalidArgument, "linear_grid: need 0 <= t0 < t1");
  std::vector<double> t(points);
  const double span = t1 - t0;
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    t[i] = t0 + span * (static_cast<double>(i) / last);
  t.back() = t1;
  return t;
}

EntropySeries analytic_series(const ModelParams &p,
                              std::span<const double> times,
                              double zeta3_tol) {
  p.validate();
  EntropySeries s{{times.begin(), times.end()}, {}, p.model, p};
  s.zeta.reserve(times.size());
  if (p.model == Model::PhaseKerr) {
    const Zeta3Kernel z(p, default_zeta3_kmax(p.nbar, zeta3_tol), zeta3_tol);
    for (double t : times) s.zeta.push_back(z(t));
  } else {
    for (double t : times) s.zeta.push_back(zeta(t, p));
  }
  return s;
}

}  // namespace minienv
