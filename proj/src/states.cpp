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

#include "minienv/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "minienv/error.hpp"

namespace minienv {

namespace {

void require_nbar(double nbar, const char *where) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar))
    fail(ErrorCode::InvalidArgument,
         std::string(where) + ": nbar must be finite and >= 0");
}

void require_cutoff(int cutoff, const char *where) {
  if (cutoff < 1)
    fail(ErrorCode::InvalidArgument,
         std::string(where) + ": cutoff must be >= 1");
}

double log_poisson(double mean, int n) {
  return -mean + n * std::log(mean) - std::lgamma(n + 1.0);
}

void require_tail(double tail, double tol, const char *what, int cutoff) {
  if (tail >= tol)
    fail(ErrorCode::CutoffTooSmall,
         std::string(what) + ": tail mass " + format_value(tail) +
             " at cutoff " + std::to_string(cutoff) +
             " is not below tolerance " + format_value(tol));
}

}  // namespace

double nbar_of_temperature(double x) {
  if (!(x > 0.0))
    fail(ErrorCode::InvalidArgument,
         "nbar_of_temperature: hbar*omega/kT must be positive");
  return 1.0 / std::expm1(x);
}

std::vector<double> thermal_weights(double nbar, int cutoff) {
  require_nbar(nbar, "thermal_weights");
  if (cutoff < 0)
    fail(ErrorCode::InvalidArgument, "thermal_weights: cutoff must be >= 0");
  const double r = nbar / (1.0 + nbar);
  std::vector<double> p(static_cast<std::size_t>(cutoff) + 1);
  p[0] = 1.0 / (1.0 + nbar);
  for (std::size_t k = 1; k < p.size(); ++k) p[k] = p[k - 1] * r;
  return p;
}

double thermal_tail(double nbar, int cutoff) {
  require_nbar(nbar, "thermal_tail");
  if (nbar == 0.0) return 0.0;
  return std::pow(nbar / (1.0 + nbar), cutoff + 1);
}

Vector coherent_amplitudes(Complex alpha, int cutoff) {
  if (cutoff < 0)
    fail(ErrorCode::InvalidArgument, "coherent_amplitudes: cutoff must be >= 0");
  Vector c = Vector::Zero(cutoff + 1);
  const double r = std::abs(alpha);
  if (r == 0.0) {
    c(0) = 1.0;
    return c;
  }
  const double phase = std::arg(alpha);
  const double log_r = std::log(r);
  for (int n = 0; n <= cutoff; ++n) {
    const double log_mag = -0.5 * r * r + n * log_r - 0.5 * std::lgamma(n + 1.0);
    c(n) = std::polar(std::exp(log_mag), n * phase);
  }
  return c;
}

double coherent_tail(Complex alpha, int cutoff) {
  const double mean = std::norm(alpha);
  if (mean == 0.0) return 0.0;
  if (cutoff + 1 > mean) {
    // Terms decrease monotonically past the mean; sum upward.
    double sum = 0.0;
    for (int n = cutoff + 1;; ++n) {
      const double term = std::exp(log_poisson(mean, n));
      sum += term;
      if (term <= sum * 1e-17 || term < 1e-300) break;
    }
    return sum;
  }
  double head = 0.0;
  for (int n = 0; n <= cutoff; ++n) head += std::exp(log_poisson(mean, n));
  return std::max(0.0, 1.0 - head);
}

int smallest_thermal_cutoff(double nbar, double tol) {
  require_nbar(nbar, "smallest_thermal_cutoff");
  if (nbar == 0.0) return 1;
  const double r = nbar / (1.0 + nbar);
  int c = std::max(1, static_cast<int>(std::floor(std::log(tol) / std::log(r))));
  while (thermal_tail(nbar, c) >= tol) ++c;
  while (c > 1 && thermal_tail(nbar, c - 1) < tol) --c;
  return c;
}

int smallest_coherent_cutoff(Complex alpha, double tol) {
  int c = std::max(1, static_cast<int>(std::floor(std::norm(alpha))));
  while (coherent_tail(alpha, c) >= tol) ++c;
  return c;
}

int smallest_exchange_cutoff(Complex alpha, double nbar, double tol) {
  require_nbar(nbar, "smallest_exchange_cutoff");
  const double fine = tol * 1e-3;
  const int span = smallest_coherent_cutoff(alpha, fine) +
                   smallest_thermal_cutoff(nbar, fine) + 1;
  const Vector amps = coherent_amplitudes(alpha, span);
  const std::vector<double> geo = thermal_weights(nbar, span);
  std::vector<double> pmf(static_cast<std::size_t>(span) + 1, 0.0);
  for (int s = 0; s <= span; ++s)
    for (int j = 0; j <= s; ++j) pmf[s] += std::norm(amps(j)) * geo[s - j];
  // Suffix sums from the top avoid cancellation; the residual beyond span
  // is below 2 * fine.
  double tail = 2.0 * fine;
  int c = span;
  while (c > 1 && tail + pmf[c] < tol) {
    tail += pmf[c];
    --c;
  }
  return c;
}

ThermalSpec ThermalSpec::make(double nbar, int cutoff) {
  require_cutoff(cutoff, "ThermalSpec");
  return {nbar, cutoff, thermal_tail(nbar, cutoff)};
}

CoherentSpec CoherentSpec::make(Complex alpha, int cutoff) {
  require_cutoff(cutoff, "CoherentSpec");
  return {alpha, cutoff, coherent_tail(alpha, cutoff)};
}

FockOperator coherent_state(const CoherentSpec &spec, double tol) {
  require_cutoff(spec.cutoff, "coherent_state");
  require_tail(spec.tail_mass, tol, "coherent_state", spec.cutoff);
  const Vector c = coherent_amplitudes(spec.alpha, spec.cutoff);
  return FockOperator(c * c.adjoint());
}

FockOperator thermal_state(const ThermalSpec &spec, double tol) {
  require_cutoff(spec.cutoff, "thermal_state");
  require_tail(spec.tail_mass, tol, "thermal_state", spec.cutoff);
  const auto p = thermal_weights(spec.nbar, spec.cutoff);
  Matrix m = Matrix::Zero(spec.cutoff + 1, spec.cutoff + 1);
  for (int k = 0; k <= spec.cutoff; ++k) m(k, k) = p[k];
  return FockOperator(std::move(m));
}

FockOperator displacement_operator(Complex alpha, int cutoff) {
  require_cutoff(cutoff, "displacement_operator");
  const Complex i(0.0, 1.0);
  // H = i (alpha a^dagger - conj(alpha) a) is hermitian; exp(-iH) = D(alpha).
  const FockOperator a = annihilation(cutoff);
  const FockOperator h =
      (i * alpha) * creation(cutoff) - (i * std::conj(alpha)) * a;
  return FockOperator(unitary_exp(hermitian_eigendecompose(h), 1.0));
}

FockOperator displaced_thermal_state(Complex alpha, double nbar_t, int cutoff,
                                     double tol) {
  require_nbar(nbar_t, "displaced_thermal_state");
  require_cutoff(cutoff, "displaced_thermal_state");
  require_tail(coherent_tail(alpha, cutoff), tol,
               "displaced_thermal_state (coherent part)", cutoff);
  const ThermalSpec th = ThermalSpec::make(nbar_t, cutoff);
  const FockOperator rho_th = thermal_state(th, tol);
  if (alpha == Complex{}) return rho_th;
  const Matrix d = displacement_operator(alpha, cutoff).matrix();
  const Matrix rho = d * rho_th.matrix() * d.adjoint();
  return FockOperator(0.5 * (rho + rho.adjoint()));
}

Complex coherent_overlap(Complex alpha, Complex beta) {
  return std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(beta) +
                  std::conj(alpha) * beta);
}

}  // namespace minienv
