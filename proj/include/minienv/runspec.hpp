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

#ifndef MINIENV_RUNSPEC_HPP
#define MINIENV_RUNSPEC_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minienv/analytic.hpp"
#include "minienv/states.hpp"

namespace minienv {

enum class Engine { Analytic, BruteForce, Both };

std::string_view engine_name(Engine e) noexcept;  // "analytic", "bruteforce", "both"
std::optional<Engine> parse_engine(std::string_view name) noexcept;

// Flat key=value run description; '#' starts a comment. List-valued keys
// (model, alpha0, nbar, rate) take comma-separated values.
struct RunSpec {
  std::vector<Model> models{Model::MasterEq};
  std::vector<double> alpha0{1.0};
  double alpha0_im = 0.0;  // imaginary part shared by every alpha0
  std::vector<double> nbar{1.0};
  std::vector<double> rate{1.0};
  double omega = 0.0;
  double tmin = 0.0;
  double tmax = 3.0;
  std::size_t points = 300;
  Engine engine = Engine::Analytic;
  std::string output;  // empty writes to stdout
  std::string dat;     // optional space-separated mirror
  int cutoff_a = 0;    // 0 = automatic
  int cutoff_b = 0;
  double tol_single = kSingleModeTolerance;
  double tol_joint = kJointTolerance;
  double tol_zeta3 = kZeta3Tolerance;
  double step = 0.0;  // RK4 step, 0 = automatic
  int threads = 0;    // sweep workers, 0 = hardware concurrency

  /// Sets one key from its text form. Throws Usage naming the field.
  void set(std::string_view key, std::string_view value);

  /// Throws Usage when the combination is inconsistent.
  void validate() const;

  /// Every key in canonical text form; parsing these lines back gives an
  /// identical spec.
  std::vector<std::pair<std::string, std::string>> echo() const;

  ModelParams params(Model m, double alpha, double nbar, double rate) const;
  std::vector<double> grid() const;
};

RunSpec parse_runspec(std::istream &in, const std::string &source = "<spec>");
RunSpec load_runspec(const std::string &path);

/// Shortest text that reads back as the same double.
std::string round_trip(double v);

}  // namespace minienv

#endif  // MINIENV_RUNSPEC_HPP
