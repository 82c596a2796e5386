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

#ifndef MINIENV_COMMANDS_HPP
#define MINIENV_COMMANDS_HPP

#include <string_view>

#include "minienv/runspec.hpp"
#include "minienv/table.hpp"

namespace minienv {

std::string_view library_version() noexcept;

struct FigureParams {
  int id = 1;
  double alpha0 = 5.0;
  double nbar = 25.0;
};

/// Parameters of figures 1..5; any other id is a usage error.
FigureParams figure_params(int id);

/// gamma_t, zeta1, zeta2, zeta3 at gamma = kappa = lambda = 1 from the
/// closed forms, on `points` samples of [0, tmax].
Table figure_table(int id, std::size_t points = 2000, double tmax = 3.0);

/// Column t, then per model zeta_<model>_analytic and/or
/// zeta_<model>_bruteforce, plus delta_<model> when both engines run.
/// alpha0, nbar and rate must be single values.
Table simulate_table(const RunSpec &spec);

/// Cartesian product of the alpha0, nbar and rate lists, sorted by tuple,
/// one block of rows per tuple with leading alpha0, nbar, rate columns.
/// Tuples may run on several threads; the output does not depend on it.
Table sweep_table(const RunSpec &spec);

}  // namespace minienv

#endif  // MINIENV_COMMANDS_HPP
