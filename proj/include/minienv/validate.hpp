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

#ifndef MINIENV_VALIDATE_HPP
#define MINIENV_VALIDATE_HPP

#include <string>
#include <vector>

namespace minienv {

struct ValidationOptions {
  // When > 0, every brute-force check runs at this cutoff on each mode.
  // Meant for exercising the failure path.
  int cutoff_override = 0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool gated = true;  // informational checks never fail the run
  std::string detail;
  double seconds = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool all_passed() const;
  std::size_t failures() const;
};

ValidationReport run_validation(const ValidationOptions &opts = {});

/// One line per check: PASS, FAIL or INFO, name, detail.
std::string format_report(const ValidationReport &r);

}  // namespace minienv

#endif  // MINIENV_VALIDATE_HPP
