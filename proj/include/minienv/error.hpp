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

#ifndef MINIENV_ERROR_HPP
#define MINIENV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace minienv {

// Numeric values match minienv_status in minienv.h.
enum class ErrorCode : int {
  InvalidArgument = 1,
  CutoffTooSmall = 2,
  NumericalContract = 3,
  IntegrationFailure = 4,
  NotReached = 5,
  NoDecoherence = 6,
  Usage = 7,
  Io = 8,
};

const char *error_code_name(ErrorCode code) noexcept;

// Shortest round-trip text for a double, for diagnostics.
std::string format_value(double v);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string &what) {
  if (!cond) fail(code, what);
}

}  // namespace minienv

#endif  // MINIENV_ERROR_HPP
