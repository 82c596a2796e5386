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

#include "minienv/error.hpp"

#include <charconv>

namespace minienv {

const char *error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::CutoffTooSmall: return "cutoff-too-small";
    case ErrorCode::NumericalContract: return "numerical-contract";
    case ErrorCode::IntegrationFailure: return "integration-failure";
    case ErrorCode::NotReached: return "not-reached";
    case ErrorCode::NoDecoherence: return "no-decoherence";
    case ErrorCode::Usage: return "usage";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

std::string format_value(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("?");
}

}  // namespace minienv
