// Copyright 2026 The holomap Authors
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

#include "holomap/error.hpp"

#include <cstdlib>

namespace holomap {

const char *to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::RankDeficiency: return "RankDeficiency";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::OddSize: return "OddSize";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularNoPolicy: return "SingularNoPolicy";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPhysical: return "NonPhysical";
    case ErrorCode::ScaleOutOfRange: return "ScaleOutOfRange";
    case ErrorCode::OutOfValidity: return "OutOfValidity";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::SlopeMismatch: return "SlopeMismatch";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnsupportedFamily:
    case ErrorCode::SizeTooSmall:
    case ErrorCode::OddSize:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::SingularNoPolicy:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::ScaleOutOfRange:
    case ErrorCode::OutOfValidity:
    case ErrorCode::UnsupportedPair:
    case ErrorCode::InsufficientSamples:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

int max_threads() {
  const char *env = std::getenv("HOLOMAP_THREADS");
  if (env == nullptr) return 1;
  int n = std::atoi(env);
  return n > 0 ? n : 1;
}

}  // namespace holomap
