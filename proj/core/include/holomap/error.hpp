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

#pragma once

#include <stdexcept>
#include <string>

namespace holomap {

enum class ErrorCode {
  InvalidArgument,
  UnsupportedFamily,
  ConvergenceFailure,
  RankDeficiency,
  SizeTooSmall,
  NegativeEigenvalue,
  OddSize,
  DimensionMismatch,
  SingularNoPolicy,
  IndexOutOfRange,
  NonPhysical,
  ScaleOutOfRange,
  OutOfValidity,
  UnsupportedPair,
  InsufficientSamples,
  SlopeMismatch,
  NotOrthogonal,
};

const char *to_string(ErrorCode code);

// Validation errors are caused by bad input; the rest signal a numerical
// failure somewhere in the pipeline. The CLI maps them to exit codes 1 and 2.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Upper bound on worker threads, read from HOLOMAP_THREADS (default 1).
int max_threads();

}  // namespace holomap
