// Copyright 2026 The spreadlab Authors
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

#ifndef SPREADLAB_ERRORS_H_
#define SPREADLAB_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace spreadlab {

enum class ErrorKind {
  kInvalidArgument,
  kOutOfRange,
  kDisconnectedGraph,
  kSizeGuard,
  kSizeMismatch,
  kParityViolation,
  kRejectionCapExceeded,
  kEmptyCore,
  kDeltaOutOfRange,
  kEpsTooLarge,
  kRNotDivisibleBy3,
  kPreconditionViolated,
  kConstructionInfeasible,
  kNotLipschitz,
  kConvergenceFailure,
  kEmptyF,
  kDisconnectedF,
  kInvalidSpec,
  kParseError,
  kIntegerOverflow,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (CLI, Python bindings, sweep rows) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spreadlab

#endif  // SPREADLAB_ERRORS_H_
