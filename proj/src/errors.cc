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

#include "spreadlab/errors.h"

namespace spreadlab {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::kSizeGuard: return "SizeGuard";
    case ErrorKind::kSizeMismatch: return "SizeMismatch";
    case ErrorKind::kParityViolation: return "ParityViolation";
    case ErrorKind::kRejectionCapExceeded: return "RejectionCapExceeded";
    case ErrorKind::kEmptyCore: return "EmptyCore";
    case ErrorKind::kDeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorKind::kEpsTooLarge: return "EpsTooLarge";
    case ErrorKind::kRNotDivisibleBy3: return "RNotDivisibleBy3";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kConstructionInfeasible: return "ConstructionInfeasible";
    case ErrorKind::kNotLipschitz: return "NotLipschitz";
    case ErrorKind::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::kEmptyF: return "EmptyF";
    case ErrorKind::kDisconnectedF: return "DisconnectedF";
    case ErrorKind::kInvalidSpec: return "InvalidSpec";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kIntegerOverflow: return "IntegerOverflow";
  }
  return "Unknown";
}

}  // namespace spreadlab
