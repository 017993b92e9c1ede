// Copyright 2026 The planepack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "common.h"

namespace planepack {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kFormat:
      return "FormatError";
    case ErrorCode::kGeneralPosition:
      return "GeneralPositionError";
    case ErrorCode::kDanglingIndex:
      return "DanglingIndex";
    case ErrorCode::kDigestMismatch:
      return "DigestMismatch";
    case ErrorCode::kIo:
      return "IoError";
    case ErrorCode::kTooFewPoints:
      return "TooFewPoints";
    case ErrorCode::kNotFound:
      return "NotFound";
    case ErrorCode::kNoPartition:
      return "NoPartition";
    case ErrorCode::kConstructionFailed:
      return "ConstructionFailed";
    case ErrorCode::kInfeasibleStep:
      return "InfeasibleStep";
    case ErrorCode::kInvalidK:
      return "InvalidK";
    case ErrorCode::kCrossingFamilyTooSmall:
      return "CrossingFamilyTooSmall";
    case ErrorCode::kNotATree:
      return "NotATree";
  }
  return "Unknown";
}

}  // namespace planepack
