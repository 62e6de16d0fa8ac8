// Copyright 2026 The drra Authors
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

#include "drra/error.hpp"

namespace drra {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadParameter:
      return "BadParameter";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kDisconnectedGraph:
      return "DisconnectedGraph";
    case ErrorCode::kBadVertexList:
      return "BadVertexList";
    case ErrorCode::kNonIntegralLayer:
      return "NonIntegralLayer";
    case ErrorCode::kNonIntegralEntry:
      return "NonIntegralEntry";
    case ErrorCode::kNegativeEntry:
      return "NegativeEntry";
    case ErrorCode::kInconsistentTensor:
      return "InconsistentTensor";
    case ErrorCode::kColorCountMismatch:
      return "ColorCountMismatch";
    case ErrorCode::kSizeGuard:
      return "SizeGuard";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kArithmeticOverflow:
      return "ArithmeticOverflow";
  }
  return "Unknown";
}

}  // namespace drra
