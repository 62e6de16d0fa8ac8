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

#ifndef DRRA_ERROR_HPP_
#define DRRA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace drra {

// Failure categories shared by every module. The C API maps these one to one
// onto drra_status values.
enum class ErrorCode {
  kBadParameter,
  kParseError,
  kDisconnectedGraph,
  kBadVertexList,
  kNonIntegralLayer,
  kNonIntegralEntry,
  kNegativeEntry,
  kInconsistentTensor,
  kColorCountMismatch,
  kSizeGuard,
  kIoError,
  kInvalidArgument,
  kArithmeticOverflow,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drra

#endif  // DRRA_ERROR_HPP_
