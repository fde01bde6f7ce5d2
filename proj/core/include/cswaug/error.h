//
// Copyright 2026 The cswaug Authors.
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
//

#ifndef CSWAUG_ERROR_H_
#define CSWAUG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cswaug {

enum class ErrorCode {
  kInvalidArgument,
  kIoError,
  kParseError,
  kEmptySentence,
  kLineCountMismatch,
  kDuplicateId,
  kMalformedLink,
  kIndexOutOfRange,
  kNoEligiblePosition,
  kTagLengthMismatch,
  kNoCandidate,
  kEmptyCandidates,
  kEmptyCorpus,
  kLengthMismatch,
  kDegenerateInput,
  kMissingResource,
  kMissingColumn,
  kUnknownId,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as cswaug::Error. The code lets callers
// separate per-sentence skips (NoEligiblePosition, NoCandidate, ...) from
// fatal conditions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  // The message without the code-name prefix that what() carries.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace cswaug

#endif  // CSWAUG_ERROR_H_
