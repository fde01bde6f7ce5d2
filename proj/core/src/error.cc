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

#include "cswaug/error.h"

#include <string>

namespace cswaug {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptySentence: return "EmptySentence";
    case ErrorCode::kLineCountMismatch: return "LineCountMismatch";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kMalformedLink: return "MalformedLink";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNoEligiblePosition: return "NoEligiblePosition";
    case ErrorCode::kTagLengthMismatch: return "TagLengthMismatch";
    case ErrorCode::kNoCandidate: return "NoCandidate";
    case ErrorCode::kEmptyCandidates: return "EmptyCandidates";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kMissingResource: return "MissingResource";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kUnknownId: return "UnknownId";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      message_(message) {}

}  // namespace cswaug
