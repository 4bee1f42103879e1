// Copyright 2026 The altqa Authors
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

#include "altqa/common/error.hpp"

namespace altqa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kUnknownDialect: return "UnknownDialect";
    case ErrorCode::kUnbalancedTags: return "UnbalancedTags";
    case ErrorCode::kOrphanToolResponse: return "OrphanToolResponse";
    case ErrorCode::kDialectMismatch: return "DialectMismatch";
    case ErrorCode::kInvalidTrajectory: return "InvalidTrajectory";
    case ErrorCode::kNoAnswerBlock: return "NoAnswerBlock";
    case ErrorCode::kEmptyReferenceSet: return "EmptyReferenceSet";
    case ErrorCode::kSubsetSizeOutOfRange: return "SubsetSizeOutOfRange";
    case ErrorCode::kBinomialOverflow: return "BinomialOverflow";
    case ErrorCode::kEnumerationGuard: return "EnumerationGuard";
    case ErrorCode::kZeroToolCalls: return "ZeroToolCalls";
    case ErrorCode::kNotADistribution: return "NotADistribution";
    case ErrorCode::kEmptyRollout: return "EmptyRollout";
    case ErrorCode::kTransportFailure: return "TransportFailure";
    case ErrorCode::kMalformedVerdict: return "MalformedVerdict";
    case ErrorCode::kPartitionViolation: return "PartitionViolation";
    case ErrorCode::kParseFailure: return "ParseFailure";
    case ErrorCode::kUnknownQuestionId: return "UnknownQuestionId";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kBindFailure: return "BindFailure";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace altqa
