// Copyright (c) 2026 The ttscorpus Authors
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

#include "ttscorpus/error.h"

namespace ttscorpus {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptyWord: return "EmptyWord";
    case ErrorCode::kEmptySentence: return "EmptySentence";
    case ErrorCode::kUnknownCodepoint: return "UnknownCodepoint";
    case ErrorCode::kDuplicateSentenceId: return "DuplicateSentenceId";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kEmptyPool: return "EmptyPool";
    case ErrorCode::kNotRiff: return "NotRiff";
    case ErrorCode::kUnsupportedCodec: return "UnsupportedCodec";
    case ErrorCode::kTruncatedData: return "TruncatedData";
    case ErrorCode::kAllSilent: return "AllSilent";
    case ErrorCode::kZeroSpeechDuration: return "ZeroSpeechDuration";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kEmptySequence: return "EmptySequence";
    case ErrorCode::kNoRatings: return "NoRatings";
    case ErrorCode::kMissingCondition: return "MissingCondition";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ttscorpus
