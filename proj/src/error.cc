// Copyright 2026 The loopfix Authors.
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

#include "loopfix/error.h"

namespace loopfix {
namespace {

std::string Format(const std::string& message, SourceLocation location) {
  if (!location.valid()) return message;
  return std::to_string(location.line) + ":" +
         std::to_string(location.column) + ": " + message;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInternal: return "InternalError";
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kType: return "TypeError";
    case ErrorCode::kUsage: return "UsageError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kNoInfiniteLoopDetected: return "NoInfiniteLoopDetected";
    case ErrorCode::kMultipleInfiniteLoops: return "MultipleInfiniteLoops";
    case ErrorCode::kNoAngelicRecord: return "NoAngelicRecord";
    case ErrorCode::kEmptySpecification: return "EmptySpecification";
    case ErrorCode::kSynthesisExhausted: return "SynthesisExhausted";
    case ErrorCode::kTimeBudgetExceeded: return "TimeBudgetExceeded";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
  }
  return "InternalError";
}

std::optional<ErrorCode> ErrorCodeFromName(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::kValidationFailed); ++i) {
    auto code = static_cast<ErrorCode>(i);
    if (ErrorCodeName(code) == name) return code;
  }
  return std::nullopt;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInternal: return 1;
    case ErrorCode::kUsage: return 2;
    case ErrorCode::kSyntax: return 3;
    case ErrorCode::kType: return 4;
    case ErrorCode::kIo: return 5;
    case ErrorCode::kNoInfiniteLoopDetected: return 10;
    case ErrorCode::kMultipleInfiniteLoops: return 11;
    case ErrorCode::kNoAngelicRecord: return 12;
    case ErrorCode::kEmptySpecification: return 13;
    case ErrorCode::kSynthesisExhausted: return 14;
    case ErrorCode::kTimeBudgetExceeded: return 15;
    case ErrorCode::kValidationFailed: return 16;
  }
  return 1;
}

Error::Error(ErrorCode code, const std::string& message,
             SourceLocation location)
    : std::runtime_error(Format(message, location)),
      code_(code),
      location_(location),
      detail_(message) {}

}  // namespace loopfix
