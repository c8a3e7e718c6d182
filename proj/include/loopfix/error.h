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

#ifndef LOOPFIX_ERROR_H_
#define LOOPFIX_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace loopfix {

// Error classes surfaced by the library. Each driver-level class maps to a
// distinct CLI exit code (see ExitCodeFor).
enum class ErrorCode {
  kInternal,
  kSyntax,
  kType,
  kUsage,
  kIo,
  kNoInfiniteLoopDetected,
  kMultipleInfiniteLoops,
  kNoAngelicRecord,
  kEmptySpecification,
  kSynthesisExhausted,
  kTimeBudgetExceeded,
  kValidationFailed,
};

std::string_view ErrorCodeName(ErrorCode code);
std::optional<ErrorCode> ErrorCodeFromName(std::string_view name);
int ExitCodeFor(ErrorCode code);

struct SourceLocation {
  int line = 0;
  int column = 0;

  bool valid() const { return line > 0; }
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        SourceLocation location = {});

  ErrorCode code() const { return code_; }
  const SourceLocation& location() const { return location_; }
  // Message without the "line:column: " prefix.
  const std::string& detail() const { return detail_; }

  // Extra names attached to the error (failing tests, offending test for
  // NoAngelicRecord, ...).
  const std::vector<std::string>& subjects() const { return subjects_; }
  Error& WithSubjects(std::vector<std::string> subjects) {
    subjects_ = std::move(subjects);
    return *this;
  }

 private:
  ErrorCode code_;
  SourceLocation location_;
  std::string detail_;
  std::vector<std::string> subjects_;
};

}  // namespace loopfix

#endif  // LOOPFIX_ERROR_H_
