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

#ifndef LOOPFIX_TESTS_CC_TEST_SUPPORT_H_
#define LOOPFIX_TESTS_CC_TEST_SUPPORT_H_

#include <functional>
#include <string>
#include <string_view>

#include "loopfix/ast.h"
#include "loopfix/error.h"
#include "loopfix/io.h"
#include "loopfix/parser.h"

namespace loopfix::testing {

inline std::string CorpusPath(std::string_view file) {
  return std::string(LOOPFIX_SOURCE_DIR) + "/corpus/" + std::string(file);
}

inline Program LoadCorpus(std::string_view file) {
  return Parse(ReadTextFile(CorpusPath(file)));
}

// kInternal when fn does not throw a loopfix::Error.
inline ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace loopfix::testing

#endif  // LOOPFIX_TESTS_CC_TEST_SUPPORT_H_
