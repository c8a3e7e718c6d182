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

#ifndef LOOPFIX_VALUE_H_
#define LOOPFIX_VALUE_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "loopfix/ast.h"

namespace loopfix {

// Runtime value. Arrays have reference semantics and fixed length.
struct Value {
  Type type = Type::kVoid;
  std::int64_t scalar = 0;
  std::shared_ptr<std::vector<std::int64_t>> array;

  static Value Int(std::int64_t v) { return {Type::kInt, v, nullptr}; }
  static Value Bool(bool v) { return {Type::kBool, v ? 1 : 0, nullptr}; }
  static Value Array(std::vector<std::int64_t> elements) {
    return {Type::kIntArray, 0,
            std::make_shared<std::vector<std::int64_t>>(std::move(elements))};
  }

  bool as_bool() const { return scalar != 0; }
};

}  // namespace loopfix

#endif  // LOOPFIX_VALUE_H_
