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

#ifndef LOOPFIX_CHECKER_H_
#define LOOPFIX_CHECKER_H_

#include "loopfix/ast.h"

namespace loopfix {

// Static checks: unique names, declare-before-use, typing, `break` only
// inside loops, return types. Resolves variable slots, callee indices and
// the visible scope of every loop. Throws Error(kType) on failure.
void Check(Program& program);

}  // namespace loopfix

#endif  // LOOPFIX_CHECKER_H_
