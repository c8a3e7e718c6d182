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

#ifndef LOOPFIX_INSTRUMENT_H_
#define LOOPFIX_INSTRUMENT_H_

#include "loopfix/ast.h"

namespace loopfix {

// Turns every while loop into a monitored loop with the same id, guard and
// body. The result is re-checked unless `check` is false.
Program Instrument(const Program& program, bool check = true);

// Inverse of Instrument.
Program Uninstrument(const Program& program);

bool IsInstrumented(const Program& program);

}  // namespace loopfix

#endif  // LOOPFIX_INSTRUMENT_H_
