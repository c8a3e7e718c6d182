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

#ifndef LOOPFIX_DETECTION_H_
#define LOOPFIX_DETECTION_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "loopfix/ast.h"
#include "loopfix/interpreter.h"

namespace loopfix {

struct HangingEntry {
  std::string test;
  LoopId loop;
  std::uint64_t rank = 1;

  friend bool operator==(const HangingEntry&, const HangingEntry&) = default;
};

struct HangingReport {
  std::uint64_t global_cap = kDefaultGlobalCap;
  // Suite order, then the order in which executions hit the cap.
  std::vector<HangingEntry> entries;
  // Tests whose detection run executed each loop at least once.
  std::map<LoopId, std::vector<std::string>> tests_of;
  // Detection outcomes in suite order.
  std::vector<NamedRun> runs;

  bool empty() const { return entries.empty(); }
  // Distinct loops in order of first appearance.
  std::vector<LoopId> Loops() const;
  std::vector<HangingEntry> EntriesFor(const LoopId& loop) const;
  const std::vector<std::string>& TestsOf(const LoopId& loop) const;
};

// Runs `tests` on an instrumented program under `global_cap`. Throws kUsage
// if the program has no monitored loops but does have loops.
HangingReport DetectInfiniteLoops(const Program& instrumented,
                                  const std::vector<const TestCase*>& tests,
                                  std::uint64_t global_cap, int jobs = 1);

HangingReport DetectInfiniteLoops(const Program& instrumented,
                                  std::uint64_t global_cap, int jobs = 1);

}  // namespace loopfix

#endif  // LOOPFIX_DETECTION_H_
