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

#ifndef LOOPFIX_ANGELIC_H_
#define LOOPFIX_ANGELIC_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopfix/ast.h"
#include "loopfix/detection.h"

namespace loopfix {

enum class MiningStrategy : std::uint8_t {
  kLinear,  // 0, 1, 2, ... until the first pass
  kGallop,  // 0, 1, 2, 4, ... then bisect; assumes monotone passing
};

struct MiningOptions {
  std::uint64_t global_cap = kDefaultGlobalCap;
  // Largest limit probed; defaults to global_cap.
  std::optional<std::uint64_t> probe_budget;
  MiningStrategy strategy = MiningStrategy::kLinear;
  // Wall-clock budget for mining one loop; exceeding it raises
  // kTimeBudgetExceeded.
  std::optional<double> time_budget_seconds;
  int jobs = 1;
};

struct AngelicEntry {
  std::string test;
  std::uint64_t rank = 1;
  std::uint64_t chi = 0;
  std::uint64_t probes = 0;  // test runs spent on this entry
};

// Angelic record per hanging test of one loop.
struct AngelicRecord {
  LoopId loop;
  std::vector<AngelicEntry> entries;  // report order

  std::optional<std::uint64_t> ChiOf(const std::string& test) const;
  std::uint64_t Highest() const;
};

// Probes forced-break limits on the reported infinite execution of every
// hanging test of `loop`. Other executions run under global_cap. Throws
// kNoAngelicRecord naming the test when no limit within budget passes.
AngelicRecord FindThresholds(const LoopId& loop, const Program& instrumented,
                             const HangingReport& report,
                             const MiningOptions& options = {});

// True per hanging test iff it passes when its infinite execution is broken
// at global_cap.
std::map<std::string, bool> IdempotenceProbe(const LoopId& loop,
                                             const Program& instrumented,
                                             const HangingReport& report,
                                             std::uint64_t global_cap,
                                             int jobs = 1);

}  // namespace loopfix

#endif  // LOOPFIX_ANGELIC_H_
