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

#ifndef LOOPFIX_REPAIR_H_
#define LOOPFIX_REPAIR_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopfix/angelic.h"
#include "loopfix/ast.h"
#include "loopfix/collection.h"
#include "loopfix/detection.h"
#include "loopfix/guard_expr.h"
#include "loopfix/interpreter.h"
#include "loopfix/synthesis.h"

namespace loopfix {

struct RepairConfig {
  // Detection, mining and the validation safety cap.
  std::uint64_t global_cap = kDefaultGlobalCap;
  std::optional<std::uint64_t> probe_budget;
  MiningStrategy mining_strategy = MiningStrategy::kLinear;
  std::optional<double> mining_time_budget_seconds;
  SynthesisOptions synthesis;
  int jobs = 1;
  bool emit_unvalidated = false;
  // Fail with kMultipleInfiniteLoops instead of repairing one at a time.
  bool simultaneous = false;
  // Repair only this loop.
  std::optional<LoopId> loop;
};

// Stage durations in seconds.
struct Timings {
  double instrumentation = 0;
  double compilation = 0;
  double test_suite = 0;
  double hanging_tests = 0;
  double angelic_mining = 0;
  double value_collection = 0;
  double smt_solving = 0;
  double validation = 0;

  double total() const {
    return instrumentation + compilation + test_suite + hanging_tests +
           angelic_mining + value_collection + smt_solving + validation;
  }
  Timings& operator+=(const Timings& o);
};

struct ValidationVerdict {
  bool all_pass = true;
  std::vector<std::string> failures;
  std::map<std::string, TestStatus> statuses;
};

struct Patch {
  LoopId loop;
  std::string original_guard;
  std::string synthesized_guard;   // language syntax
  std::string synthesized_inputs;  // over PairSet input names
  Expr guard;
  SynthesisStats stats;
  AngelicRecord angelic;
  std::map<std::string, bool> idempotent;
  std::vector<std::string> hanging_tests;
  std::size_t context_items = 0;
  std::size_t context_size = 0;
  PairSet pairs;
  ValidationVerdict validation;
  Timings timings;
  std::string diff;
  Program patched;
};

// Replaces the guard in the un-instrumented program and runs `tests` under
// the cap. Failures are data; throws only if the guard does not type-check.
ValidationVerdict Validate(const Program& original, const LoopId& loop,
                           const Expr& guard,
                           const std::vector<const TestCase*>& tests,
                           std::uint64_t cap, int jobs = 1);

ValidationVerdict Validate(const Program& original, const LoopId& loop,
                           const Expr& guard, std::uint64_t cap, int jobs = 1);

// One pass of instrument, detect, mine, collect, synthesize, validate on the
// first hanging loop (or config.loop). Throws the driver error classes.
Patch Repair(const Program& program, const RepairConfig& config = {},
             const std::string& file_name = "program.lp");

struct RepairOutcome {
  std::vector<Patch> patches;
  Program final_program;
  ValidationVerdict final_validation;
  Timings timings;
};

// Repairs hanging loops one at a time until the suite no longer hangs.
RepairOutcome RepairAll(const Program& program, const RepairConfig& config = {},
                        const std::string& file_name = "program.lp");

}  // namespace loopfix

#endif  // LOOPFIX_REPAIR_H_
