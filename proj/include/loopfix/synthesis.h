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

#ifndef LOOPFIX_SYNTHESIS_H_
#define LOOPFIX_SYNTHESIS_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopfix/collection.h"
#include "loopfix/guard_expr.h"

namespace loopfix {

enum class SynthesisBackend : std::uint8_t { kEnumerative, kSmt };

struct SynthesisOptions {
  // Highest stage tried (0..kMaxStage).
  int max_stage = kMaxStage;
  // Total budget across stages.
  std::optional<double> time_budget_seconds;
  // Instances of each component per stage (1..7).
  int multiplicity = 1;
  SynthesisBackend backend = SynthesisBackend::kEnumerative;
  // Command reading SMT-LIB2 on stdin, for the kSmt backend.
  std::string solver_command;
  // Cap on stored terms x pairs for the enumerative search; reaching it is
  // reported as kTimeBudgetExceeded.
  std::size_t max_cells = std::size_t{1} << 26;
};

struct SynthesisStats {
  int formulations = 0;
  int components = 0;
  int component_types = 0;
  double solver_seconds = 0;
  int stage = 0;
};

struct SynthesisResult {
  GuardExpr guard;
  SynthesisStats stats;
};

// True iff `expr` evaluates to the output on every pair. Throws kInternal
// for a malformed expression.
bool CheckCandidate(const GuardExpr& expr, const PairSet& set);

// True if two pairs have identical inputs and different outputs.
bool HasConflict(const PairSet& set);

// Searches one stage with the built-in engine: smallest expression first,
// each active component used at most `multiplicity` times.
using Deadline = std::chrono::steady_clock::time_point;

std::optional<GuardExpr> SolveStageEnumerative(const PairSet& set, int stage,
                                               const SynthesisOptions& options,
                                               Deadline deadline);

// Escalates stages 0..max_stage and returns the first consistent guard.
// Throws kSynthesisExhausted or kTimeBudgetExceeded.
SynthesisResult Synthesize(const PairSet& set,
                           const SynthesisOptions& options = {});

}  // namespace loopfix

#endif  // LOOPFIX_SYNTHESIS_H_
