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

#ifndef LOOPFIX_SMTLIB_H_
#define LOOPFIX_SMTLIB_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopfix/collection.h"
#include "loopfix/guard_expr.h"

namespace loopfix {

// Component instances of one stage, in encoding order.
std::vector<GuardOp> StageComponents(int stage, int multiplicity);

// SMT-LIB2 document that is satisfiable iff some guard built from the
// stage's component instances (each used at most once, as a tree) matches
// every pair. Sources 0..n-1 are the inputs, n+c is component c.
std::string EncodeConstraints(const PairSet& set, int stage,
                              int multiplicity = 1);

// LOOPFIX_SOLVER_CMD if set, else "z3 -smt2 -in".
std::string DefaultSolverCommand();

struct SolverAnswer {
  enum class Status : std::uint8_t { kSat, kUnsat, kUnknown } status;
  std::string model;  // get-value output when sat
  std::string raw;
};

// Runs `command` with `document` on stdin. Throws kIo if it cannot start.
SolverAnswer RunSolver(const std::string& command, const std::string& document);

// Builds the guard selected by a get-value model over `root`, `act_c` and
// `sel_c_p`. Throws kInternal for malformed models.
GuardExpr DecodeModel(const PairSet& set, int stage, int multiplicity,
                      std::string_view model);

std::optional<GuardExpr> SolveStageSmt(
    const PairSet& set, int stage, int multiplicity, const std::string& command,
    std::chrono::steady_clock::time_point deadline);

}  // namespace loopfix

#endif  // LOOPFIX_SMTLIB_H_
