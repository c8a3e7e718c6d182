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

#ifndef LOOPFIX_GUARD_EXPR_H_
#define LOOPFIX_GUARD_EXPR_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopfix/ast.h"
#include "loopfix/collection.h"

namespace loopfix {

// Synthesis components, in escalation order. kInput is a leaf.
enum class GuardOp : std::uint8_t {
  kGt, kGe, kEq, kNe,  // comparison
  kNot, kOr, kAnd,     // logic
  kAdd, kSub,          // linear arithmetic
  kIte,                // if-then-else
  kMul,                // multiplication
  kInput,
};

inline constexpr int kComponentKinds = 11;

enum class ComponentCategory : std::uint8_t {
  kComparison, kLogic, kLinear, kIte, kMultiplication,
};

ComponentCategory CategoryOf(GuardOp op);
std::string_view GuardOpName(GuardOp op);
int Arity(GuardOp op);
Type ResultType(GuardOp op);
Type OperandType(GuardOp op, int position);
bool IsCommutative(GuardOp op);

// Stage k activates every component up to and including bundle k:
// B0 = {}, B1 = comparison, B2 = logic, B3 = linear, B4 = ite, B5 = mul.
inline constexpr int kMaxStage = 5;
std::vector<GuardOp> ActiveComponents(int stage);

struct GuardExpr {
  GuardOp op = GuardOp::kInput;
  int input = -1;  // kInput: index into the PairSet schema
  std::vector<GuardExpr> args;

  static GuardExpr Input(int index) { return GuardExpr{GuardOp::kInput, index, {}}; }
  static GuardExpr Node(GuardOp op, std::vector<GuardExpr> args) {
    return GuardExpr{op, -1, std::move(args)};
  }

  friend bool operator==(const GuardExpr&, const GuardExpr&) = default;
};

// Throws kInternal on unknown inputs or ill-typed nodes.
Type TypeOfGuard(const GuardExpr& expr, const std::vector<InputSpec>& schema);

// nullopt on integer overflow.
std::optional<std::int64_t> EvalGuard(const GuardExpr& expr,
                                      const std::vector<std::int64_t>& inputs);

int ComponentCount(const GuardExpr& expr);
int ComponentTypeCount(const GuardExpr& expr);
// Highest bundle used, 0 for a bare input.
int StageOf(const GuardExpr& expr);

// Rendered over input names, e.g. "(i > n) && !flag".
std::string GuardToString(const GuardExpr& expr,
                          const std::vector<InputSpec>& schema);

// Language expression over the inputs' source expressions.
Expr GuardToLanguage(const GuardExpr& expr,
                     const std::vector<InputSpec>& schema);

}  // namespace loopfix

#endif  // LOOPFIX_GUARD_EXPR_H_
