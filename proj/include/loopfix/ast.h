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

#ifndef LOOPFIX_AST_H_
#define LOOPFIX_AST_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "loopfix/error.h"

namespace loopfix {

enum class Type : std::uint8_t { kVoid, kInt, kBool, kIntArray };

std::string_view TypeName(Type type);

// Identity of a while loop: enclosing function (or test) and the pre-order
// index of the loop inside it. Survives printing, instrumentation and guard
// replacement.
struct LoopId {
  std::string function;
  int index = 0;

  std::string ToString() const;  // "clear#0"
  static LoopId FromString(std::string_view text);

  friend auto operator<=>(const LoopId&, const LoopId&) = default;
  friend bool operator==(const LoopId&, const LoopId&) = default;
};

enum class UnaryOp : std::uint8_t { kNot, kNeg };

enum class BinaryOp : std::uint8_t {
  kAdd, kSub, kMul, kDiv, kMod,
  kLt, kLe, kGt, kGe, kEq, kNe,
  kAnd, kOr,
};

std::string_view OpSpelling(UnaryOp op);
std::string_view OpSpelling(BinaryOp op);

struct Expr {
  enum class Kind : std::uint8_t {
    kIntLit, kBoolLit, kArrayLit, kVar, kIndex, kLen, kUnary, kBinary,
    kCall, kCond,
  };

  Kind kind = Kind::kIntLit;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string name;  // variable or callee
  UnaryOp unary_op = UnaryOp::kNot;
  BinaryOp binary_op = BinaryOp::kAdd;
  // kArrayLit: elements; kIndex: {array, index}; kLen: {array};
  // kUnary: {operand}; kBinary: {lhs, rhs}; kCall: arguments;
  // kCond: {condition, then, else}.
  std::vector<Expr> operands;
  SourceLocation location;

  // Resolved by the checker; ignored by structural equality.
  Type type = Type::kVoid;
  int slot = -1;
  int callee = -1;

  static Expr IntLit(std::int64_t value);
  static Expr BoolLit(bool value);
  static Expr Var(std::string name);
  static Expr Len(Expr array);
  static Expr Unary(UnaryOp op, Expr operand);
  static Expr Binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr Cond(Expr condition, Expr then_value, Expr else_value);

  bool is_comparison() const;
  bool is_logical() const;  // && or ||

  friend bool operator==(const Expr& a, const Expr& b);
};

// A variable visible at a loop guard.
struct ScopeVar {
  std::string name;
  Type type = Type::kInt;
  int slot = -1;
};

struct Stmt {
  enum class Kind : std::uint8_t {
    kVarDecl, kAssign, kStore, kIf, kWhile, kMonitoredWhile, kBreak,
    kReturn, kExpr, kAssert,
  };

  Kind kind = Kind::kExpr;
  std::string name;  // declared / assigned variable
  Type decl_type = Type::kInt;
  // kVarDecl, kAssign: {value}; kStore: {index, value};
  // kIf, kWhile, kMonitoredWhile: {guard}; kReturn: {} or {value};
  // kExpr: {call}; kAssert: {condition}.
  std::vector<Expr> exprs;
  std::vector<Stmt> body;
  std::vector<Stmt> else_body;
  bool has_else = false;
  LoopId loop;  // loops only
  SourceLocation location;

  // Resolved by the checker.
  int slot = -1;
  std::vector<ScopeVar> scope;  // loops only: visible variables at the guard

  bool is_loop() const {
    return kind == Kind::kWhile || kind == Kind::kMonitoredWhile;
  }
  const Expr& guard() const { return exprs.front(); }

  friend bool operator==(const Stmt& a, const Stmt& b);
};

struct Param {
  std::string name;
  Type type = Type::kInt;

  friend bool operator==(const Param&, const Param&) = default;
};

struct FunctionDecl {
  std::string name;
  std::vector<Param> params;
  Type return_type = Type::kVoid;
  std::vector<Stmt> body;
  SourceLocation location;
  int frame_size = 0;  // resolved

  friend bool operator==(const FunctionDecl& a, const FunctionDecl& b);
};

struct TestCase {
  std::string name;
  std::vector<Stmt> body;
  SourceLocation location;
  int frame_size = 0;  // resolved

  friend bool operator==(const TestCase& a, const TestCase& b);
};

struct Program {
  std::vector<FunctionDecl> functions;
  std::vector<TestCase> tests;

  const FunctionDecl* FindFunction(std::string_view name) const;
  const TestCase* FindTest(std::string_view name) const;

  friend bool operator==(const Program& a, const Program& b);
};

// All loops in declaration order (functions first, then tests), pre-order
// within each body.
std::vector<LoopId> LoopsOf(const Program& program);

// nullptr if no such loop.
const Stmt* FindLoop(const Program& program, const LoopId& id);

// Returns a copy of `program` whose loop `id` has `guard` as its guard. The
// result is re-checked; throws kType if the guard is ill-typed or refers to
// names not in scope, kUsage if the loop does not exist.
Program ReplaceGuard(const Program& program, const LoopId& id, Expr guard);

// Assigns loop ids in pre-order to every loop in each function and test.
void AssignLoopIds(Program& program);

}  // namespace loopfix

#endif  // LOOPFIX_AST_H_
