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

#include "loopfix/ast.h"

#include <charconv>
#include <functional>

#include "loopfix/checker.h"

namespace loopfix {

std::string_view TypeName(Type type) {
  switch (type) {
    case Type::kVoid: return "void";
    case Type::kInt: return "int";
    case Type::kBool: return "bool";
    case Type::kIntArray: return "int[]";
  }
  return "?";
}

std::string LoopId::ToString() const {
  return function + "#" + std::to_string(index);
}

LoopId LoopId::FromString(std::string_view text) {
  auto hash = text.rfind('#');
  if (hash == std::string_view::npos || hash == 0 || hash + 1 == text.size()) {
    throw Error(ErrorCode::kUsage,
                "malformed loop id '" + std::string(text) +
                    "' (expected function#index)");
  }
  LoopId id;
  id.function = std::string(text.substr(0, hash));
  auto digits = text.substr(hash + 1);
  auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), id.index);
  if (ec != std::errc() || end != digits.data() + digits.size() ||
      id.index < 0) {
    throw Error(ErrorCode::kUsage, "malformed loop index in '" +
                                       std::string(text) + "'");
  }
  return id;
}

std::string_view OpSpelling(UnaryOp op) {
  return op == UnaryOp::kNot ? "!" : "-";
}

std::string_view OpSpelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

Expr Expr::IntLit(std::int64_t value) {
  Expr e;
  e.kind = Kind::kIntLit;
  e.int_value = value;
  return e;
}

Expr Expr::BoolLit(bool value) {
  Expr e;
  e.kind = Kind::kBoolLit;
  e.bool_value = value;
  return e;
}

Expr Expr::Var(std::string name) {
  Expr e;
  e.kind = Kind::kVar;
  e.name = std::move(name);
  return e;
}

Expr Expr::Len(Expr array) {
  Expr e;
  e.kind = Kind::kLen;
  e.operands.push_back(std::move(array));
  return e;
}

Expr Expr::Unary(UnaryOp op, Expr operand) {
  Expr e;
  e.kind = Kind::kUnary;
  e.unary_op = op;
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::Binary(BinaryOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::kBinary;
  e.binary_op = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

Expr Expr::Cond(Expr condition, Expr then_value, Expr else_value) {
  Expr e;
  e.kind = Kind::kCond;
  e.operands.push_back(std::move(condition));
  e.operands.push_back(std::move(then_value));
  e.operands.push_back(std::move(else_value));
  return e;
}

bool Expr::is_comparison() const {
  if (kind != Kind::kBinary) return false;
  switch (binary_op) {
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      return true;
    default:
      return false;
  }
}

bool Expr::is_logical() const {
  return kind == Kind::kBinary &&
         (binary_op == BinaryOp::kAnd || binary_op == BinaryOp::kOr);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::kIntLit:
      return a.int_value == b.int_value;
    case Expr::Kind::kBoolLit:
      return a.bool_value == b.bool_value;
    case Expr::Kind::kVar:
      return a.name == b.name;
    case Expr::Kind::kCall:
      if (a.name != b.name) return false;
      break;
    case Expr::Kind::kUnary:
      if (a.unary_op != b.unary_op) return false;
      break;
    case Expr::Kind::kBinary:
      if (a.binary_op != b.binary_op) return false;
      break;
    default:
      break;
  }
  return a.operands == b.operands;
}

bool operator==(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.exprs != b.exprs || a.body != b.body ||
      a.has_else != b.has_else || a.else_body != b.else_body) {
    return false;
  }
  switch (a.kind) {
    case Stmt::Kind::kVarDecl:
      return a.name == b.name && a.decl_type == b.decl_type;
    case Stmt::Kind::kAssign:
    case Stmt::Kind::kStore:
      return a.name == b.name;
    case Stmt::Kind::kWhile:
    case Stmt::Kind::kMonitoredWhile:
      return a.loop == b.loop;
    default:
      return true;
  }
}

bool operator==(const FunctionDecl& a, const FunctionDecl& b) {
  return a.name == b.name && a.params == b.params &&
         a.return_type == b.return_type && a.body == b.body;
}

bool operator==(const TestCase& a, const TestCase& b) {
  return a.name == b.name && a.body == b.body;
}

bool operator==(const Program& a, const Program& b) {
  return a.functions == b.functions && a.tests == b.tests;
}

const FunctionDecl* Program::FindFunction(std::string_view name) const {
  for (const auto& f : functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const TestCase* Program::FindTest(std::string_view name) const {
  for (const auto& t : tests) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

namespace {

template <typename Block, typename Fn>
void VisitLoops(Block& block, const Fn& fn) {
  for (auto& stmt : block) {
    if (stmt.is_loop()) fn(stmt);
    VisitLoops(stmt.body, fn);
    VisitLoops(stmt.else_body, fn);
  }
}

template <typename ProgramT, typename Fn>
void VisitAllBodies(ProgramT& program, const Fn& fn) {
  for (auto& f : program.functions) fn(f.name, f.body);
  for (auto& t : program.tests) fn(t.name, t.body);
}

}  // namespace

void AssignLoopIds(Program& program) {
  VisitAllBodies(program, [](const std::string& owner,
                             std::vector<Stmt>& body) {
    int next = 0;
    VisitLoops(body, [&](Stmt& loop) {
      loop.loop = LoopId{owner, next++};
    });
  });
}

std::vector<LoopId> LoopsOf(const Program& program) {
  std::vector<LoopId> ids;
  VisitAllBodies(program, [&](const std::string&,
                              const std::vector<Stmt>& body) {
    VisitLoops(body, [&](const Stmt& loop) { ids.push_back(loop.loop); });
  });
  return ids;
}

namespace {

template <typename Block>
auto FindLoopIn(Block& block, const LoopId& id) -> decltype(&block.front()) {
  for (auto& stmt : block) {
    if (stmt.is_loop() && stmt.loop == id) return &stmt;
    if (auto* found = FindLoopIn(stmt.body, id)) return found;
    if (auto* found = FindLoopIn(stmt.else_body, id)) return found;
  }
  return nullptr;
}

template <typename ProgramT>
auto FindLoopImpl(ProgramT& program, const LoopId& id)
    -> decltype(FindLoopIn(program.functions.front().body, id)) {
  for (auto& f : program.functions) {
    if (f.name == id.function) return FindLoopIn(f.body, id);
  }
  for (auto& t : program.tests) {
    if (t.name == id.function) return FindLoopIn(t.body, id);
  }
  return nullptr;
}

}  // namespace

const Stmt* FindLoop(const Program& program, const LoopId& id) {
  return FindLoopImpl(program, id);
}

Program ReplaceGuard(const Program& program, const LoopId& id, Expr guard) {
  Program result = program;
  Stmt* loop = FindLoopImpl(result, id);
  if (loop == nullptr) {
    throw Error(ErrorCode::kUsage, "unknown loop " + id.ToString());
  }
  loop->exprs.front() = std::move(guard);
  Check(result);
  return result;
}

}  // namespace loopfix
