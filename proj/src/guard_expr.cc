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

#include "loopfix/guard_expr.h"

#include <set>

#include "loopfix/parser.h"

namespace loopfix {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kInternal, "malformed guard expression: " + what);
}

int Precedence(GuardOp op) {
  switch (op) {
    case GuardOp::kIte: return 1;
    case GuardOp::kOr: return 2;
    case GuardOp::kAnd: return 3;
    case GuardOp::kEq:
    case GuardOp::kNe: return 4;
    case GuardOp::kGt:
    case GuardOp::kGe: return 5;
    case GuardOp::kAdd:
    case GuardOp::kSub: return 6;
    case GuardOp::kMul: return 7;
    case GuardOp::kNot: return 8;
    case GuardOp::kInput: return 9;
  }
  return 9;
}

void Render(const GuardExpr& e, const std::vector<InputSpec>& schema,
            std::string& out) {
  auto child = [&](const GuardExpr& c, bool wrap) {
    if (wrap) out += '(';
    Render(c, schema, out);
    if (wrap) out += ')';
  };
  int prec = Precedence(e.op);
  switch (e.op) {
    case GuardOp::kInput:
      out += schema.at(e.input).name;
      return;
    case GuardOp::kNot:
      out += '!';
      child(e.args[0], Precedence(e.args[0].op) < prec);
      return;
    case GuardOp::kIte:
      child(e.args[0], Precedence(e.args[0].op) <= prec);
      out += " ? ";
      child(e.args[1], false);
      out += " : ";
      child(e.args[2], false);
      return;
    default:
      child(e.args[0], Precedence(e.args[0].op) < prec);
      out += ' ';
      out += GuardOpName(e.op);
      out += ' ';
      child(e.args[1], Precedence(e.args[1].op) <= prec);
      return;
  }
}

}  // namespace

ComponentCategory CategoryOf(GuardOp op) {
  switch (op) {
    case GuardOp::kGt:
    case GuardOp::kGe:
    case GuardOp::kEq:
    case GuardOp::kNe: return ComponentCategory::kComparison;
    case GuardOp::kNot:
    case GuardOp::kOr:
    case GuardOp::kAnd: return ComponentCategory::kLogic;
    case GuardOp::kAdd:
    case GuardOp::kSub: return ComponentCategory::kLinear;
    case GuardOp::kIte: return ComponentCategory::kIte;
    case GuardOp::kMul: return ComponentCategory::kMultiplication;
    case GuardOp::kInput: break;
  }
  Malformed("input has no category");
}

std::string_view GuardOpName(GuardOp op) {
  switch (op) {
    case GuardOp::kGt: return ">";
    case GuardOp::kGe: return ">=";
    case GuardOp::kEq: return "==";
    case GuardOp::kNe: return "!=";
    case GuardOp::kNot: return "!";
    case GuardOp::kOr: return "||";
    case GuardOp::kAnd: return "&&";
    case GuardOp::kAdd: return "+";
    case GuardOp::kSub: return "-";
    case GuardOp::kIte: return "ite";
    case GuardOp::kMul: return "*";
    case GuardOp::kInput: return "input";
  }
  return "?";
}

int Arity(GuardOp op) {
  switch (op) {
    case GuardOp::kInput: return 0;
    case GuardOp::kNot: return 1;
    case GuardOp::kIte: return 3;
    default: return 2;
  }
}

Type ResultType(GuardOp op) {
  switch (op) {
    case GuardOp::kAdd:
    case GuardOp::kSub:
    case GuardOp::kMul:
    case GuardOp::kIte: return Type::kInt;
    case GuardOp::kInput: return Type::kVoid;
    default: return Type::kBool;
  }
}

Type OperandType(GuardOp op, int position) {
  switch (op) {
    case GuardOp::kNot:
    case GuardOp::kOr:
    case GuardOp::kAnd: return Type::kBool;
    case GuardOp::kIte: return position == 0 ? Type::kBool : Type::kInt;
    default: return Type::kInt;
  }
}

bool IsCommutative(GuardOp op) {
  switch (op) {
    case GuardOp::kEq:
    case GuardOp::kNe:
    case GuardOp::kOr:
    case GuardOp::kAnd:
    case GuardOp::kAdd:
    case GuardOp::kMul: return true;
    default: return false;
  }
}

std::vector<GuardOp> ActiveComponents(int stage) {
  static constexpr int kBundleEnd[] = {0, 4, 7, 9, 10, 11};
  if (stage < 0 || stage > kMaxStage) Malformed("stage out of range");
  std::vector<GuardOp> ops;
  for (int i = 0; i < kBundleEnd[stage]; ++i) {
    ops.push_back(static_cast<GuardOp>(i));
  }
  return ops;
}

Type TypeOfGuard(const GuardExpr& expr, const std::vector<InputSpec>& schema) {
  if (expr.op == GuardOp::kInput) {
    if (expr.input < 0 || expr.input >= static_cast<int>(schema.size())) {
      Malformed("input index " + std::to_string(expr.input));
    }
    return schema[expr.input].type;
  }
  if (static_cast<int>(expr.args.size()) != Arity(expr.op)) {
    Malformed(std::string(GuardOpName(expr.op)) + " arity");
  }
  for (int i = 0; i < Arity(expr.op); ++i) {
    if (TypeOfGuard(expr.args[i], schema) != OperandType(expr.op, i)) {
      Malformed(std::string(GuardOpName(expr.op)) + " operand type");
    }
  }
  return ResultType(expr.op);
}

std::optional<std::int64_t> EvalGuard(
    const GuardExpr& e, const std::vector<std::int64_t>& inputs) {
  if (e.op == GuardOp::kInput) return inputs.at(e.input);
  std::int64_t v[3] = {0, 0, 0};
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    std::optional<std::int64_t> r = EvalGuard(e.args[i], inputs);
    if (!r) return std::nullopt;
    v[i] = *r;
  }
  std::int64_t out = 0;
  switch (e.op) {
    case GuardOp::kGt: return v[0] > v[1];
    case GuardOp::kGe: return v[0] >= v[1];
    case GuardOp::kEq: return v[0] == v[1];
    case GuardOp::kNe: return v[0] != v[1];
    case GuardOp::kNot: return v[0] == 0;
    case GuardOp::kOr: return v[0] != 0 || v[1] != 0;
    case GuardOp::kAnd: return v[0] != 0 && v[1] != 0;
    case GuardOp::kAdd:
      if (__builtin_add_overflow(v[0], v[1], &out)) return std::nullopt;
      return out;
    case GuardOp::kSub:
      if (__builtin_sub_overflow(v[0], v[1], &out)) return std::nullopt;
      return out;
    case GuardOp::kMul:
      if (__builtin_mul_overflow(v[0], v[1], &out)) return std::nullopt;
      return out;
    case GuardOp::kIte: return v[0] != 0 ? v[1] : v[2];
    case GuardOp::kInput: break;
  }
  return std::nullopt;
}

int ComponentCount(const GuardExpr& expr) {
  int n = expr.op == GuardOp::kInput ? 0 : 1;
  for (const auto& a : expr.args) n += ComponentCount(a);
  return n;
}

namespace {
void Categories(const GuardExpr& e, std::set<ComponentCategory>& out) {
  if (e.op != GuardOp::kInput) out.insert(CategoryOf(e.op));
  for (const auto& a : e.args) Categories(a, out);
}
}  // namespace

int ComponentTypeCount(const GuardExpr& expr) {
  std::set<ComponentCategory> cats;
  Categories(expr, cats);
  return static_cast<int>(cats.size());
}

int StageOf(const GuardExpr& expr) {
  int stage = expr.op == GuardOp::kInput
                  ? 0
                  : static_cast<int>(CategoryOf(expr.op)) + 1;
  for (const auto& a : expr.args) stage = std::max(stage, StageOf(a));
  return stage;
}

std::string GuardToString(const GuardExpr& expr,
                          const std::vector<InputSpec>& schema) {
  std::string out;
  Render(expr, schema, out);
  return out;
}

Expr GuardToLanguage(const GuardExpr& e, const std::vector<InputSpec>& schema) {
  auto arg = [&](int i) { return GuardToLanguage(e.args[i], schema); };
  switch (e.op) {
    case GuardOp::kInput: {
      const InputSpec& in = schema.at(e.input);
      if (in.constant) {
        return in.type == Type::kBool ? Expr::BoolLit(in.constant_value != 0)
                                      : Expr::IntLit(in.constant_value);
      }
      return ParseExpression(in.source);
    }
    case GuardOp::kGt: return Expr::Binary(BinaryOp::kGt, arg(0), arg(1));
    case GuardOp::kGe: return Expr::Binary(BinaryOp::kGe, arg(0), arg(1));
    case GuardOp::kEq: return Expr::Binary(BinaryOp::kEq, arg(0), arg(1));
    case GuardOp::kNe: return Expr::Binary(BinaryOp::kNe, arg(0), arg(1));
    case GuardOp::kNot: return Expr::Unary(UnaryOp::kNot, arg(0));
    case GuardOp::kOr: return Expr::Binary(BinaryOp::kOr, arg(0), arg(1));
    case GuardOp::kAnd: return Expr::Binary(BinaryOp::kAnd, arg(0), arg(1));
    case GuardOp::kAdd: return Expr::Binary(BinaryOp::kAdd, arg(0), arg(1));
    case GuardOp::kSub: return Expr::Binary(BinaryOp::kSub, arg(0), arg(1));
    case GuardOp::kMul: return Expr::Binary(BinaryOp::kMul, arg(0), arg(1));
    case GuardOp::kIte: return Expr::Cond(arg(0), arg(1), arg(2));
  }
  Malformed("unknown op");
}

}  // namespace loopfix
