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

#include "loopfix/checker.h"

#include <set>
#include <string>
#include <vector>

#include "loopfix/printer.h"

namespace loopfix {
namespace {

[[noreturn]] void TypeFail(const std::string& message, SourceLocation loc) {
  throw Error(ErrorCode::kType, message, loc);
}

std::string Quote(const Expr& e) { return "'" + PrintExpr(e) + "'"; }

class FunctionChecker {
 public:
  FunctionChecker(const Program& program, Type return_type, bool is_test)
      : program_(program), return_type_(return_type), is_test_(is_test) {}

  void CheckFunction(const std::vector<Param>& params,
                     std::vector<Stmt>& body, SourceLocation loc) {
    scopes_.emplace_back();
    for (const auto& p : params) Declare(p.name, p.type, loc);
    CheckBody(body);
    scopes_.pop_back();
  }

  void CheckBody(std::vector<Stmt>& body) {
    scopes_.emplace_back();
    for (auto& s : body) CheckStmt(s);
    scopes_.pop_back();
  }

  int frame_size() const { return next_slot_; }

 private:
  int Declare(const std::string& name, Type type, SourceLocation loc) {
    if (Lookup(name) != nullptr) {
      TypeFail("redeclaration of '" + name + "'", loc);
    }
    if (type == Type::kVoid) TypeFail("variable of type void", loc);
    int slot = next_slot_++;
    scopes_.back().push_back(ScopeVar{name, type, slot});
    return slot;
  }

  const ScopeVar* Lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      for (const auto& v : *it) {
        if (v.name == name) return &v;
      }
    }
    return nullptr;
  }

  std::vector<ScopeVar> Visible() const {
    std::vector<ScopeVar> all;
    for (const auto& scope : scopes_) {
      all.insert(all.end(), scope.begin(), scope.end());
    }
    return all;
  }

  void Require(const Expr& e, Type want, std::string_view context) {
    if (e.type != want) {
      TypeFail(std::string(context) + " must be " +
                   std::string(TypeName(want)) + ", but " + Quote(e) +
                   " is " + std::string(TypeName(e.type)),
               e.location);
    }
  }

  void CheckStmt(Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::kVarDecl: {
        CheckExpr(s.exprs[0]);
        Require(s.exprs[0], s.decl_type, "initializer of '" + s.name + "'");
        s.slot = Declare(s.name, s.decl_type, s.location);
        return;
      }
      case Stmt::Kind::kAssign: {
        const ScopeVar* v = Lookup(s.name);
        if (v == nullptr) {
          TypeFail("assignment to undeclared variable '" + s.name + "'",
                   s.location);
        }
        CheckExpr(s.exprs[0]);
        Require(s.exprs[0], v->type, "value assigned to '" + s.name + "'");
        s.slot = v->slot;
        return;
      }
      case Stmt::Kind::kStore: {
        const ScopeVar* v = Lookup(s.name);
        if (v == nullptr) {
          TypeFail("store into undeclared variable '" + s.name + "'",
                   s.location);
        }
        if (v->type != Type::kIntArray) {
          TypeFail("'" + s.name + "' is not an array", s.location);
        }
        CheckExpr(s.exprs[0]);
        Require(s.exprs[0], Type::kInt, "array index");
        CheckExpr(s.exprs[1]);
        Require(s.exprs[1], Type::kInt, "array element");
        s.slot = v->slot;
        return;
      }
      case Stmt::Kind::kIf:
        CheckExpr(s.exprs[0]);
        Require(s.exprs[0], Type::kBool, "if condition");
        CheckBody(s.body);
        CheckBody(s.else_body);
        return;
      case Stmt::Kind::kWhile:
      case Stmt::Kind::kMonitoredWhile:
        s.scope = Visible();
        CheckExpr(s.exprs[0]);
        Require(s.exprs[0], Type::kBool, "loop guard");
        ++loop_depth_;
        CheckBody(s.body);
        --loop_depth_;
        return;
      case Stmt::Kind::kBreak:
        if (loop_depth_ == 0) TypeFail("break outside loop", s.location);
        return;
      case Stmt::Kind::kReturn:
        if (s.exprs.empty()) {
          if (return_type_ != Type::kVoid) {
            TypeFail("missing return value", s.location);
          }
        } else {
          if (is_test_ || return_type_ == Type::kVoid) {
            TypeFail("unexpected return value", s.location);
          }
          CheckExpr(s.exprs[0]);
          Require(s.exprs[0], return_type_, "return value");
        }
        return;
      case Stmt::Kind::kExpr:
        CheckExpr(s.exprs[0], /*allow_void=*/true);
        return;
      case Stmt::Kind::kAssert:
        CheckExpr(s.exprs[0]);
        Require(s.exprs[0], Type::kBool, "assertion");
        return;
    }
  }

  void CheckExpr(Expr& e, bool allow_void = false) {
    switch (e.kind) {
      case Expr::Kind::kIntLit:
        e.type = Type::kInt;
        return;
      case Expr::Kind::kBoolLit:
        e.type = Type::kBool;
        return;
      case Expr::Kind::kArrayLit:
        for (auto& el : e.operands) {
          CheckExpr(el);
          Require(el, Type::kInt, "array element");
        }
        e.type = Type::kIntArray;
        return;
      case Expr::Kind::kVar: {
        const ScopeVar* v = Lookup(e.name);
        if (v == nullptr) {
          TypeFail("use of undeclared variable '" + e.name + "'", e.location);
        }
        e.type = v->type;
        e.slot = v->slot;
        return;
      }
      case Expr::Kind::kIndex:
        CheckExpr(e.operands[0]);
        Require(e.operands[0], Type::kIntArray, "indexed value");
        CheckExpr(e.operands[1]);
        Require(e.operands[1], Type::kInt, "array index");
        e.type = Type::kInt;
        return;
      case Expr::Kind::kLen:
        CheckExpr(e.operands[0]);
        Require(e.operands[0], Type::kIntArray, "argument of len");
        e.type = Type::kInt;
        return;
      case Expr::Kind::kUnary:
        CheckExpr(e.operands[0]);
        if (e.unary_op == UnaryOp::kNot) {
          Require(e.operands[0], Type::kBool, "operand of '!'");
          e.type = Type::kBool;
        } else {
          Require(e.operands[0], Type::kInt, "operand of unary '-'");
          e.type = Type::kInt;
        }
        return;
      case Expr::Kind::kBinary:
        CheckBinary(e);
        return;
      case Expr::Kind::kCall:
        CheckCall(e, allow_void);
        return;
      case Expr::Kind::kCond: {
        for (auto& op : e.operands) CheckExpr(op);
        Require(e.operands[0], Type::kBool, "condition of '?:'");
        if (e.operands[1].type != e.operands[2].type) {
          TypeFail("branches of " + Quote(e) + " have different types",
                   e.location);
        }
        e.type = e.operands[1].type;
        return;
      }
    }
  }

  void CheckBinary(Expr& e) {
    Expr& lhs = e.operands[0];
    Expr& rhs = e.operands[1];
    CheckExpr(lhs);
    CheckExpr(rhs);
    std::string context =
        "operand of '" + std::string(OpSpelling(e.binary_op)) + "'";
    switch (e.binary_op) {
      case BinaryOp::kAdd:
      case BinaryOp::kSub:
      case BinaryOp::kMul:
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        Require(lhs, Type::kInt, context);
        Require(rhs, Type::kInt, context);
        e.type = Type::kInt;
        return;
      case BinaryOp::kLt:
      case BinaryOp::kLe:
      case BinaryOp::kGt:
      case BinaryOp::kGe:
        Require(lhs, Type::kInt, context);
        Require(rhs, Type::kInt, context);
        e.type = Type::kBool;
        return;
      case BinaryOp::kEq:
      case BinaryOp::kNe:
        if (lhs.type == Type::kIntArray || lhs.type == Type::kVoid) {
          TypeFail(context + " must be int or bool, but " + Quote(lhs) +
                       " is " + std::string(TypeName(lhs.type)),
                   lhs.location);
        }
        Require(rhs, lhs.type, context);
        e.type = Type::kBool;
        return;
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        Require(lhs, Type::kBool, context);
        Require(rhs, Type::kBool, context);
        e.type = Type::kBool;
        return;
    }
  }

  void CheckCall(Expr& e, bool allow_void) {
    int index = 0;
    const FunctionDecl* callee = nullptr;
    for (const auto& f : program_.functions) {
      if (f.name == e.name) {
        callee = &f;
        break;
      }
      ++index;
    }
    if (callee == nullptr) {
      TypeFail("call to undefined function '" + e.name + "'", e.location);
    }
    if (callee->params.size() != e.operands.size()) {
      TypeFail("'" + e.name + "' expects " +
                   std::to_string(callee->params.size()) +
                   " argument(s), got " + std::to_string(e.operands.size()),
               e.location);
    }
    for (std::size_t i = 0; i < e.operands.size(); ++i) {
      CheckExpr(e.operands[i]);
      Require(e.operands[i], callee->params[i].type,
              "argument " + std::to_string(i + 1) + " of '" + e.name + "'");
    }
    if (callee->return_type == Type::kVoid && !allow_void) {
      TypeFail("'" + e.name + "' returns no value", e.location);
    }
    e.callee = index;
    e.type = callee->return_type;
  }

  const Program& program_;
  Type return_type_;
  bool is_test_;
  std::vector<std::vector<ScopeVar>> scopes_;
  int next_slot_ = 0;
  int loop_depth_ = 0;
};

}  // namespace

void Check(Program& program) {
  std::set<std::string> names;
  for (const auto& f : program.functions) {
    if (!names.insert(f.name).second) {
      TypeFail("duplicate function '" + f.name + "'", f.location);
    }
  }
  for (const auto& t : program.tests) {
    if (!names.insert(t.name).second) {
      TypeFail("test '" + t.name + "' clashes with another declaration",
               t.location);
    }
  }
  for (auto& f : program.functions) {
    FunctionChecker checker(program, f.return_type, /*is_test=*/false);
    checker.CheckFunction(f.params, f.body, f.location);
    f.frame_size = checker.frame_size();
  }
  for (auto& t : program.tests) {
    FunctionChecker checker(program, Type::kVoid, /*is_test=*/true);
    checker.CheckFunction({}, t.body, t.location);
    t.frame_size = checker.frame_size();
  }
}

}  // namespace loopfix
