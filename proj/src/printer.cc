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

#include "loopfix/printer.h"

#include <sstream>

namespace loopfix {
namespace {

// Binding strength; higher binds tighter.
constexpr int kCondPrec = 1;
constexpr int kUnaryPrec = 8;
constexpr int kPostfixPrec = 9;

int Precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return 2;
    case BinaryOp::kAnd: return 3;
    case BinaryOp::kEq:
    case BinaryOp::kNe: return 4;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: return 5;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return 6;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return 7;
  }
  return 0;
}

int Precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kCond: return kCondPrec;
    case Expr::Kind::kBinary: return Precedence(e.binary_op);
    case Expr::Kind::kUnary: return kUnaryPrec;
    case Expr::Kind::kIntLit: return e.int_value < 0 ? kUnaryPrec : kPostfixPrec;
    default: return kPostfixPrec;
  }
}

void Print(const Expr& e, std::ostream& out);

void PrintWrapped(const Expr& e, bool wrap, std::ostream& out) {
  if (wrap) out << '(';
  Print(e, out);
  if (wrap) out << ')';
}

void PrintList(const std::vector<Expr>& items, std::ostream& out) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out << ", ";
    Print(items[i], out);
  }
}

void Print(const Expr& e, std::ostream& out) {
  switch (e.kind) {
    case Expr::Kind::kIntLit:
      out << e.int_value;
      return;
    case Expr::Kind::kBoolLit:
      out << (e.bool_value ? "true" : "false");
      return;
    case Expr::Kind::kArrayLit:
      out << '[';
      PrintList(e.operands, out);
      out << ']';
      return;
    case Expr::Kind::kVar:
      out << e.name;
      return;
    case Expr::Kind::kIndex:
      PrintWrapped(e.operands[0], Precedence(e.operands[0]) < kPostfixPrec,
                   out);
      out << '[';
      Print(e.operands[1], out);
      out << ']';
      return;
    case Expr::Kind::kLen:
      out << "len(";
      Print(e.operands[0], out);
      out << ')';
      return;
    case Expr::Kind::kUnary: {
      out << OpSpelling(e.unary_op);
      const Expr& operand = e.operands[0];
      // "- -x" would lex fine, but "--x" reads badly.
      bool wrap = Precedence(operand) < kUnaryPrec ||
                  (e.unary_op == UnaryOp::kNeg &&
                   ((operand.kind == Expr::Kind::kUnary &&
                     operand.unary_op == UnaryOp::kNeg) ||
                    (operand.kind == Expr::Kind::kIntLit &&
                     operand.int_value < 0)));
      PrintWrapped(operand, wrap, out);
      return;
    }
    case Expr::Kind::kBinary: {
      int prec = Precedence(e.binary_op);
      PrintWrapped(e.operands[0], Precedence(e.operands[0]) < prec, out);
      out << ' ' << OpSpelling(e.binary_op) << ' ';
      PrintWrapped(e.operands[1], Precedence(e.operands[1]) <= prec, out);
      return;
    }
    case Expr::Kind::kCall:
      out << e.name << '(';
      PrintList(e.operands, out);
      out << ')';
      return;
    case Expr::Kind::kCond:
      PrintWrapped(e.operands[0], Precedence(e.operands[0]) <= kCondPrec,
                   out);
      out << " ? ";
      Print(e.operands[1], out);
      out << " : ";
      Print(e.operands[2], out);
      return;
  }
}

std::string TypeText(Type t) { return std::string(TypeName(t)); }

class ProgramPrinter {
 public:
  std::string Run(const Program& program) {
    bool first = true;
    for (const auto& f : program.functions) {
      if (!first) out_ << '\n';
      first = false;
      out_ << "fn " << f.name << '(';
      for (std::size_t i = 0; i < f.params.size(); ++i) {
        if (i > 0) out_ << ", ";
        out_ << f.params[i].name << ": " << TypeText(f.params[i].type);
      }
      out_ << ')';
      if (f.return_type != Type::kVoid) {
        out_ << " -> " << TypeText(f.return_type);
      }
      out_ << ' ';
      Block(f.body, 0);
      out_ << '\n';
    }
    for (const auto& t : program.tests) {
      if (!first) out_ << '\n';
      first = false;
      out_ << "test " << t.name << ' ';
      Block(t.body, 0);
      out_ << '\n';
    }
    return out_.str();
  }

 private:
  void Indent(int depth) {
    for (int i = 0; i < depth; ++i) out_ << "  ";
  }

  // Prints "{ ... }" starting at the current column; no trailing newline.
  void Block(const std::vector<Stmt>& body, int depth) {
    out_ << "{\n";
    for (const auto& s : body) Statement(s, depth + 1);
    Indent(depth);
    out_ << '}';
  }

  void IfChain(const Stmt& s, int depth) {
    out_ << "if (" << PrintExpr(s.exprs[0]) << ") ";
    Block(s.body, depth);
    if (!s.has_else) return;
    out_ << " else ";
    if (s.else_body.size() == 1 && s.else_body[0].kind == Stmt::Kind::kIf) {
      IfChain(s.else_body[0], depth);
    } else {
      Block(s.else_body, depth);
    }
  }

  void Monitored(const Stmt& s, int depth) {
    std::string k = std::to_string(s.loop.index);
    std::string iters = "iters$" + k;
    std::string stay = "stay$" + k;
    std::string monitor = "monitor$" + k;
    Indent(depth);
    out_ << "// monitored loop " << s.loop.ToString() << '\n';
    Indent(depth);
    out_ << "var " << monitor << " = loop_monitor(\"" << s.loop.ToString()
         << "\");\n";
    Indent(depth);
    out_ << "var " << iters << ": int = 0;\n";
    Indent(depth);
    out_ << "while (true) {\n";
    Indent(depth + 1);
    out_ << "var " << stay << ": bool = " << monitor << ".decide("
         << PrintExpr(s.exprs[0]) << ", " << iters << ");\n";
    Indent(depth + 1);
    out_ << monitor << ".collect(" << stay;
    for (const auto& v : s.scope) {
      out_ << ", " << (v.type == Type::kIntArray ? "len(" + v.name + ")"
                                                  : v.name);
    }
    out_ << ");\n";
    Indent(depth + 1);
    out_ << "if (" << stay << ") {\n";
    Indent(depth + 2);
    out_ << iters << " = " << iters << " + 1;\n";
    for (const auto& b : s.body) Statement(b, depth + 2);
    Indent(depth + 1);
    out_ << "} else {\n";
    Indent(depth + 2);
    out_ << "break;\n";
    Indent(depth + 1);
    out_ << "}\n";
    Indent(depth);
    out_ << "}\n";
  }

  void Statement(const Stmt& s, int depth) {
    if (s.kind == Stmt::Kind::kMonitoredWhile) {
      Monitored(s, depth);
      return;
    }
    Indent(depth);
    switch (s.kind) {
      case Stmt::Kind::kVarDecl:
        out_ << "var " << s.name << ": " << TypeText(s.decl_type) << " = "
             << PrintExpr(s.exprs[0]) << ";\n";
        return;
      case Stmt::Kind::kAssign:
        out_ << s.name << " = " << PrintExpr(s.exprs[0]) << ";\n";
        return;
      case Stmt::Kind::kStore:
        out_ << s.name << '[' << PrintExpr(s.exprs[0])
             << "] = " << PrintExpr(s.exprs[1]) << ";\n";
        return;
      case Stmt::Kind::kIf:
        IfChain(s, depth);
        out_ << '\n';
        return;
      case Stmt::Kind::kWhile:
        out_ << "while (" << PrintExpr(s.exprs[0]) << ") ";
        Block(s.body, depth);
        out_ << '\n';
        return;
      case Stmt::Kind::kBreak:
        out_ << "break;\n";
        return;
      case Stmt::Kind::kReturn:
        out_ << "return";
        if (!s.exprs.empty()) out_ << ' ' << PrintExpr(s.exprs[0]);
        out_ << ";\n";
        return;
      case Stmt::Kind::kExpr:
        out_ << PrintExpr(s.exprs[0]) << ";\n";
        return;
      case Stmt::Kind::kAssert:
        out_ << "assert(" << PrintExpr(s.exprs[0]) << ");\n";
        return;
      case Stmt::Kind::kMonitoredWhile:
        return;
    }
  }

  std::ostringstream out_;
};

}  // namespace

std::string PrintExpr(const Expr& expr) {
  std::ostringstream out;
  Print(expr, out);
  return out.str();
}

std::string PrettyPrint(const Program& program) {
  return ProgramPrinter().Run(program);
}

}  // namespace loopfix
