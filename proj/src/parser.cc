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

#include "loopfix/parser.h"

#include <charconv>
#include <cctype>
#include <string>
#include <vector>

#include "loopfix/checker.h"

namespace loopfix {
namespace {

enum class Tok {
  kEnd, kIdent, kInt,
  // keywords
  kFn, kTest, kVar, kIf, kElse, kWhile, kBreak, kReturn, kAssert, kTrue,
  kFalse, kLen, kIntType, kBoolType,
  // punctuation
  kLParen, kRParen, kLBrace, kRBrace, kLBracket, kRBracket, kComma, kSemi,
  kColon, kArrow, kQuestion, kAssign,
  kPlus, kMinus, kStar, kSlash, kPercent,
  kLt, kLe, kGt, kGe, kEqEq, kNe, kAndAnd, kOrOr, kBang,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string_view text;
  SourceLocation location;
};

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      Token tok;
      tok.location = {line_, column_};
      if (pos_ >= src_.size()) {
        tok.kind = Tok::kEnd;
        tokens.push_back(tok);
        return tokens;
      }
      std::size_t start = pos_;
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          Advance();
        }
        tok.text = src_.substr(start, pos_ - start);
        tok.kind = Keyword(tok.text);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          Advance();
        }
        tok.text = src_.substr(start, pos_ - start);
        tok.kind = Tok::kInt;
      } else {
        tok.kind = Punct();
        tok.text = src_.substr(start, pos_ - start);
      }
      tokens.push_back(tok);
    }
  }

 private:
  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool Peek(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  void SkipTrivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (Peek("//")) {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
      } else if (Peek("/*")) {
        SourceLocation open{line_, column_};
        Advance();
        Advance();
        while (pos_ < src_.size() && !Peek("*/")) Advance();
        if (pos_ >= src_.size()) {
          throw Error(ErrorCode::kSyntax, "unterminated comment", open);
        }
        Advance();
        Advance();
      } else {
        return;
      }
    }
  }

  static Tok Keyword(std::string_view text) {
    static constexpr struct {
      std::string_view word;
      Tok kind;
    } kKeywords[] = {
        {"fn", Tok::kFn},         {"test", Tok::kTest},
        {"var", Tok::kVar},       {"if", Tok::kIf},
        {"else", Tok::kElse},     {"while", Tok::kWhile},
        {"break", Tok::kBreak},   {"return", Tok::kReturn},
        {"assert", Tok::kAssert}, {"true", Tok::kTrue},
        {"false", Tok::kFalse},   {"len", Tok::kLen},
        {"int", Tok::kIntType},   {"bool", Tok::kBoolType},
    };
    for (const auto& k : kKeywords) {
      if (k.word == text) return k.kind;
    }
    return Tok::kIdent;
  }

  Tok Punct() {
    static constexpr struct {
      std::string_view spelling;
      Tok kind;
    } kPuncts[] = {
        // Two-character tokens first.
        {"->", Tok::kArrow}, {"<=", Tok::kLe},     {">=", Tok::kGe},
        {"==", Tok::kEqEq},  {"!=", Tok::kNe},     {"&&", Tok::kAndAnd},
        {"||", Tok::kOrOr},  {"(", Tok::kLParen},  {")", Tok::kRParen},
        {"{", Tok::kLBrace}, {"}", Tok::kRBrace},  {"[", Tok::kLBracket},
        {"]", Tok::kRBracket}, {",", Tok::kComma}, {";", Tok::kSemi},
        {":", Tok::kColon},  {"?", Tok::kQuestion}, {"=", Tok::kAssign},
        {"+", Tok::kPlus},   {"-", Tok::kMinus},   {"*", Tok::kStar},
        {"/", Tok::kSlash},  {"%", Tok::kPercent}, {"<", Tok::kLt},
        {">", Tok::kGt},     {"!", Tok::kBang},
    };
    for (const auto& p : kPuncts) {
      if (Peek(p.spelling)) {
        for (std::size_t i = 0; i < p.spelling.size(); ++i) Advance();
        return p.kind;
      }
    }
    throw Error(ErrorCode::kSyntax,
                "unexpected character '" + std::string(1, src_[pos_]) + "'",
                {line_, column_});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program ParseProgram() {
    Program program;
    while (!At(Tok::kEnd)) {
      if (At(Tok::kFn)) {
        program.functions.push_back(ParseFunction());
      } else if (At(Tok::kTest)) {
        program.tests.push_back(ParseTest());
      } else {
        Fail("expected 'fn' or 'test'");
      }
    }
    return program;
  }

  Expr ParseStandaloneExpr() {
    Expr e = ParseExpr();
    Expect(Tok::kEnd, "end of expression");
    return e;
  }

 private:
  const Token& Cur() const { return toks_[pos_]; }
  const Token& Next() const {
    return toks_[pos_ + 1 < toks_.size() ? pos_ + 1 : pos_];
  }
  bool At(Tok kind) const { return Cur().kind == kind; }

  bool Accept(Tok kind) {
    if (!At(kind)) return false;
    ++pos_;
    return true;
  }

  const Token& Expect(Tok kind, std::string_view what) {
    if (!At(kind)) Fail("expected " + std::string(what));
    return toks_[pos_++];
  }

  [[noreturn]] void Fail(const std::string& message) const {
    std::string found = At(Tok::kEnd) ? "end of input"
                                      : "'" + std::string(Cur().text) + "'";
    throw Error(ErrorCode::kSyntax, message + ", found " + found,
                Cur().location);
  }

  std::string Ident(std::string_view what) {
    return std::string(Expect(Tok::kIdent, what).text);
  }

  Type ParseType() {
    if (Accept(Tok::kBoolType)) return Type::kBool;
    Expect(Tok::kIntType, "type");
    if (Accept(Tok::kLBracket)) {
      Expect(Tok::kRBracket, "']'");
      return Type::kIntArray;
    }
    return Type::kInt;
  }

  FunctionDecl ParseFunction() {
    FunctionDecl fn;
    fn.location = Expect(Tok::kFn, "'fn'").location;
    fn.name = Ident("function name");
    Expect(Tok::kLParen, "'('");
    if (!At(Tok::kRParen)) {
      do {
        Param p;
        p.name = Ident("parameter name");
        Expect(Tok::kColon, "':'");
        p.type = ParseType();
        fn.params.push_back(std::move(p));
      } while (Accept(Tok::kComma));
    }
    Expect(Tok::kRParen, "')'");
    if (Accept(Tok::kArrow)) fn.return_type = ParseType();
    fn.body = ParseBlock();
    return fn;
  }

  TestCase ParseTest() {
    TestCase test;
    test.location = Expect(Tok::kTest, "'test'").location;
    test.name = Ident("test name");
    test.body = ParseBlock();
    return test;
  }

  std::vector<Stmt> ParseBlock() {
    Expect(Tok::kLBrace, "'{'");
    std::vector<Stmt> block;
    while (!At(Tok::kRBrace)) {
      if (At(Tok::kEnd)) Fail("expected '}'");
      block.push_back(ParseStmt());
    }
    ++pos_;
    return block;
  }

  Stmt ParseIf() {
    Stmt s;
    s.kind = Stmt::Kind::kIf;
    s.location = Expect(Tok::kIf, "'if'").location;
    Expect(Tok::kLParen, "'('");
    s.exprs.push_back(ParseExpr());
    Expect(Tok::kRParen, "')'");
    s.body = ParseBlock();
    if (Accept(Tok::kElse)) {
      s.has_else = true;
      if (At(Tok::kIf)) {
        s.else_body.push_back(ParseIf());
      } else {
        s.else_body = ParseBlock();
      }
    }
    return s;
  }

  Stmt ParseStmt() {
    Stmt s;
    s.location = Cur().location;
    switch (Cur().kind) {
      case Tok::kVar:
        ++pos_;
        s.kind = Stmt::Kind::kVarDecl;
        s.name = Ident("variable name");
        Expect(Tok::kColon, "':'");
        s.decl_type = ParseType();
        Expect(Tok::kAssign, "'=' (variables must be initialized)");
        s.exprs.push_back(ParseExpr());
        Expect(Tok::kSemi, "';'");
        return s;
      case Tok::kIf:
        return ParseIf();
      case Tok::kWhile:
        ++pos_;
        s.kind = Stmt::Kind::kWhile;
        Expect(Tok::kLParen, "'('");
        s.exprs.push_back(ParseExpr());
        Expect(Tok::kRParen, "')'");
        s.body = ParseBlock();
        return s;
      case Tok::kBreak:
        ++pos_;
        s.kind = Stmt::Kind::kBreak;
        Expect(Tok::kSemi, "';'");
        return s;
      case Tok::kReturn:
        ++pos_;
        s.kind = Stmt::Kind::kReturn;
        if (!At(Tok::kSemi)) s.exprs.push_back(ParseExpr());
        Expect(Tok::kSemi, "';'");
        return s;
      case Tok::kAssert:
        ++pos_;
        s.kind = Stmt::Kind::kAssert;
        Expect(Tok::kLParen, "'('");
        s.exprs.push_back(ParseExpr());
        Expect(Tok::kRParen, "')'");
        Expect(Tok::kSemi, "';'");
        return s;
      case Tok::kIdent:
        if (Next().kind == Tok::kAssign) {
          s.kind = Stmt::Kind::kAssign;
          s.name = Ident("variable name");
          ++pos_;
          s.exprs.push_back(ParseExpr());
          Expect(Tok::kSemi, "';'");
          return s;
        }
        break;
      default:
        break;
    }
    Expr e = ParseExpr();
    if (Accept(Tok::kAssign)) {
      if (e.kind != Expr::Kind::kIndex ||
          e.operands[0].kind != Expr::Kind::kVar) {
        throw Error(ErrorCode::kSyntax,
                    "left side of assignment must be a variable or "
                    "array element",
                    e.location);
      }
      s.kind = Stmt::Kind::kStore;
      s.name = e.operands[0].name;
      s.exprs.push_back(std::move(e.operands[1]));
      s.exprs.push_back(ParseExpr());
      Expect(Tok::kSemi, "';'");
      return s;
    }
    if (e.kind != Expr::Kind::kCall) {
      throw Error(ErrorCode::kSyntax, "expression statement must be a call",
                  e.location);
    }
    s.kind = Stmt::Kind::kExpr;
    s.exprs.push_back(std::move(e));
    Expect(Tok::kSemi, "';'");
    return s;
  }

  Expr ParseExpr() {
    Expr cond = ParseBinary(0);
    if (!At(Tok::kQuestion)) return cond;
    SourceLocation loc = Cur().location;
    ++pos_;
    Expr then_value = ParseExpr();
    Expect(Tok::kColon, "':'");
    Expr else_value = ParseExpr();
    Expr e = Expr::Cond(std::move(cond), std::move(then_value),
                        std::move(else_value));
    e.location = loc;
    return e;
  }

  struct BinaryLevel {
    Tok tok;
    BinaryOp op;
    int level;
  };

  static const BinaryLevel* BinaryFor(Tok tok) {
    static constexpr BinaryLevel kLevels[] = {
        {Tok::kOrOr, BinaryOp::kOr, 0},     {Tok::kAndAnd, BinaryOp::kAnd, 1},
        {Tok::kEqEq, BinaryOp::kEq, 2},     {Tok::kNe, BinaryOp::kNe, 2},
        {Tok::kLt, BinaryOp::kLt, 3},       {Tok::kLe, BinaryOp::kLe, 3},
        {Tok::kGt, BinaryOp::kGt, 3},       {Tok::kGe, BinaryOp::kGe, 3},
        {Tok::kPlus, BinaryOp::kAdd, 4},    {Tok::kMinus, BinaryOp::kSub, 4},
        {Tok::kStar, BinaryOp::kMul, 5},    {Tok::kSlash, BinaryOp::kDiv, 5},
        {Tok::kPercent, BinaryOp::kMod, 5},
    };
    for (const auto& l : kLevels) {
      if (l.tok == tok) return &l;
    }
    return nullptr;
  }

  // Precedence climbing; all binary operators are left-associative.
  Expr ParseBinary(int min_level) {
    Expr lhs = ParseUnary();
    while (true) {
      const BinaryLevel* b = BinaryFor(Cur().kind);
      if (b == nullptr || b->level < min_level) return lhs;
      SourceLocation loc = Cur().location;
      ++pos_;
      Expr rhs = ParseBinary(b->level + 1);
      lhs = Expr::Binary(b->op, std::move(lhs), std::move(rhs));
      lhs.location = loc;
    }
  }

  Expr ParseUnary() {
    SourceLocation loc = Cur().location;
    if (Accept(Tok::kBang)) {
      Expr e = Expr::Unary(UnaryOp::kNot, ParseUnary());
      e.location = loc;
      return e;
    }
    if (Accept(Tok::kMinus)) {
      Expr e = Expr::Unary(UnaryOp::kNeg, ParseUnary());
      e.location = loc;
      return e;
    }
    return ParsePostfix();
  }

  Expr ParsePostfix() {
    Expr e = ParsePrimary();
    while (At(Tok::kLBracket)) {
      SourceLocation loc = Cur().location;
      ++pos_;
      Expr index = ParseExpr();
      Expect(Tok::kRBracket, "']'");
      Expr indexed;
      indexed.kind = Expr::Kind::kIndex;
      indexed.location = loc;
      indexed.operands.push_back(std::move(e));
      indexed.operands.push_back(std::move(index));
      e = std::move(indexed);
    }
    return e;
  }

  Expr ParsePrimary() {
    const Token& tok = Cur();
    SourceLocation loc = tok.location;
    Expr e;
    switch (tok.kind) {
      case Tok::kInt: {
        std::int64_t value = 0;
        auto [end, ec] = std::from_chars(
            tok.text.data(), tok.text.data() + tok.text.size(), value);
        if (ec != std::errc() || end != tok.text.data() + tok.text.size()) {
          throw Error(ErrorCode::kSyntax,
                      "integer literal out of range: " +
                          std::string(tok.text),
                      loc);
        }
        ++pos_;
        e = Expr::IntLit(value);
        break;
      }
      case Tok::kTrue:
      case Tok::kFalse:
        e = Expr::BoolLit(tok.kind == Tok::kTrue);
        ++pos_;
        break;
      case Tok::kLBracket:
        ++pos_;
        e.kind = Expr::Kind::kArrayLit;
        if (!At(Tok::kRBracket)) {
          do {
            e.operands.push_back(ParseExpr());
          } while (Accept(Tok::kComma));
        }
        Expect(Tok::kRBracket, "']'");
        break;
      case Tok::kLen:
        ++pos_;
        Expect(Tok::kLParen, "'('");
        e = Expr::Len(ParseExpr());
        Expect(Tok::kRParen, "')'");
        break;
      case Tok::kIdent:
        ++pos_;
        if (Accept(Tok::kLParen)) {
          e.kind = Expr::Kind::kCall;
          e.name = std::string(tok.text);
          if (!At(Tok::kRParen)) {
            do {
              e.operands.push_back(ParseExpr());
            } while (Accept(Tok::kComma));
          }
          Expect(Tok::kRParen, "')'");
        } else {
          e = Expr::Var(std::string(tok.text));
        }
        break;
      case Tok::kLParen:
        ++pos_;
        e = ParseExpr();
        Expect(Tok::kRParen, "')'");
        return e;
      default:
        Fail("expected expression");
    }
    e.location = loc;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program ParseUnchecked(std::string_view source) {
  Parser parser(Lexer(source).Run());
  Program program = parser.ParseProgram();
  AssignLoopIds(program);
  return program;
}

Program Parse(std::string_view source) {
  Program program = ParseUnchecked(source);
  Check(program);
  return program;
}

Expr ParseExpression(std::string_view source) {
  Parser parser(Lexer(source).Run());
  return parser.ParseStandaloneExpr();
}

}  // namespace loopfix
