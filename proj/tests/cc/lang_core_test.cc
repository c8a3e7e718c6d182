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

#include <functional>

#include <gtest/gtest.h>

#include "loopfix/ast.h"
#include "loopfix/error.h"
#include "loopfix/parser.h"
#include "loopfix/printer.h"

namespace loopfix {
namespace {

constexpr char kClear[] =
    "fn clear(a: int[]) { var i: int = 0; while (i < len(a)) { a[i] = 0; "
    "i = i + 1; } }";

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(ParseTest, ClearHasOneLoop) {
  Program p = Parse(kClear);
  ASSERT_EQ(p.functions.size(), 1u);
  std::vector<LoopId> loops = LoopsOf(p);
  ASSERT_EQ(loops.size(), 1u);
  EXPECT_EQ(loops[0], (LoopId{"clear", 0}));
  EXPECT_EQ(loops[0].ToString(), "clear#0");
  EXPECT_EQ(LoopId::FromString("clear#0"), loops[0]);
}

TEST(ParseTest, EmptySource) {
  Program p = Parse("");
  EXPECT_TRUE(p.functions.empty());
  EXPECT_TRUE(p.tests.empty());
  EXPECT_TRUE(LoopsOf(p).empty());
}

TEST(ParseTest, BreakOutsideLoop) {
  try {
    Parse("fn f() { break; }");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kType);
    EXPECT_NE(std::string(e.what()).find("break outside loop"),
              std::string::npos);
    EXPECT_EQ(e.location().line, 1);
  }
}

TEST(ParseTest, SyntaxErrorCarriesPosition) {
  try {
    Parse("fn f() {\n  var x: int = ;\n}");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    EXPECT_EQ(e.location().line, 2);
    EXPECT_EQ(e.location().column, 16);
  }
}

TEST(ParseTest, TypeErrorQuotesExpression) {
  try {
    Parse("fn f(a: int[]) { var b: bool = a + 1; }");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kType);
    EXPECT_NE(e.detail().find("'a'"), std::string::npos) << e.detail();
  }
}

TEST(ParseTest, RejectsUndeclaredAndShadowed) {
  EXPECT_EQ(CodeOf([] { Parse("fn f() { x = 1; }"); }), ErrorCode::kType);
  EXPECT_EQ(CodeOf([] {
              Parse("fn f(x: int) { if (true) { var x: int = 1; } }");
            }),
            ErrorCode::kType);
  EXPECT_EQ(CodeOf([] { Parse("fn f() {} fn f() {}"); }), ErrorCode::kType);
  EXPECT_EQ(CodeOf([] { Parse("fn f() -> int { return true; }"); }),
            ErrorCode::kType);
  EXPECT_EQ(CodeOf([] { Parse("fn f() { g(); }"); }), ErrorCode::kType);
  EXPECT_EQ(CodeOf([] { Parse("fn f() { 1 + 2; }"); }), ErrorCode::kSyntax);
}

TEST(ParseTest, NestedLoopsPreOrder) {
  Program p = Parse(
      "fn f(n: int) { var i: int = 0; while (i < n) { var j: int = 0; "
      "while (j < i) { j = j + 1; } i = i + 1; } while (false) {} }");
  std::vector<LoopId> loops = LoopsOf(p);
  ASSERT_EQ(loops.size(), 3u);
  EXPECT_EQ(loops[0].index, 0);
  EXPECT_EQ(loops[1].index, 1);
  EXPECT_EQ(loops[2].index, 2);
  const Stmt* inner = FindLoop(p, loops[1]);
  ASSERT_NE(inner, nullptr);
  EXPECT_EQ(PrintExpr(inner->guard()), "j < i");
}

TEST(ParseTest, NoLoops) {
  EXPECT_TRUE(LoopsOf(Parse("fn f() -> int { return 1; }")).empty());
}

TEST(ParseTest, LoopsInTestsAfterFunctions) {
  Program p = Parse(
      "test t { var i: int = 0; while (i < 3) { i = i + 1; } }"
      "fn g() { while (false) {} }");
  std::vector<LoopId> loops = LoopsOf(p);
  ASSERT_EQ(loops.size(), 2u);
  EXPECT_EQ(loops[0], (LoopId{"g", 0}));
  EXPECT_EQ(loops[1], (LoopId{"t", 0}));
}

TEST(ParseTest, PrecedenceAndAssociativity) {
  EXPECT_EQ(PrintExpr(ParseExpression("1 - 2 - 3")), "1 - 2 - 3");
  EXPECT_EQ(PrintExpr(ParseExpression("1 - (2 - 3)")), "1 - (2 - 3)");
  EXPECT_EQ(PrintExpr(ParseExpression("(1 + 2) * 3")), "(1 + 2) * 3");
  EXPECT_EQ(PrintExpr(ParseExpression("a || b && c")), "a || b && c");
  EXPECT_EQ(PrintExpr(ParseExpression("(a || b) && c")), "(a || b) && c");
  EXPECT_EQ(PrintExpr(ParseExpression("!(a < b)")), "!(a < b)");
  EXPECT_EQ(PrintExpr(ParseExpression("-(-x)")), "-(-x)");
  EXPECT_EQ(PrintExpr(ParseExpression("c ? x : y + 1")), "c ? x : y + 1");
  EXPECT_EQ(PrintExpr(ParseExpression("(c ? x : y) + 1")), "(c ? x : y) + 1");
  EXPECT_EQ(PrintExpr(ParseExpression("a[i + 1] % len(a)")),
            "a[i + 1] % len(a)");
}

TEST(ParseTest, Comments) {
  Program p = Parse(
      "// leading\nfn f() { /* block\n comment */ var x: int = 1; }\n");
  EXPECT_EQ(p.functions.size(), 1u);
}

const char* const kRoundTrip[] = {
    kClear,
    "fn f(a: int[], n: int) -> bool { var ok: bool = true; var i: int = 0;"
    " while (i < n && ok) { if (a[i] < 0) { ok = false; } else if (a[i] == 0)"
    " { break; } else { i = i + 1; } } return ok; }"
    " test t1 { var a: int[] = [1, -2, 3]; assert(!f(a, 3)); }",
    "fn g(x: int) -> int { while (true) { if (x > 10) { return x; } "
    "x = x * 2 + -1; } }\n"
    "test t2 { assert(g(3) == 17); var b: bool = 1 < 2 == true; "
    "assert(b); }",
    "fn h(n: int) { while (n != 0) { n = n / 2 - n % 3; } }",
    "fn k(c: bool, x: int) -> int { return c ? x : -x; }",
};

TEST(PrintTest, RoundTrip) {
  for (const char* source : kRoundTrip) {
    Program p = Parse(source);
    std::string text = PrettyPrint(p);
    Program q = Parse(text);
    EXPECT_EQ(p, q) << text;
    EXPECT_EQ(PrettyPrint(q), text);
    EXPECT_EQ(LoopsOf(p), LoopsOf(q));
  }
}

TEST(PrintTest, Deterministic) {
  for (const char* source : kRoundTrip) {
    EXPECT_EQ(Parse(source), Parse(source));
  }
}

TEST(ReplaceGuardTest, Identity) {
  Program p = Parse(kClear);
  Program q = ReplaceGuard(p, {"clear", 0}, ParseExpression("i < len(a)"));
  EXPECT_EQ(p, q);
}

TEST(ReplaceGuardTest, OnlyGuardChanges) {
  Program p = Parse(kClear);
  Program q = ReplaceGuard(p, {"clear", 0}, ParseExpression("true"));
  EXPECT_FALSE(p == q);
  EXPECT_EQ(LoopsOf(p), LoopsOf(q));
  EXPECT_EQ(PrintExpr(FindLoop(q, {"clear", 0})->guard()), "true");
  Program back = ReplaceGuard(q, {"clear", 0}, ParseExpression("i < len(a)"));
  EXPECT_EQ(p, back);
}

TEST(ReplaceGuardTest, Errors) {
  Program p = Parse(kClear);
  EXPECT_EQ(CodeOf([&] { ReplaceGuard(p, {"clear", 0}, ParseExpression("a")); }),
            ErrorCode::kType);
  EXPECT_EQ(CodeOf([&] {
              ReplaceGuard(p, {"clear", 0}, ParseExpression("j < 3"));
            }),
            ErrorCode::kType);
  EXPECT_EQ(CodeOf([&] { ReplaceGuard(p, {"clear", 1}, ParseExpression("true")); }),
            ErrorCode::kUsage);
}

}  // namespace
}  // namespace loopfix
