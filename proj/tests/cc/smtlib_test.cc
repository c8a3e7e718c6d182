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


#include "loopfix/smtlib.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "loopfix/corpus.h"
#include "loopfix/guard_expr.h"
#include "loopfix/repair.h"
#include "loopfix/synthesis.h"
#include "test_support.h"

namespace loopfix {
namespace {

using testing::CodeOf;
using testing::CorpusPath;

constexpr char kFlagPairs[] = R"(
@input sum int sum
@input i int i
@input more bool more
sum=0 i=0 more=true -> true
sum=1 i=1 more=true -> true
sum=3 i=2 more=false -> false
)";

bool HaveSolver() {
  return std::system("z3 -version > /dev/null 2>&1") == 0;
}

Deadline Forever() { return Deadline::max(); }

TEST(SmtlibTest, StageComponentsRepeatEachKind) {
  EXPECT_TRUE(StageComponents(0, 1).empty());
  std::vector<GuardOp> one = StageComponents(2, 1);
  ASSERT_EQ(one.size(), 7u);
  EXPECT_EQ(one.front(), GuardOp::kGt);
  EXPECT_EQ(one.back(), GuardOp::kAnd);
  std::vector<GuardOp> two = StageComponents(2, 2);
  ASSERT_EQ(two.size(), 14u);
  EXPECT_EQ(std::count(two.begin(), two.end(), GuardOp::kNot), 2);
}

TEST(SmtlibTest, DocumentDeclaresEveryComponent) {
  PairSet set = ParsePairSet(kFlagPairs);
  std::string doc = EncodeConstraints(set, 2);
  EXPECT_NE(doc.find("(check-sat)"), std::string::npos);
  EXPECT_NE(doc.find("root"), std::string::npos);
  for (int c = 0; c < 7; ++c) {
    EXPECT_NE(doc.find("act_" + std::to_string(c)), std::string::npos) << c;
  }
  EXPECT_EQ(doc.find("act_7 "), std::string::npos);
  EXPECT_EQ(EncodeConstraints(set, 2), doc);
}

TEST(SmtlibTest, DecodeHandWrittenModel) {
  PairSet set = ParsePairSet(kFlagPairs);
  int n = static_cast<int>(set.schema.size());
  int i = set.IndexOf("i");
  int zero = set.IndexOf("const$0");
  std::string model = "((root " + std::to_string(n) + ") (act_0 true) (sel_0_0 " +
                      std::to_string(i) + ") (sel_0_1 " +
                      std::to_string(zero) + "))";
  GuardExpr g = DecodeModel(set, 1, 1, model);
  EXPECT_EQ(GuardToString(g, set.schema), "i > const$0");
}

TEST(SmtlibTest, DecodeRejectsMalformedModels) {
  PairSet set = ParsePairSet(kFlagPairs);
  EXPECT_EQ(CodeOf([&] { DecodeModel(set, 1, 1, "((act_0 true))"); }),
            ErrorCode::kInternal);
  EXPECT_EQ(CodeOf([&] { DecodeModel(set, 1, 1, "((root 99))"); }),
            ErrorCode::kInternal);
  int n = static_cast<int>(set.schema.size());
  EXPECT_EQ(CodeOf([&] {
              DecodeModel(set, 1, 1,
                          "((root " + std::to_string(n) + ") (act_0 false))");
            }),
            ErrorCode::kInternal);
  // An int input cannot be the guard.
  EXPECT_EQ(CodeOf([&] { DecodeModel(set, 1, 1, "((root 0))"); }),
            ErrorCode::kInternal);
}

TEST(SmtlibTest, MissingSolverIsAnIoError) {
  PairSet set = ParsePairSet(kFlagPairs);
  EXPECT_EQ(CodeOf([&] {
              RunSolver("/nonexistent/solver", EncodeConstraints(set, 0));
            }),
            ErrorCode::kIo);
  EXPECT_EQ(CodeOf([&] {
              SolveStageSmt(set, 0, 1, "/nonexistent/solver", Forever());
            }),
            ErrorCode::kIo);
}

TEST(SmtlibTest, SolverFindsFlagGuard) {
  if (!HaveSolver()) GTEST_SKIP() << "z3 not on PATH";
  PairSet set = ParsePairSet(kFlagPairs);
  std::optional<GuardExpr> g = SolveStageSmt(set, 0, 1, "z3 -smt2 -in", Forever());
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(GuardToString(*g, set.schema), "more");
}

TEST(SmtlibTest, SolverReportsUnsat) {
  if (!HaveSolver()) GTEST_SKIP() << "z3 not on PATH";
  // x == 1 is not a single input and there are no comparisons at stage 0.
  PairSet set = ParsePairSet(R"(
@input x int x
x=0 -> false
x=1 -> true
x=2 -> false
)");
  EXPECT_FALSE(SolveStageSmt(set, 0, 1, "z3 -smt2 -in", Forever()).has_value());
  std::optional<GuardExpr> g = SolveStageSmt(set, 1, 1, "z3 -smt2 -in", Forever());
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(CheckCandidate(*g, set));
}

// Both engines must agree on which stages are feasible for every corpus
// specification.
TEST(SmtlibTest, BackendsAgreeOnCorpusStages) {
  if (!HaveSolver()) GTEST_SKIP() << "z3 not on PATH";
  std::vector<CorpusCase> cases = LoadManifest(CorpusPath("manifest.json"));
  int checked = 0;
  for (const CorpusCase& c : cases) {
    if (c.expect.error) continue;
    Patch patch = Repair(Parse(ReadTextFile(c.file)));
    int found = patch.stats.stage;
    for (int stage = 0; stage <= found; ++stage) {
      bool enumerative =
          SolveStageEnumerative(patch.pairs, stage, {}, Forever()).has_value();
      std::optional<GuardExpr> smt =
          SolveStageSmt(patch.pairs, stage, 1, "z3 -smt2 -in", Forever());
      EXPECT_EQ(enumerative, stage == found) << c.name << " stage " << stage;
      EXPECT_EQ(smt.has_value(), enumerative) << c.name << " stage " << stage;
      if (smt) EXPECT_TRUE(CheckCandidate(*smt, patch.pairs)) << c.name;
    }
    ++checked;
  }
  EXPECT_GE(checked, 9);
}

}  // namespace
}  // namespace loopfix
