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

#include <gtest/gtest.h>

#include <random>

#include "loopfix/detection.h"
#include "loopfix/instrument.h"
#include "loopfix/parser.h"
#include "test_support.h"

namespace loopfix {
namespace {

using testing::CodeOf;
using testing::LoadCorpus;

constexpr char kSpin[] = R"(
fn spin(n: int) -> int {
  var i: int = 0;
  while (i < n) { i = i + 1; }
  return i;
}
test below { assert(spin(3) == 3); assert(spin(99) == 99); }
test exact { assert(spin(100) == 100); }
test above { assert(spin(1) == 1); assert(spin(2) == 2); assert(spin(101) == 101); }
test idle { assert(1 + 1 == 2); }
)";

TEST(DetectionTest, BoundaryAroundCap) {
  Program p = Instrument(Parse(kSpin));
  HangingReport report = DetectInfiniteLoops(p, 100);
  ASSERT_EQ(report.entries.size(), 1u);
  EXPECT_EQ(report.entries[0].test, "above");
  EXPECT_EQ(report.entries[0].loop, (LoopId{"spin", 0}));
  EXPECT_EQ(report.entries[0].rank, 3u);
  EXPECT_EQ(report.global_cap, 100u);
}

TEST(DetectionTest, TestsOfListsReachingTests) {
  Program p = Instrument(Parse(kSpin));
  HangingReport report = DetectInfiniteLoops(p, 100);
  EXPECT_EQ(report.TestsOf({"spin", 0}),
            (std::vector<std::string>{"below", "exact", "above"}));
  EXPECT_TRUE(report.TestsOf({"other", 0}).empty());
  EXPECT_EQ(report.Loops(), (std::vector<LoopId>{{"spin", 0}}));
}

TEST(DetectionTest, FlaggedIffIterationsExceedCap) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> n(1, 40);
  for (int round = 0; round < 30; ++round) {
    int iterations = n(rng);
    int cap = n(rng);
    std::string src =
        "fn spin(n: int) { var i: int = 0; while (i < n) { i = i + 1; } }\n"
        "test t { spin(" +
        std::to_string(iterations) + "); }";
    HangingReport report =
        DetectInfiniteLoops(Instrument(Parse(src)), cap);
    EXPECT_EQ(!report.empty(), iterations > cap)
        << iterations << " iterations, cap " << cap;
  }
}

TEST(DetectionTest, SeveralLoopsInReportOrder) {
  Program p = Instrument(Parse(R"(
fn a() { while (true) {} }
fn b() { var i: int = 0; while (i >= 0) { i = i + 1; } }
test first { b(); }
test second { a(); }
test both { a(); b(); }
)"));
  HangingReport report = DetectInfiniteLoops(p, 50);
  ASSERT_EQ(report.entries.size(), 4u);
  EXPECT_EQ(report.Loops(), (std::vector<LoopId>{{"b", 0}, {"a", 0}}));
  EXPECT_EQ(report.EntriesFor({"a", 0}).size(), 2u);
}

TEST(DetectionTest, ParallelMatchesSerial) {
  Program p = Instrument(LoadCorpus("binary_search.lp"));
  HangingReport serial = DetectInfiniteLoops(p, 1000, 1);
  HangingReport parallel = DetectInfiniteLoops(p, 1000, 4);
  EXPECT_EQ(serial.entries, parallel.entries);
  EXPECT_EQ(serial.tests_of, parallel.tests_of);
}

TEST(DetectionTest, RejectsBadInput) {
  Program plain = Parse(kSpin);
  EXPECT_EQ(CodeOf([&] { DetectInfiniteLoops(plain, 100); }),
            ErrorCode::kUsage);
  Program instrumented = Instrument(plain);
  EXPECT_EQ(CodeOf([&] { DetectInfiniteLoops(instrumented, 0); }),
            ErrorCode::kUsage);
  // Programs without loops need no instrumentation.
  EXPECT_TRUE(DetectInfiniteLoops(Parse("test t {}"), 10).empty());
}

TEST(DetectionTest, HealthyCorpusProgramHasNoHang) {
  EXPECT_TRUE(
      DetectInfiniteLoops(Instrument(LoadCorpus("healthy.lp")), 1000000)
          .empty());
}

}  // namespace
}  // namespace loopfix
