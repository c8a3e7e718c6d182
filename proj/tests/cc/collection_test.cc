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

#include <algorithm>
#include <gtest/gtest.h>

#include "loopfix/angelic.h"
#include "loopfix/collection.h"
#include "loopfix/detection.h"
#include "loopfix/instrument.h"
#include "loopfix/parser.h"
#include "test_support.h"

namespace loopfix {
namespace {

using testing::CodeOf;
using testing::LoadCorpus;

SnapshotField Field(const std::string& name, Type type) {
  return SnapshotField{name, type, ParseExpression(name),
                       SnapshotField::Origin::kVariable};
}

RawPair Raw(std::vector<NamedScalar> inputs, bool output,
            std::string test = "t", std::uint64_t iteration = 0) {
  return RawPair{std::move(inputs), output, Provenance{test, 1, iteration}};
}

NamedScalar Int(const std::string& name, std::int64_t v) {
  return NamedScalar{name, Type::kInt, v};
}

std::vector<std::string> Names(const PairSet& set) {
  std::vector<std::string> names;
  for (const auto& in : set.schema) names.push_back(in.name);
  return names;
}

TEST(PairSetTest, DropsDedupesPrunesAndEnriches) {
  SnapshotSchema fields = {Field("i", Type::kInt), Field("n", Type::kInt),
                           Field("k", Type::kInt), Field("gone", Type::kInt)};
  std::vector<RawPair> raw = {
      Raw({Int("i", 0), Int("n", 2), Int("k", 7), Int("gone", 1)}, true, "a", 0),
      Raw({Int("i", 1), Int("n", 2), Int("k", 7)}, true, "a", 1),
      Raw({Int("i", 2), Int("n", 2), Int("k", 7)}, false, "a", 2),
      Raw({Int("i", 1), Int("n", 2), Int("k", 7)}, true, "b", 1),
  };
  PairSet set = MakePairSet(fields, raw);
  EXPECT_EQ(set.raw_count, 4u);
  EXPECT_EQ(set.dropped, (std::vector<std::string>{"gone"}));
  EXPECT_EQ(set.pruned, (std::vector<std::string>{"n", "k"}));
  EXPECT_EQ(Names(set), (std::vector<std::string>{"i", "const$m1", "const$0",
                                                  "const$1"}));
  ASSERT_EQ(set.pairs.size(), 3u);
  EXPECT_EQ(set.pairs[1].provenance.test, "a");
  EXPECT_EQ(set.pairs[2].inputs, (std::vector<std::int64_t>{2, -1, 0, 1}));
  EXPECT_FALSE(set.pairs[2].output);
  EXPECT_EQ(set.context_items(), 3u);
  EXPECT_EQ(set.context_size(), 5u);
}

TEST(PairSetTest, ConflictingOutputsBothKept) {
  SnapshotSchema fields = {Field("i", Type::kInt)};
  PairSet set = MakePairSet(
      fields, {Raw({Int("i", 3)}, true), Raw({Int("i", 3)}, false),
               Raw({Int("i", 4)}, false)});
  EXPECT_EQ(set.pairs.size(), 3u);
}

TEST(PairSetTest, EmptyIsAnError) {
  EXPECT_EQ(CodeOf([] { MakePairSet({}, {}); }),
            ErrorCode::kEmptySpecification);
}

TEST(PairSetTest, TextRoundTrip) {
  SnapshotSchema fields = {Field("i", Type::kInt), Field("flag", Type::kBool)};
  PairSet set = MakePairSet(
      fields,
      {Raw({Int("i", -4), NamedScalar{"flag", Type::kBool, 1}}, true, "x", 0),
       Raw({Int("i", 5), NamedScalar{"flag", Type::kBool, 0}}, false, "y", 3)});
  std::string text = SerializePairSet(set);
  EXPECT_NE(text.find("@input flag bool flag\n"), std::string::npos);
  EXPECT_NE(text.find("@const const$m1 int -1\n"), std::string::npos);
  EXPECT_NE(text.find("i=5 flag=false -> false  # y 1 3\n"), std::string::npos);
  PairSet back = ParsePairSet(text);
  EXPECT_EQ(back.schema, set.schema);
  ASSERT_EQ(back.pairs.size(), set.pairs.size());
  for (std::size_t k = 0; k < set.pairs.size(); ++k) {
    EXPECT_EQ(back.pairs[k].inputs, set.pairs[k].inputs);
    EXPECT_EQ(back.pairs[k].output, set.pairs[k].output);
    EXPECT_EQ(back.pairs[k].provenance.iteration,
              set.pairs[k].provenance.iteration);
  }
  EXPECT_EQ(SerializePairSet(back), text);
}

TEST(PairSetTest, ParseAddsConstantsWhenAbsent) {
  PairSet set = ParsePairSet("@input x int x\nx=1 -> true\nx=1 -> true\n");
  EXPECT_EQ(Names(set), (std::vector<std::string>{"x", "const$m1", "const$0",
                                                  "const$1"}));
  EXPECT_EQ(set.pairs.size(), 1u);
  EXPECT_EQ(set.raw_count, 2u);
}

TEST(PairSetTest, ParseErrorsCarryLine) {
  struct Case {
    const char* text;
    int line;
  };
  for (const Case& c : {
           Case{"@input x int x\nx=1\n", 2},
           Case{"@input x float x\n", 1},
           Case{"@input x int x\n\ny=1 -> true\n", 3},
           Case{"@input x int x\nx=1 -> maybe\n", 2},
           Case{"@input x int x\n -> true\n", 2},
           Case{"@input x int x\nx=1 -> true\n@input y int y\n", 3},
           Case{"@const c int one\n", 1},
       }) {
    try {
      ParsePairSet(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSyntax) << c.text;
      EXPECT_EQ(e.location().line, c.line) << c.text;
    }
  }
}

TEST(SpecificationTest, ClearPairsMatchHandTrace) {
  Program p = Instrument(LoadCorpus("comparison.lp"));
  HangingReport report = DetectInfiniteLoops(p, 100000);
  LoopId loop{"clear", 0};
  AngelicRecord record = FindThresholds(loop, p, report);
  Specification spec = BuildSpecification(loop, p, report, record);
  // Guard `true` is constant and pruned; i and len(a) remain.
  EXPECT_EQ(spec.pairs.pruned, (std::vector<std::string>{"guard$orig"}));
  ASSERT_EQ(spec.pairs.IndexOf("len$a"), 0);
  ASSERT_EQ(spec.pairs.IndexOf("i"), 1);
  // (len, i) -> stay, traced by hand: [1,2] stops at i=2; [4,-1,3] returns
  // inside the body at i=1; [7,8,9] stops at i=3.
  std::vector<std::tuple<std::int64_t, std::int64_t, bool>> want = {
      {2, 0, true},  {2, 1, true},  {2, 2, false}, {3, 0, true},
      {3, 1, true},  {3, 2, true},  {3, 3, false},
  };
  ASSERT_EQ(spec.pairs.pairs.size(), want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    const ContextPair& pair = spec.pairs.pairs[k];
    EXPECT_EQ(pair.inputs[0], std::get<0>(want[k])) << k;
    EXPECT_EQ(pair.inputs[1], std::get<1>(want[k])) << k;
    EXPECT_EQ(pair.output, std::get<2>(want[k])) << k;
  }
  ASSERT_EQ(spec.runs.size(), 3u);
  EXPECT_EQ(spec.runs[0].limit, 2u);
  EXPECT_FALSE(spec.runs[1].limit.has_value());
  EXPECT_EQ(spec.pairs.raw_count, 9u);
}

TEST(SpecificationTest, OriginalGuardAndSubvaluesCollected) {
  Program p = Instrument(Parse(R"(
fn f(a: int[], n: int) -> int {
  var i: int = 0;
  while (i < n && a[i] > 0) { i = i + 1; }
  return i;
}
test finite { assert(f([1, 2, 0], 3) == 2); }
test short { assert(f([5, 5], 2) == 2); }
)"));
  HangingReport report = DetectInfiniteLoops(p, 1000);
  EXPECT_TRUE(report.empty());
  LoopId loop{"f", 0};
  AngelicRecord none;
  none.loop = loop;
  Specification spec = BuildSpecification(loop, p, report, none);
  EXPECT_GE(spec.pairs.IndexOf("guard$orig"), 0);
  ASSERT_GE(spec.pairs.IndexOf("sub$0"), 0);
  EXPECT_EQ(spec.pairs.schema[spec.pairs.IndexOf("sub$0")].source, "i < n");
  // a[i] is out of bounds on the final check of `short`.
  EXPECT_EQ(spec.pairs.IndexOf("sub$1"), -1);
  EXPECT_NE(std::find(spec.pairs.dropped.begin(), spec.pairs.dropped.end(),
                      "sub$1"),
            spec.pairs.dropped.end());
}

TEST(SpecificationTest, UnknownLoop) {
  Program p = Instrument(LoadCorpus("countdown.lp"));
  HangingReport report = DetectInfiniteLoops(p, 1000);
  AngelicRecord none;
  EXPECT_EQ(CodeOf([&] { BuildSpecification({"nope", 0}, p, report, none); }),
            ErrorCode::kUsage);
}

}  // namespace
}  // namespace loopfix
