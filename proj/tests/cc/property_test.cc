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

#include <string>

#include "loopfix/instrument.h"
#include "loopfix/interpreter.h"
#include "loopfix/parser.h"
#include "loopfix/repair.h"
#include "program_gen.h"
#include "test_support.h"

namespace loopfix {
namespace {

using testing::SeededBug;
using testing::SeededBugGen;
using testing::TerminatingProgramGen;

void ExpectSameRun(const TestRun& plain, const TestRun& inst,
                   const std::string& where) {
  EXPECT_EQ(plain.outcome.status, inst.outcome.status) << where;
  EXPECT_EQ(plain.outcome.message, inst.outcome.message) << where;
  ASSERT_EQ(plain.trace.loops.size(), inst.trace.loops.size()) << where;
  for (const auto& [loop, tel] : plain.trace.loops) {
    const LoopTelemetry& other = inst.trace.loops.at(loop);
    EXPECT_FALSE(tel.monitored) << where;
    EXPECT_TRUE(other.monitored) << where;
    EXPECT_EQ(tel.iterations, other.iterations) << where << " " << loop.ToString();
    EXPECT_EQ(tel.exits, other.exits) << where << " " << loop.ToString();
  }
}

TEST(PropertyTest, InstrumentationIsTransparent) {
  std::uint64_t iterations = 0;
  int outcomes[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::string source = TerminatingProgramGen(seed).Generate();
    Program plain = Parse(source);
    Program inst = Instrument(plain);
    for (const TestCase& t : plain.tests) {
      TestRun a = RunTest(plain, t, {});
      TestRun b = RunTest(inst, t.name, {});
      ExpectSameRun(a, b, "seed " + std::to_string(seed) + " " + t.name);
      ++outcomes[static_cast<int>(a.outcome.status)];
      for (const auto& [loop, tel] : a.trace.loops) {
        for (std::uint64_t n : tel.iterations) iterations += n;
      }
    }
  }
  EXPECT_GT(iterations, 1000u);
  EXPECT_GT(outcomes[static_cast<int>(TestStatus::kPass)], 50);
  EXPECT_EQ(outcomes[static_cast<int>(TestStatus::kCapExceeded)], 0);
}

TEST(PropertyTest, GeneratedProgramsRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Program p = Parse(TerminatingProgramGen(seed).Generate());
    EXPECT_EQ(Uninstrument(Instrument(p)), p) << seed;
  }
}

// A synthesized guard that fits every pair must pass validation.
TEST(PropertyTest, SynthesisSuccessImpliesValidation) {
  int repaired = 0;
  int validation_failed = 0;
  int other = 0;
  RepairConfig config;
  config.global_cap = 20'000;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SeededBug bug = SeededBugGen(seed).Generate();
    Program p = Parse(bug.source);
    try {
      RepairOutcome out = RepairAll(p, config);
      EXPECT_TRUE(out.final_validation.all_pass) << bug.source;
      ++repaired;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kValidationFailed) {
        ++validation_failed;
        ADD_FAILURE() << e.what() << "\n" << bug.source;
      } else {
        ++other;
      }
    }
  }
  EXPECT_EQ(validation_failed, 0);
  EXPECT_GE(repaired, 20) << other << " cases ended with other errors";
}

}  // namespace
}  // namespace loopfix
