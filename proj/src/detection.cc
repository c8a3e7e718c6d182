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

#include "loopfix/detection.h"

#include <algorithm>

#include "loopfix/instrument.h"

namespace loopfix {

std::vector<LoopId> HangingReport::Loops() const {
  std::vector<LoopId> loops;
  for (const auto& e : entries) {
    if (std::find(loops.begin(), loops.end(), e.loop) == loops.end()) {
      loops.push_back(e.loop);
    }
  }
  return loops;
}

std::vector<HangingEntry> HangingReport::EntriesFor(const LoopId& loop) const {
  std::vector<HangingEntry> out;
  for (const auto& e : entries) {
    if (e.loop == loop) out.push_back(e);
  }
  return out;
}

const std::vector<std::string>& HangingReport::TestsOf(
    const LoopId& loop) const {
  static const std::vector<std::string> kNone;
  auto it = tests_of.find(loop);
  return it == tests_of.end() ? kNone : it->second;
}

HangingReport DetectInfiniteLoops(const Program& instrumented,
                                  const std::vector<const TestCase*>& tests,
                                  std::uint64_t global_cap, int jobs) {
  if (!IsInstrumented(instrumented) && !LoopsOf(instrumented).empty()) {
    throw Error(ErrorCode::kUsage,
                "detection requires an instrumented program");
  }
  if (global_cap < 1) {
    throw Error(ErrorCode::kUsage, "global cap must be at least 1");
  }
  MonitorConfig config;
  config.global_cap = global_cap;
  HangingReport report;
  report.global_cap = global_cap;
  report.runs = RunSuite(instrumented, tests, config, jobs);
  for (const auto& [test, run] : report.runs) {
    for (const auto& key : run.trace.exceeding) {
      report.entries.push_back(HangingEntry{test, key.loop, key.rank});
    }
    for (const auto& [loop, telemetry] : run.trace.loops) {
      if (!telemetry.iterations.empty()) report.tests_of[loop].push_back(test);
    }
  }
  return report;
}

HangingReport DetectInfiniteLoops(const Program& instrumented,
                                  std::uint64_t global_cap, int jobs) {
  std::vector<const TestCase*> tests;
  for (const auto& t : instrumented.tests) tests.push_back(&t);
  return DetectInfiniteLoops(instrumented, tests, global_cap, jobs);
}

}  // namespace loopfix
