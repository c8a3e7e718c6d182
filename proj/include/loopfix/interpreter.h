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

#ifndef LOOPFIX_INTERPRETER_H_
#define LOOPFIX_INTERPRETER_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopfix/ast.h"
#include "loopfix/monitor.h"

namespace loopfix {

enum class TestStatus : std::uint8_t {
  kPass, kAssertionFailure, kRuntimeError, kCapExceeded,
};

std::string_view TestStatusName(TestStatus status);

struct TestOutcome {
  TestStatus status = TestStatus::kPass;
  std::string message;
  // kCapExceeded: the first execution that hit the global cap.
  std::optional<InvocationKey> hang;
  // How the test ended once forced breaks let it continue. Differs from
  // status only for kCapExceeded.
  TestStatus completion = TestStatus::kPass;

  bool passed() const { return status == TestStatus::kPass; }
};

// Per-loop record; index r-1 describes the execution with rank r.
struct LoopTelemetry {
  bool monitored = false;
  std::vector<std::uint64_t> iterations;
  std::vector<ExitNature> exits;

  friend bool operator==(const LoopTelemetry&, const LoopTelemetry&) = default;
};

struct ExecutionTrace {
  std::map<LoopId, LoopTelemetry> loops;
  // Pairs from the collection target, in execution order.
  std::vector<CollectedPair> pairs;
  // Executions that hit the global cap, in the order they happened.
  std::vector<InvocationKey> exceeding;

  bool Reaches(const LoopId& loop) const { return loops.contains(loop); }
  std::uint64_t Invocations(const LoopId& loop) const;
  // nullopt if the execution did not happen.
  std::optional<std::uint64_t> IterationRecord(const LoopId& loop,
                                               std::uint64_t rank) const;
  std::optional<ExitNature> Exit(const LoopId& loop,
                                 std::uint64_t rank) const;
};

struct RunOptions {
  int max_call_depth = 10'000;
  std::size_t stack_bytes = std::size_t{256} << 20;
};

struct TestRun {
  TestOutcome outcome;
  ExecutionTrace trace;
};

// Runs one test in a fresh interpreter on its own thread. Loops of kind
// kMonitoredWhile are controlled by per-run monitors; plain loops that reach
// config.global_cap iterations abort the test with kCapExceeded.
TestRun RunTest(const Program& program, const TestCase& test,
                const MonitorConfig& config, const RunOptions& options = {});

// Throws kUsage for an unknown test.
TestRun RunTest(const Program& program, std::string_view test_name,
                const MonitorConfig& config, const RunOptions& options = {});

struct NamedRun {
  std::string test;
  TestRun run;
};

// Results in the order of `tests`, independent of `jobs`.
std::vector<NamedRun> RunSuite(const Program& program,
                               const std::vector<const TestCase*>& tests,
                               const MonitorConfig& config, int jobs = 1,
                               const RunOptions& options = {});

std::vector<NamedRun> RunSuite(const Program& program,
                               const MonitorConfig& config, int jobs = 1,
                               const RunOptions& options = {});

}  // namespace loopfix

#endif  // LOOPFIX_INTERPRETER_H_
