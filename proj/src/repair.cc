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

#include "loopfix/repair.h"

#include <algorithm>
#include <chrono>
#include <set>

#include "loopfix/checker.h"
#include "loopfix/diff.h"
#include "loopfix/instrument.h"
#include "loopfix/printer.h"

namespace loopfix {
namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  explicit Stopwatch(double& sink) : sink_(sink), start_(Clock::now()) {}
  ~Stopwatch() {
    sink_ += std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  double& sink_;
  Clock::time_point start_;
};

std::vector<const TestCase*> AllTests(const Program& program) {
  std::vector<const TestCase*> tests;
  for (const auto& t : program.tests) tests.push_back(&t);
  return tests;
}

ValidationVerdict RunValidation(const Program& patched,
                                const std::vector<const TestCase*>& tests,
                                std::uint64_t cap, int jobs) {
  MonitorConfig config;
  config.global_cap = cap;
  ValidationVerdict verdict;
  for (const auto& [test, run] : RunSuite(patched, tests, config, jobs)) {
    verdict.statuses[test] = run.outcome.status;
    if (!run.outcome.passed()) {
      verdict.all_pass = false;
      verdict.failures.push_back(test);
    }
  }
  return verdict;
}

Error ValidationError(const std::string& what, const ValidationVerdict& v) {
  std::string names;
  for (const auto& f : v.failures) names += (names.empty() ? "" : ", ") + f;
  return Error(ErrorCode::kValidationFailed, what + " fails: " + names)
      .WithSubjects(v.failures);
}

}  // namespace

Timings& Timings::operator+=(const Timings& o) {
  instrumentation += o.instrumentation;
  compilation += o.compilation;
  test_suite += o.test_suite;
  hanging_tests += o.hanging_tests;
  angelic_mining += o.angelic_mining;
  value_collection += o.value_collection;
  smt_solving += o.smt_solving;
  validation += o.validation;
  return *this;
}

ValidationVerdict Validate(const Program& original, const LoopId& loop,
                           const Expr& guard,
                           const std::vector<const TestCase*>& tests,
                           std::uint64_t cap, int jobs) {
  Program patched = ReplaceGuard(original, loop, guard);
  std::vector<const TestCase*> own;
  for (const TestCase* t : tests) {
    const TestCase* mine = patched.FindTest(t->name);
    if (mine == nullptr) {
      throw Error(ErrorCode::kUsage, "no test named '" + t->name + "'");
    }
    own.push_back(mine);
  }
  return RunValidation(patched, own, cap, jobs);
}

ValidationVerdict Validate(const Program& original, const LoopId& loop,
                           const Expr& guard, std::uint64_t cap, int jobs) {
  return Validate(original, loop, guard, AllTests(original), cap, jobs);
}

Patch Repair(const Program& program, const RepairConfig& config,
             const std::string& file_name) {
  if (IsInstrumented(program)) {
    throw Error(ErrorCode::kUsage, "repair expects an un-instrumented program");
  }
  Patch patch;
  Timings& t = patch.timings;

  Program instrumented;
  {
    Stopwatch w(t.instrumentation);
    instrumented = Instrument(program, /*check=*/false);
  }
  {
    Stopwatch w(t.compilation);
    Check(instrumented);
  }

  HangingReport report;
  {
    Stopwatch w(t.test_suite);
    report = DetectInfiniteLoops(instrumented, config.global_cap, config.jobs);
  }
  if (report.empty()) {
    throw Error(ErrorCode::kNoInfiniteLoopDetected,
                "no test hangs within " + std::to_string(config.global_cap) +
                    " iterations");
  }
  std::vector<LoopId> loops = report.Loops();
  LoopId loop = loops.front();
  if (config.loop) {
    if (std::find(loops.begin(), loops.end(), *config.loop) == loops.end()) {
      throw Error(ErrorCode::kNoInfiniteLoopDetected,
                  "loop " + config.loop->ToString() + " does not hang");
    }
    loop = *config.loop;
  } else if (config.simultaneous && loops.size() > 1) {
    std::vector<std::string> ids;
    for (const auto& l : loops) ids.push_back(l.ToString());
    std::string list;
    for (const auto& id : ids) list += (list.empty() ? "" : ", ") + id;
    throw Error(ErrorCode::kMultipleInfiniteLoops,
                std::to_string(loops.size()) +
                    " loops hang and cannot be repaired together: " + list)
        .WithSubjects(ids);
  }
  patch.loop = loop;
  patch.original_guard = PrintExpr(FindLoop(program, loop)->guard());
  for (const auto& e : report.EntriesFor(loop)) {
    patch.hanging_tests.push_back(e.test);
  }

  {
    Stopwatch w(t.hanging_tests);
    patch.idempotent = IdempotenceProbe(loop, instrumented, report,
                                        config.global_cap, config.jobs);
  }
  {
    Stopwatch w(t.angelic_mining);
    MiningOptions mining;
    mining.global_cap = config.global_cap;
    mining.probe_budget = config.probe_budget;
    mining.strategy = config.mining_strategy;
    mining.time_budget_seconds = config.mining_time_budget_seconds;
    mining.jobs = config.jobs;
    patch.angelic = FindThresholds(loop, instrumented, report, mining);
  }
  Specification spec;
  {
    Stopwatch w(t.value_collection);
    spec = BuildSpecification(loop, instrumented, report, patch.angelic,
                              CollectionOptions{config.global_cap, config.jobs});
  }
  patch.context_items = spec.pairs.context_items();
  patch.context_size = spec.pairs.context_size();
  patch.pairs = spec.pairs;

  SynthesisResult result;
  {
    Stopwatch w(t.smt_solving);
    result = Synthesize(spec.pairs, config.synthesis);
  }
  patch.stats = result.stats;
  patch.synthesized_inputs = GuardToString(result.guard, spec.pairs.schema);
  patch.guard = GuardToLanguage(result.guard, spec.pairs.schema);
  patch.synthesized_guard = PrintExpr(patch.guard);
  patch.patched = ReplaceGuard(program, loop, patch.guard);

  // Tests that hang only in other loops are left for later repairs.
  std::set<std::string> elsewhere;
  for (const auto& e : report.entries) {
    if (!(e.loop == loop)) elsewhere.insert(e.test);
  }
  for (const auto& e : report.entries) {
    if (e.loop == loop) elsewhere.erase(e.test);
  }
  std::vector<const TestCase*> tests;
  for (const auto& test : patch.patched.tests) {
    if (!elsewhere.contains(test.name)) tests.push_back(&test);
  }
  {
    Stopwatch w(t.validation);
    patch.validation =
        RunValidation(patch.patched, tests, config.global_cap, config.jobs);
  }
  patch.diff = UnifiedDiff(PrettyPrint(program), PrettyPrint(patch.patched),
                           "a/" + file_name, "b/" + file_name);
  if (!patch.validation.all_pass && !config.emit_unvalidated) {
    throw ValidationError("patched guard '" + patch.synthesized_guard + "'",
                          patch.validation);
  }
  return patch;
}

RepairOutcome RepairAll(const Program& program, const RepairConfig& config,
                        const std::string& file_name) {
  RepairOutcome outcome;
  outcome.final_program = program;
  std::size_t rounds =
      config.loop ? 1 : std::max<std::size_t>(1, LoopsOf(program).size());
  for (std::size_t i = 0; i < rounds; ++i) {
    Patch patch;
    try {
      patch = Repair(outcome.final_program, config, file_name);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kNoInfiniteLoopDetected &&
          !outcome.patches.empty()) {
        break;
      }
      throw;
    }
    outcome.timings += patch.timings;
    outcome.final_program = patch.patched;
    outcome.patches.push_back(std::move(patch));
  }
  if (config.loop) {
    outcome.final_validation = outcome.patches.back().validation;
    return outcome;
  }
  {
    Stopwatch w(outcome.timings.validation);
    outcome.final_validation =
        RunValidation(outcome.final_program, AllTests(outcome.final_program),
                      config.global_cap, config.jobs);
  }
  if (!outcome.final_validation.all_pass && !config.emit_unvalidated) {
    throw ValidationError("the repaired program", outcome.final_validation);
  }
  return outcome;
}

}  // namespace loopfix
