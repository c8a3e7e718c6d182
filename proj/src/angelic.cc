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

#include "loopfix/angelic.h"

#include <algorithm>
#include <chrono>

#include "loopfix/parallel.h"

namespace loopfix {
namespace {

using Clock = std::chrono::steady_clock;

enum class Probe : std::uint8_t { kPass, kFail, kHopeless };

class Prober {
 public:
  Prober(const LoopId& loop, const Program& program, const TestCase& test,
         std::uint64_t rank, const MiningOptions& options,
         Clock::time_point deadline)
      : loop_(loop),
        program_(program),
        test_(test),
        rank_(rank),
        options_(options),
        deadline_(deadline) {}

  Probe Run(std::uint64_t limit) {
    if (options_.time_budget_seconds && Clock::now() > deadline_) {
      throw Error(ErrorCode::kTimeBudgetExceeded,
                  "angelic mining for '" + test_.name +
                      "' exceeded its time budget")
          .WithSubjects({test_.name});
    }
    ++probes_;
    MonitorConfig config;
    config.global_cap = options_.global_cap;
    config.SetLimitIn(loop_, rank_, limit);
    TestRun run = RunTest(program_, test_, config);
    if (run.outcome.passed()) return Probe::kPass;
    // The target execution ended on its own (or never ran): larger limits
    // replay the same run.
    std::optional<ExitNature> exit = run.trace.Exit(loop_, rank_);
    if (!exit || *exit != ExitNature::kForced) return Probe::kHopeless;
    return Probe::kFail;
  }

  std::uint64_t probes() const { return probes_; }

 private:
  const LoopId& loop_;
  const Program& program_;
  const TestCase& test_;
  std::uint64_t rank_;
  const MiningOptions& options_;
  Clock::time_point deadline_;
  std::uint64_t probes_ = 0;
};

[[noreturn]] void NoRecord(const std::string& test, const LoopId& loop) {
  throw Error(ErrorCode::kNoAngelicRecord,
              "no iteration limit makes test '" + test + "' pass at loop " +
                  loop.ToString())
      .WithSubjects({test});
}

std::uint64_t Linear(Prober& prober, std::uint64_t budget,
                     const std::string& test, const LoopId& loop) {
  for (std::uint64_t i = 0; i <= budget; ++i) {
    Probe p = prober.Run(i);
    if (p == Probe::kPass) return i;
    if (p == Probe::kHopeless) break;
  }
  NoRecord(test, loop);
}

std::uint64_t Gallop(Prober& prober, std::uint64_t budget,
                     const std::string& test, const LoopId& loop) {
  Probe p = prober.Run(0);
  if (p == Probe::kPass) return 0;
  if (p == Probe::kHopeless) NoRecord(test, loop);
  std::uint64_t failing = 0;
  std::uint64_t step = 1;
  std::uint64_t passing = 0;
  while (true) {
    std::uint64_t probe = std::min(budget, failing + step);
    if (probe == failing) NoRecord(test, loop);
    p = prober.Run(probe);
    if (p == Probe::kPass) {
      passing = probe;
      break;
    }
    if (p == Probe::kHopeless) NoRecord(test, loop);
    failing = probe;
    step *= 2;
  }
  while (passing - failing > 1) {
    std::uint64_t mid = failing + (passing - failing) / 2;
    if (prober.Run(mid) == Probe::kPass) {
      passing = mid;
    } else {
      failing = mid;
    }
  }
  return passing;
}

}  // namespace

std::optional<std::uint64_t> AngelicRecord::ChiOf(
    const std::string& test) const {
  for (const auto& e : entries) {
    if (e.test == test) return e.chi;
  }
  return std::nullopt;
}

std::uint64_t AngelicRecord::Highest() const {
  std::uint64_t best = 0;
  for (const auto& e : entries) best = std::max(best, e.chi);
  return best;
}

AngelicRecord FindThresholds(const LoopId& loop, const Program& instrumented,
                             const HangingReport& report,
                             const MiningOptions& options) {
  AngelicRecord record;
  record.loop = loop;
  for (const auto& e : report.EntriesFor(loop)) {
    record.entries.push_back(AngelicEntry{e.test, e.rank, 0, 0});
  }
  std::uint64_t budget =
      std::min(options.probe_budget.value_or(options.global_cap),
               options.global_cap);
  Clock::time_point deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(
                             options.time_budget_seconds.value_or(0)));
  ParallelFor(record.entries.size(), options.jobs, [&](std::size_t i) {
    AngelicEntry& entry = record.entries[i];
    const TestCase* test = instrumented.FindTest(entry.test);
    if (test == nullptr) {
      throw Error(ErrorCode::kUsage, "no test named '" + entry.test + "'");
    }
    Prober prober(loop, instrumented, *test, entry.rank, options, deadline);
    entry.chi = options.strategy == MiningStrategy::kLinear
                    ? Linear(prober, budget, entry.test, loop)
                    : Gallop(prober, budget, entry.test, loop);
    entry.probes = prober.probes();
  });
  return record;
}

std::map<std::string, bool> IdempotenceProbe(const LoopId& loop,
                                             const Program& instrumented,
                                             const HangingReport& report,
                                             std::uint64_t global_cap,
                                             int jobs) {
  std::vector<HangingEntry> entries = report.EntriesFor(loop);
  std::vector<char> passed(entries.size(), 0);
  ParallelFor(entries.size(), jobs, [&](std::size_t i) {
    MonitorConfig config;
    config.global_cap = global_cap;
    config.SetLimitIn(loop, entries[i].rank, global_cap);
    passed[i] = RunTest(instrumented, entries[i].test, config).outcome.passed();
  });
  std::map<std::string, bool> result;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    result[entries[i].test] = passed[i] != 0;
  }
  return result;
}

}  // namespace loopfix
