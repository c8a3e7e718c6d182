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

#ifndef LOOPFIX_MONITOR_H_
#define LOOPFIX_MONITOR_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopfix/ast.h"

namespace loopfix {

inline constexpr std::uint64_t kDefaultGlobalCap = 1'000'000;

// How a loop execution ended. kAborted covers executions cut short by a
// runtime error or failed assertion in the body (treated like a return).
enum class ExitNature : std::uint8_t {
  kConditional, kBreak, kReturn, kForced, kAborted,
};

std::string_view ExitNatureName(ExitNature nature);

// One execution of one loop within a test run; ranks start at 1.
struct InvocationKey {
  LoopId loop;
  std::uint64_t rank = 1;

  friend auto operator<=>(const InvocationKey&, const InvocationKey&) = default;
  friend bool operator==(const InvocationKey&, const InvocationKey&) = default;
};

struct MonitorConfig {
  std::uint64_t global_cap = kDefaultGlobalCap;
  // Overrides global_cap for exactly one execution.
  std::map<InvocationKey, std::uint64_t> per_invocation_limit;
  bool collection_enabled = false;
  std::optional<LoopId> collection_target;

  void SetLimitIn(const LoopId& loop, std::uint64_t rank,
                  std::uint64_t limit) {
    per_invocation_limit[InvocationKey{loop, rank}] = limit;
  }
  bool Collects(const LoopId& loop) const {
    return collection_enabled && collection_target && *collection_target == loop;
  }
};

struct NamedScalar {
  std::string name;
  Type type = Type::kInt;  // kInt or kBool
  std::int64_t value = 0;

  friend bool operator==(const NamedScalar&, const NamedScalar&) = default;
};

using Snapshot = std::vector<NamedScalar>;

// A (state, decision) observation recorded by a collecting monitor.
struct CollectedPair {
  Snapshot inputs;
  bool output = false;
  std::uint64_t rank = 0;
  std::uint64_t iteration = 0;
};

// Runtime controller of one loop for the duration of one test run. Decides
// stay/break per iteration, records exceeding executions, exit natures and,
// when collecting, (state, decision) pairs.
class LoopMonitor {
 public:
  LoopMonitor(LoopId id, const MonitorConfig* config);

  const LoopId& id() const { return id_; }

  // Starts a loop execution and returns its invocation rank.
  std::uint64_t BeginInvocation();

  // stay == guard_value && iters < limit. Forcing a break at the global cap
  // records an exceeding execution (first one only).
  bool Decide(bool guard_value, std::uint64_t iters);

  // Appends (snapshot, stay) when collection targets this loop.
  void Collect(bool stay, Snapshot snapshot);

  void EndInvocation(ExitNature nature);

  bool collecting() const { return collecting_; }
  std::uint64_t invocations() const { return invocations_; }
  std::uint64_t iterations() const { return iterations_; }
  std::uint64_t limit() const { return limit_; }
  bool last_break_forced() const { return forced_; }
  bool has_exceeding_execution() const { return exceeding_.has_value(); }
  std::optional<std::uint64_t> exceeding_execution() const {
    return exceeding_;
  }
  const std::vector<CollectedPair>& pairs() const { return pairs_; }
  std::vector<CollectedPair> TakePairs() { return std::move(pairs_); }
  const std::vector<ExitNature>& exits() const { return exits_; }

 private:
  LoopId id_;
  const MonitorConfig* config_;
  bool collecting_ = false;
  std::uint64_t invocations_ = 0;
  std::uint64_t iterations_ = 0;
  std::uint64_t limit_ = 0;
  bool limit_is_global_ = true;
  bool forced_ = false;
  std::optional<std::uint64_t> exceeding_;
  std::vector<CollectedPair> pairs_;
  std::vector<ExitNature> exits_;
};

}  // namespace loopfix

#endif  // LOOPFIX_MONITOR_H_
