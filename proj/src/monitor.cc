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

#include "loopfix/monitor.h"

namespace loopfix {

std::string_view ExitNatureName(ExitNature nature) {
  switch (nature) {
    case ExitNature::kConditional: return "conditional";
    case ExitNature::kBreak: return "break";
    case ExitNature::kReturn: return "return";
    case ExitNature::kForced: return "forced";
    case ExitNature::kAborted: return "aborted";
  }
  return "?";
}

LoopMonitor::LoopMonitor(LoopId id, const MonitorConfig* config)
    : id_(std::move(id)),
      config_(config),
      collecting_(config->Collects(id_)) {}

std::uint64_t LoopMonitor::BeginInvocation() {
  ++invocations_;
  iterations_ = 0;
  forced_ = false;
  auto it = config_->per_invocation_limit.find(
      InvocationKey{id_, invocations_});
  if (it != config_->per_invocation_limit.end()) {
    limit_ = it->second;
    limit_is_global_ = false;
  } else {
    limit_ = config_->global_cap;
    limit_is_global_ = true;
  }
  return invocations_;
}

bool LoopMonitor::Decide(bool guard_value, std::uint64_t iters) {
  if (!guard_value) return false;
  if (iters < limit_) {
    ++iterations_;
    return true;
  }
  forced_ = true;
  if (limit_is_global_ && !exceeding_) exceeding_ = invocations_;
  return false;
}

void LoopMonitor::Collect(bool stay, Snapshot snapshot) {
  if (!collecting_) return;
  pairs_.push_back(CollectedPair{std::move(snapshot), stay, invocations_,
                                 iterations_ - (stay ? 1 : 0)});
}

void LoopMonitor::EndInvocation(ExitNature nature) {
  exits_.push_back(nature);
}

}  // namespace loopfix
