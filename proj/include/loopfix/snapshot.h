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

#ifndef LOOPFIX_SNAPSHOT_H_
#define LOOPFIX_SNAPSHOT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopfix/ast.h"
#include "loopfix/monitor.h"

namespace loopfix {

// One value extracted at the top of every iteration of a collected loop.
//   variable:  int/bool variable in scope, named as declared
//   length:    len$a for every array a in scope
//   guard:     guard$orig, the original guard's value
//   subvalue:  sub$k, subpredicates of a top-level && / || and operands of
//              comparisons at the root or directly below it
struct SnapshotField {
  enum class Origin : std::uint8_t { kVariable, kLength, kGuard, kSubvalue };

  std::string name;
  Type type = Type::kInt;
  Expr source;  // resolved expression in the loop's scope
  Origin origin = Origin::kVariable;
};

using SnapshotSchema = std::vector<SnapshotField>;

// Fields for `loop` (a checked while or monitored while), in declaration
// order, then guard$orig, then subvalues deduplicated by source text.
SnapshotSchema SnapshotSchemaFor(const Stmt& loop);

// Evaluates side-effect free scalar expressions in the current frame.
class ScopeReader {
 public:
  virtual ~ScopeReader() = default;
  // nullopt when evaluation fails (out-of-bounds index, overflow, ...).
  virtual std::optional<std::int64_t> Read(const Expr& expr) const = 0;
};

// Values whose evaluation fails are left out of the snapshot.
Snapshot SnapshotIteration(const SnapshotSchema& schema,
                           const ScopeReader& env, bool guard_value);

}  // namespace loopfix

#endif  // LOOPFIX_SNAPSHOT_H_
