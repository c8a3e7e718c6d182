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

#include "loopfix/snapshot.h"

#include <set>

#include "loopfix/printer.h"

namespace loopfix {
namespace {

bool ContainsCall(const Expr& e) {
  if (e.kind == Expr::Kind::kCall) return true;
  for (const auto& op : e.operands) {
    if (ContainsCall(op)) return true;
  }
  return false;
}

// Already present as a plain column or a literal.
bool IsTrivial(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kIntLit:
    case Expr::Kind::kBoolLit:
    case Expr::Kind::kVar:
      return true;
    case Expr::Kind::kLen:
      return e.operands[0].kind == Expr::Kind::kVar;
    default:
      return false;
  }
}

class SubCollector {
 public:
  explicit SubCollector(SnapshotSchema& schema) : schema_(schema) {}

  void Add(const Expr& e) {
    if (e.type != Type::kInt && e.type != Type::kBool) return;
    if (ContainsCall(e)) return;
    std::string text = PrintExpr(e);
    if (!seen_.insert(text).second) return;
    schema_.push_back(SnapshotField{"sub$" + std::to_string(next_++), e.type,
                                    e, SnapshotField::Origin::kSubvalue});
  }

  void AddOperands(const Expr& comparison) {
    for (const auto& op : comparison.operands) {
      if (!IsTrivial(op)) Add(op);
    }
  }

 private:
  SnapshotSchema& schema_;
  std::set<std::string> seen_;
  int next_ = 0;
};

}  // namespace

SnapshotSchema SnapshotSchemaFor(const Stmt& loop) {
  SnapshotSchema schema;
  for (const auto& v : loop.scope) {
    Expr var = Expr::Var(v.name);
    var.type = v.type;
    var.slot = v.slot;
    if (v.type == Type::kIntArray) {
      Expr len = Expr::Len(std::move(var));
      len.type = Type::kInt;
      schema.push_back(SnapshotField{"len$" + v.name, Type::kInt,
                                     std::move(len),
                                     SnapshotField::Origin::kLength});
    } else {
      schema.push_back(SnapshotField{v.name, v.type, std::move(var),
                                     SnapshotField::Origin::kVariable});
    }
  }
  const Expr& guard = loop.guard();
  schema.push_back(SnapshotField{"guard$orig", Type::kBool, guard,
                                 SnapshotField::Origin::kGuard});

  SubCollector subs(schema);
  if (guard.is_logical()) {
    for (const auto& child : guard.operands) {
      if (child.kind != Expr::Kind::kBoolLit) subs.Add(child);
    }
    for (const auto& child : guard.operands) {
      if (child.is_comparison()) subs.AddOperands(child);
    }
  } else if (guard.is_comparison()) {
    subs.AddOperands(guard);
  }
  return schema;
}

Snapshot SnapshotIteration(const SnapshotSchema& schema,
                           const ScopeReader& env, bool guard_value) {
  Snapshot snapshot;
  snapshot.reserve(schema.size());
  for (const auto& field : schema) {
    if (field.origin == SnapshotField::Origin::kGuard) {
      snapshot.push_back(NamedScalar{field.name, Type::kBool, guard_value});
      continue;
    }
    std::optional<std::int64_t> value = env.Read(field.source);
    if (!value) continue;
    snapshot.push_back(NamedScalar{field.name, field.type, *value});
  }
  return snapshot;
}

}  // namespace loopfix
