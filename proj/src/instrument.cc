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

#include "loopfix/instrument.h"

#include "loopfix/checker.h"

namespace loopfix {
namespace {

void Rewrite(std::vector<Stmt>& body, Stmt::Kind from, Stmt::Kind to) {
  for (auto& s : body) {
    if (s.kind == from) s.kind = to;
    Rewrite(s.body, from, to);
    Rewrite(s.else_body, from, to);
  }
}

void RewriteAll(Program& program, Stmt::Kind from, Stmt::Kind to) {
  for (auto& f : program.functions) Rewrite(f.body, from, to);
  for (auto& t : program.tests) Rewrite(t.body, from, to);
}

bool AnyOf(const std::vector<Stmt>& body, Stmt::Kind kind) {
  for (const auto& s : body) {
    if (s.kind == kind || AnyOf(s.body, kind) || AnyOf(s.else_body, kind)) {
      return true;
    }
  }
  return false;
}

}  // namespace

Program Instrument(const Program& program, bool check) {
  Program out = program;
  RewriteAll(out, Stmt::Kind::kWhile, Stmt::Kind::kMonitoredWhile);
  if (check) Check(out);
  return out;
}

Program Uninstrument(const Program& program) {
  Program out = program;
  RewriteAll(out, Stmt::Kind::kMonitoredWhile, Stmt::Kind::kWhile);
  Check(out);
  return out;
}

bool IsInstrumented(const Program& program) {
  for (const auto& f : program.functions) {
    if (AnyOf(f.body, Stmt::Kind::kMonitoredWhile)) return true;
  }
  for (const auto& t : program.tests) {
    if (AnyOf(t.body, Stmt::Kind::kMonitoredWhile)) return true;
  }
  return false;
}

}  // namespace loopfix
