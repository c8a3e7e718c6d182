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

#ifndef LOOPFIX_CORPUS_H_
#define LOOPFIX_CORPUS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopfix/ast.h"
#include "loopfix/detection.h"
#include "loopfix/error.h"
#include "loopfix/repair.h"

namespace loopfix {

// Structural expectations on a synthesized guard. Comparisons and
// commutative operators are normalized before any_of is checked, so
// `len(a) > i` matches `i < len(a)`.
struct PatchMatcher {
  std::vector<std::string> any_of;
  std::vector<std::string> uses_all;  // variable names
  bool reuses_original = false;       // original guard is a subterm
};

struct CorpusExpectation {
  std::optional<ErrorCode> error;
  std::vector<std::string> hanging;
  std::map<std::string, std::uint64_t> chi;
  std::optional<int> formulations;
  std::optional<int> components;
  std::optional<int> component_types;
  std::map<std::string, bool> idempotent;
};

struct CorpusCase {
  std::string name;
  std::string file;  // resolved against the manifest directory
  std::string pattern;
  PatchMatcher match;
  CorpusExpectation expect;
};

// Reads a manifest document. Throws kIo or kSyntax.
std::vector<CorpusCase> LoadManifest(const std::string& path);

// Problems found matching `guard`; empty when it matches.
std::vector<std::string> MatchGuard(const Expr& guard, const Expr& original,
                                    const PatchMatcher& matcher);

// Rewrites > and >= to < and <= and orders the operands of commutative
// operators by their printed form.
Expr NormalizeGuard(const Expr& expr);

struct CaseResult {
  CorpusCase spec;
  bool passed = false;
  std::vector<std::string> problems;
  Program program;
  HangingReport report;
  std::optional<RepairOutcome> outcome;
  std::optional<ErrorCode> error;
  std::string error_message;
  double seconds = 0;
};

struct CorpusReport {
  std::vector<CaseResult> cases;
  double seconds = 0;

  bool all_passed() const;
};

// Repairs every case and checks it against its expectations. Per-case
// failures are data.
CorpusReport RunCorpus(const std::string& manifest_path,
                       const RepairConfig& config = {}, int case_jobs = 1);

}  // namespace loopfix

#endif  // LOOPFIX_CORPUS_H_
