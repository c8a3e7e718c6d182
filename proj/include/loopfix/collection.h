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

#ifndef LOOPFIX_COLLECTION_H_
#define LOOPFIX_COLLECTION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopfix/angelic.h"
#include "loopfix/ast.h"
#include "loopfix/detection.h"
#include "loopfix/monitor.h"
#include "loopfix/snapshot.h"

namespace loopfix {

struct InputSpec {
  std::string name;
  Type type = Type::kInt;  // kInt or kBool
  // Expression in the loop's scope that the input stands for; the literal
  // for enriched constants.
  std::string source;
  bool constant = false;
  std::int64_t constant_value = 0;

  friend bool operator==(const InputSpec&, const InputSpec&) = default;
};

struct Provenance {
  std::string test;
  std::uint64_t rank = 0;
  std::uint64_t iteration = 0;
};

// Values are aligned with PairSet::schema, constants included.
struct ContextPair {
  std::vector<std::int64_t> inputs;
  bool output = false;
  Provenance provenance;
};

struct RawPair {
  Snapshot inputs;
  bool output = false;
  Provenance provenance;
};

struct PairSet {
  std::vector<InputSpec> schema;
  std::vector<ContextPair> pairs;
  std::size_t raw_count = 0;
  std::vector<std::string> pruned;   // constant in every pair
  std::vector<std::string> dropped;  // missing from some pair

  // -1 if absent.
  int IndexOf(std::string_view name) const;
  // items = number of pairs; size = inputs + output.
  std::size_t context_items() const { return pairs.size(); }
  std::size_t context_size() const { return schema.size() + 1; }
};

// Names of the enriched constants.
inline constexpr std::string_view kConstMinusOne = "const$m1";
inline constexpr std::string_view kConstZero = "const$0";
inline constexpr std::string_view kConstOne = "const$1";

// Appends -1, 0 and 1 as inputs unless already present.
void EnrichConstants(PairSet& set);

// Keeps the fields of `fields` present in every raw pair, deduplicates
// pairs (first occurrence wins), removes columns with a single value, then
// enriches constants. Throws kEmptySpecification for no pairs.
PairSet MakePairSet(const SnapshotSchema& fields,
                    const std::vector<RawPair>& raw);

// Line-oriented text form:
//   @input <name> <int|bool> <source expression>
//   @const <name> <int|bool> <value>
//   <name>=<value> ... -> <true|false>   [# test rank iteration]
std::string SerializePairSet(const PairSet& set);
// Missing @const lines get the standard constants. Throws kSyntax.
PairSet ParsePairSet(std::string_view text);

struct CollectionRun {
  std::string test;
  TestOutcome outcome;
  std::optional<std::uint64_t> limit;  // set for clamped hanging tests
  std::uint64_t rank = 0;
  std::size_t pairs = 0;
};

struct Specification {
  PairSet pairs;
  std::vector<CollectionRun> runs;
};

struct CollectionOptions {
  std::uint64_t global_cap = kDefaultGlobalCap;
  int jobs = 1;
};

// Reruns every test that reached `loop` during detection with collection
// enabled; hanging tests are clamped at their angelic record. Tests that hang
// in some other loop are skipped. A clamped run that does not pass is an
// internal error.
Specification BuildSpecification(const LoopId& loop,
                                 const Program& instrumented,
                                 const HangingReport& report,
                                 const AngelicRecord& record,
                                 const CollectionOptions& options = {});

}  // namespace loopfix

#endif  // LOOPFIX_COLLECTION_H_
