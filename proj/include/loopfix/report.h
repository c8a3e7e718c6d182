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

#ifndef LOOPFIX_REPORT_H_
#define LOOPFIX_REPORT_H_

#include <string>

#include "json.hpp"
#include "loopfix/angelic.h"
#include "loopfix/collection.h"
#include "loopfix/corpus.h"
#include "loopfix/detection.h"
#include "loopfix/error.h"
#include "loopfix/repair.h"
#include "loopfix/synthesis.h"

namespace loopfix {

using Json = nlohmann::ordered_json;

// Machine-readable documents. Timings are omitted unless requested so the
// rest of each document is byte-stable across runs.
Json ToJson(const HangingReport& report);
Json ToJson(const AngelicRecord& record,
            const std::map<std::string, bool>& idempotent);
Json ToJson(const Specification& spec);
Json ToJson(const SynthesisResult& result, const PairSet& set,
            bool with_timings);
Json ToJson(const Timings& timings);
Json ToJson(const Patch& patch, bool with_timings);
Json ToJson(const RepairOutcome& outcome, bool with_timings);
Json ToJson(const CorpusReport& report, bool with_timings);
Json ToJson(const Error& error);

// Human-readable counterparts.
std::string ToText(const HangingReport& report);
std::string ToText(const AngelicRecord& record,
                   const std::map<std::string, bool>& idempotent);
std::string ToText(const SynthesisResult& result, const PairSet& set,
                   bool with_timings);
std::string ToText(const Timings& timings);
std::string ToText(const RepairOutcome& outcome, bool with_timings);
std::string ToText(const CorpusReport& report, bool with_timings);

}  // namespace loopfix

#endif  // LOOPFIX_REPORT_H_
