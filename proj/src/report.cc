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

#include "loopfix/report.h"

#include <cstdio>
#include <sstream>

#include "loopfix/printer.h"

namespace loopfix {
namespace {

std::string Seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

Json StatsJson(const SynthesisStats& s, bool with_timings) {
  Json j;
  j["smt_formulations"] = s.formulations;
  j["smt_components"] = s.components;
  j["smt_component_types"] = s.component_types;
  if (with_timings) j["solver_seconds"] = s.solver_seconds;
  return j;
}

Json ValidationJson(const ValidationVerdict& v) {
  Json j;
  j["all_tests_pass"] = v.all_pass;
  j["failures"] = v.failures;
  Json statuses = Json::object();
  for (const auto& [test, status] : v.statuses) {
    statuses[test] = std::string(TestStatusName(status));
  }
  j["tests"] = statuses;
  return j;
}

}  // namespace

Json ToJson(const HangingReport& report) {
  Json j;
  j["global_cap"] = report.global_cap;
  Json hanging = Json::array();
  for (const auto& e : report.entries) {
    hanging.push_back({{"test", e.test},
                       {"loop", e.loop.ToString()},
                       {"invocation", e.rank}});
  }
  j["hanging"] = hanging;
  Json tests = Json::array();
  for (const auto& [test, run] : report.runs) {
    Json t{{"test", test},
           {"status", std::string(TestStatusName(run.outcome.status))}};
    if (run.outcome.status == TestStatus::kCapExceeded) {
      t["completion"] = std::string(TestStatusName(run.outcome.completion));
    }
    tests.push_back(t);
  }
  j["tests"] = tests;
  Json reached = Json::object();
  for (const auto& [loop, names] : report.tests_of) {
    reached[loop.ToString()] = names;
  }
  j["tests_of"] = reached;
  return j;
}

Json ToJson(const AngelicRecord& record,
            const std::map<std::string, bool>& idempotent) {
  Json j;
  j["loop"] = record.loop.ToString();
  j["angelic_record"] = record.Highest();
  Json tests = Json::array();
  for (const auto& e : record.entries) {
    Json t{{"test", e.test},
           {"invocation", e.rank},
           {"chi", e.chi},
           {"probes", e.probes}};
    auto it = idempotent.find(e.test);
    if (it != idempotent.end()) t["idempotent"] = it->second;
    tests.push_back(t);
  }
  j["tests"] = tests;
  return j;
}

Json ToJson(const Specification& spec) {
  Json j;
  const PairSet& set = spec.pairs;
  j["context_items"] = set.context_items();
  j["context_size"] = set.context_size();
  j["raw_pairs"] = set.raw_count;
  Json inputs = Json::array();
  for (const auto& in : set.schema) {
    inputs.push_back({{"name", in.name},
                      {"type", std::string(TypeName(in.type))},
                      {"source", in.source}});
  }
  j["inputs"] = inputs;
  j["pruned"] = set.pruned;
  j["dropped"] = set.dropped;
  Json runs = Json::array();
  for (const auto& r : spec.runs) {
    Json x{{"test", r.test},
           {"status", std::string(TestStatusName(r.outcome.status))},
           {"pairs", r.pairs}};
    if (r.limit) {
      x["invocation"] = r.rank;
      x["limit"] = *r.limit;
    }
    runs.push_back(x);
  }
  j["runs"] = runs;
  return j;
}

Json ToJson(const SynthesisResult& result, const PairSet& set,
            bool with_timings) {
  Json j = StatsJson(result.stats, with_timings);
  j["guard"] = GuardToString(result.guard, set.schema);
  j["source_guard"] = PrintExpr(GuardToLanguage(result.guard, set.schema));
  return j;
}

Json ToJson(const Timings& t) {
  return Json{{"instrumentation", t.instrumentation},
              {"compilation", t.compilation},
              {"test_suite", t.test_suite},
              {"hanging_tests", t.hanging_tests},
              {"angelic_value_mining", t.angelic_mining},
              {"value_collection", t.value_collection},
              {"smt_solving", t.smt_solving},
              {"validation", t.validation},
              {"total", t.total()}};
}

Json ToJson(const Patch& p, bool with_timings) {
  Json j;
  j["loop"] = p.loop.ToString();
  j["original_guard"] = p.original_guard;
  j["patched_guard"] = p.synthesized_guard;
  j["guard_over_inputs"] = p.synthesized_inputs;
  j["hanging_tests"] = p.hanging_tests;
  Json idem = Json::object();
  for (const auto& [test, value] : p.idempotent) idem[test] = value;
  j["idempotence"] = idem;
  j["angelic_record"] = p.angelic.Highest();
  Json chi = Json::object();
  for (const auto& e : p.angelic.entries) chi[e.test] = e.chi;
  j["angelic_records"] = chi;
  j["context_items"] = p.context_items;
  j["context_size"] = p.context_size;
  Json stats = StatsJson(p.stats, with_timings);
  for (auto& [key, value] : stats.items()) j[key] = value;
  j["validation"] = ValidationJson(p.validation);
  j["diff"] = p.diff;
  if (with_timings) j["timings"] = ToJson(p.timings);
  return j;
}

Json ToJson(const RepairOutcome& outcome, bool with_timings) {
  Json j;
  Json patches = Json::array();
  for (const auto& p : outcome.patches) patches.push_back(ToJson(p, with_timings));
  j["patches"] = patches;
  j["validation"] = ValidationJson(outcome.final_validation);
  if (with_timings) j["timings"] = ToJson(outcome.timings);
  return j;
}

Json ToJson(const CorpusReport& report, bool with_timings) {
  Json j;
  Json cases = Json::array();
  std::size_t passed = 0;
  for (const auto& c : report.cases) {
    Json x{{"name", c.spec.name},
           {"pattern", c.spec.pattern},
           {"passed", c.passed},
           {"problems", c.problems}};
    if (c.error) {
      x["error"] = std::string(ErrorCodeName(*c.error));
    } else if (c.outcome && !c.outcome->patches.empty()) {
      x["patch"] = ToJson(c.outcome->patches.front(), with_timings);
    }
    if (with_timings) x["seconds"] = c.seconds;
    passed += c.passed ? 1 : 0;
    cases.push_back(x);
  }
  j["cases"] = cases;
  j["passed"] = passed;
  j["total"] = report.cases.size();
  if (with_timings) j["seconds"] = report.seconds;
  return j;
}

Json ToJson(const Error& error) {
  Json j;
  j["error"] = std::string(ErrorCodeName(error.code()));
  j["message"] = error.detail();
  if (error.location().valid()) {
    j["line"] = error.location().line;
    j["column"] = error.location().column;
  }
  if (!error.subjects().empty()) j["subjects"] = error.subjects();
  return j;
}

std::string ToText(const HangingReport& report) {
  std::ostringstream out;
  out << "hanging tests: " << report.entries.size() << "\n";
  for (const auto& e : report.entries) {
    out << "  " << e.test << " hangs in " << e.loop.ToString()
        << " (invocation " << e.rank << ")\n";
  }
  return out.str();
}

std::string ToText(const AngelicRecord& record,
                   const std::map<std::string, bool>& idempotent) {
  std::ostringstream out;
  out << "loop " << record.loop.ToString() << ", angelic record "
      << record.Highest() << "\n";
  for (const auto& e : record.entries) {
    out << "  " << e.test << ": chi=" << e.chi << " (invocation " << e.rank
        << ", " << e.probes << " probes)";
    auto it = idempotent.find(e.test);
    if (it != idempotent.end()) {
      out << (it->second ? ", idempotent" : ", not idempotent");
    }
    out << "\n";
  }
  return out.str();
}

std::string ToText(const SynthesisResult& result, const PairSet& set,
                   bool with_timings) {
  std::ostringstream out;
  out << "guard: " << PrintExpr(GuardToLanguage(result.guard, set.schema))
      << "\n";
  out << "smt formulations: " << result.stats.formulations << "\n";
  out << "smt components: " << result.stats.components << "\n";
  out << "smt component types: " << result.stats.component_types << "\n";
  if (with_timings) {
    out << "smt solving: " << Seconds(result.stats.solver_seconds) << " s\n";
  }
  return out.str();
}

std::string ToText(const Timings& t) {
  std::ostringstream out;
  out << "  instrumentation:      " << Seconds(t.instrumentation) << " s\n"
      << "  compilation:          " << Seconds(t.compilation) << " s\n"
      << "  test suite:           " << Seconds(t.test_suite) << " s\n"
      << "  hanging tests:        " << Seconds(t.hanging_tests) << " s\n"
      << "  angelic value mining: " << Seconds(t.angelic_mining) << " s\n"
      << "  value collection:     " << Seconds(t.value_collection) << " s\n"
      << "  smt solving:          " << Seconds(t.smt_solving) << " s\n"
      << "  validation:           " << Seconds(t.validation) << " s\n"
      << "  total:                " << Seconds(t.total()) << " s\n";
  return out.str();
}

std::string ToText(const RepairOutcome& outcome, bool with_timings) {
  std::ostringstream out;
  for (const auto& p : outcome.patches) {
    out << "loop " << p.loop.ToString() << "\n";
    out << "  original guard:      " << p.original_guard << "\n";
    out << "  patched guard:       " << p.synthesized_guard << "\n";
    out << "  hanging tests:       " << p.hanging_tests.size() << "\n";
    out << "  idempotence:        ";
    for (const auto& [test, value] : p.idempotent) {
      out << ' ' << test << '=' << (value ? "yes" : "no");
    }
    out << "\n";
    out << "  angelic record:      " << p.angelic.Highest() << "\n";
    out << "  context items:       " << p.context_items << "\n";
    out << "  context size:        " << p.context_size << "\n";
    out << "  smt formulations:    " << p.stats.formulations << "\n";
    out << "  smt components:      " << p.stats.components << "\n";
    out << "  smt component types: " << p.stats.component_types << "\n";
    out << "  validation:          "
        << (p.validation.all_pass ? "all tests pass" : "FAILED") << "\n";
    for (const auto& f : p.validation.failures) out << "    failing: " << f << "\n";
    if (with_timings) out << ToText(p.timings);
    out << p.diff;
  }
  if (outcome.patches.size() > 1) {
    out << "final validation: "
        << (outcome.final_validation.all_pass ? "all tests pass" : "FAILED")
        << "\n";
    if (with_timings) out << ToText(outcome.timings);
  }
  return out.str();
}

std::string ToText(const CorpusReport& report, bool with_timings) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : report.cases) {
    passed += c.passed ? 1 : 0;
    out << (c.passed ? "ok   " : "FAIL ") << c.spec.name;
    if (c.error) {
      out << "  " << ErrorCodeName(*c.error);
    } else if (c.outcome && !c.outcome->patches.empty()) {
      const Patch& p = c.outcome->patches.front();
      out << "  while (" << p.synthesized_guard << ")  chi="
          << p.angelic.Highest() << " formulations=" << p.stats.formulations
          << " components=" << p.stats.components
          << " types=" << p.stats.component_types;
    }
    if (with_timings) out << "  " << Seconds(c.seconds) << " s";
    out << "\n";
    for (const auto& problem : c.problems) out << "     " << problem << "\n";
  }
  out << passed << "/" << report.cases.size() << " cases repaired as expected";
  if (with_timings) out << " in " << Seconds(report.seconds) << " s";
  out << "\n";
  return out.str();
}

}  // namespace loopfix
