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

#include "loopfix/corpus.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <set>

#include "json.hpp"
#include "loopfix/instrument.h"
#include "loopfix/io.h"
#include "loopfix/parallel.h"
#include "loopfix/parser.h"
#include "loopfix/printer.h"

namespace loopfix {
namespace {

using Json = nlohmann::json;

std::vector<std::string> Strings(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<std::string>>();
}

CorpusCase CaseFromJson(const Json& j, const std::filesystem::path& dir) {
  CorpusCase c;
  c.name = j.at("name").get<std::string>();
  c.file = (dir / j.at("file").get<std::string>()).string();
  c.pattern = j.value("pattern", "");
  if (j.contains("match")) {
    const Json& m = j.at("match");
    c.match.any_of = Strings(m, "any_of");
    c.match.uses_all = Strings(m, "uses_all");
    c.match.reuses_original = m.value("reuses_original", false);
  }
  const Json& e = j.value("expect", Json::object());
  if (e.contains("error")) {
    std::string name = e.at("error").get<std::string>();
    c.expect.error = ErrorCodeFromName(name);
    if (!c.expect.error) {
      throw Error(ErrorCode::kSyntax,
                  "case '" + c.name + "': unknown error '" + name + "'");
    }
  }
  c.expect.hanging = Strings(e, "hanging");
  if (e.contains("chi")) {
    c.expect.chi = e.at("chi").get<std::map<std::string, std::uint64_t>>();
  }
  if (e.contains("formulations")) c.expect.formulations = e.at("formulations");
  if (e.contains("components")) c.expect.components = e.at("components");
  if (e.contains("component_types")) {
    c.expect.component_types = e.at("component_types");
  }
  if (e.contains("idempotent")) {
    c.expect.idempotent = e.at("idempotent").get<std::map<std::string, bool>>();
  }
  return c;
}

bool IsCommutative(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd:
    case BinaryOp::kMul:
    case BinaryOp::kEq:
    case BinaryOp::kNe:
    case BinaryOp::kAnd:
    case BinaryOp::kOr:
      return true;
    default:
      return false;
  }
}

void CollectVars(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::kVar) out.insert(e.name);
  for (const auto& o : e.operands) CollectVars(o, out);
}

bool ContainsSubterm(const Expr& e, const std::string& printed) {
  if (PrintExpr(e) == printed) return true;
  return std::any_of(e.operands.begin(), e.operands.end(),
                     [&](const Expr& o) { return ContainsSubterm(o, printed); });
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

void CheckPatch(CaseResult& r, const Patch& patch) {
  const CorpusExpectation& e = r.spec.expect;
  auto problem = [&](std::string s) { r.problems.push_back(std::move(s)); };
  for (const auto& [test, chi] : e.chi) {
    std::optional<std::uint64_t> got = patch.angelic.ChiOf(test);
    if (!got) {
      problem("no angelic value for " + test);
    } else if (*got != chi) {
      problem("chi(" + test + ") = " + std::to_string(*got) + ", expected " +
              std::to_string(chi));
    }
  }
  auto stat = [&](const char* what, std::optional<int> want, int got) {
    if (want && *want != got) {
      problem(std::string(what) + " = " + std::to_string(got) +
              ", expected " + std::to_string(*want));
    }
  };
  stat("formulations", e.formulations, patch.stats.formulations);
  stat("components", e.components, patch.stats.components);
  stat("component types", e.component_types, patch.stats.component_types);
  for (const auto& [test, want] : e.idempotent) {
    auto it = patch.idempotent.find(test);
    if (it == patch.idempotent.end()) {
      problem("no idempotence verdict for " + test);
    } else if (it->second != want) {
      problem("idempotent(" + test + ") = " + (it->second ? "true" : "false"));
    }
  }
  const Stmt* loop = FindLoop(r.program, patch.loop);
  for (auto& p : MatchGuard(patch.guard, loop->guard(), r.spec.match)) {
    problem(std::move(p));
  }
}

CaseResult RunCase(const CorpusCase& spec, const RepairConfig& config) {
  auto start = std::chrono::steady_clock::now();
  CaseResult r;
  r.spec = spec;
  try {
    r.program = Parse(ReadTextFile(spec.file));
    r.report = DetectInfiniteLoops(Instrument(r.program), config.global_cap,
                                   config.jobs);
    std::set<std::string> hanging;
    for (const auto& entry : r.report.entries) hanging.insert(entry.test);
    std::set<std::string> want(spec.expect.hanging.begin(),
                               spec.expect.hanging.end());
    if (hanging != want) {
      r.problems.push_back(
          "hanging tests [" +
          Join(std::vector<std::string>(hanging.begin(), hanging.end())) +
          "], expected [" + Join(spec.expect.hanging) + "]");
    }
    std::filesystem::path file(spec.file);
    r.outcome = RepairAll(r.program, config, file.filename().string());
    if (spec.expect.error) {
      r.problems.push_back("expected " +
                           std::string(ErrorCodeName(*spec.expect.error)));
    } else {
      CheckPatch(r, r.outcome->patches.front());
      if (!r.outcome->final_validation.all_pass) {
        r.problems.push_back("failing tests: " +
                             Join(r.outcome->final_validation.failures));
      }
    }
  } catch (const Error& e) {
    r.error = e.code();
    r.error_message = e.what();
    if (spec.expect.error != e.code()) {
      r.problems.push_back(std::string(ErrorCodeName(e.code())) + ": " +
                           e.what());
    }
  }
  r.passed = r.problems.empty();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

}  // namespace

std::vector<CorpusCase> LoadManifest(const std::string& path) {
  std::string text = ReadTextFile(path);
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  try {
    Json doc = Json::parse(text);
    std::vector<CorpusCase> cases;
    for (const auto& c : doc.at("cases")) cases.push_back(CaseFromJson(c, dir));
    return cases;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSyntax, path + ": " + e.what());
  }
}

Expr NormalizeGuard(const Expr& expr) {
  Expr e = expr;
  for (auto& o : e.operands) o = NormalizeGuard(o);
  if (e.kind != Expr::Kind::kBinary) return e;
  if (e.binary_op == BinaryOp::kGt || e.binary_op == BinaryOp::kGe) {
    e.binary_op =
        e.binary_op == BinaryOp::kGt ? BinaryOp::kLt : BinaryOp::kLe;
    std::swap(e.operands[0], e.operands[1]);
  } else if (IsCommutative(e.binary_op) &&
             PrintExpr(e.operands[1]) < PrintExpr(e.operands[0])) {
    std::swap(e.operands[0], e.operands[1]);
  }
  return e;
}

std::vector<std::string> MatchGuard(const Expr& guard, const Expr& original,
                                    const PatchMatcher& matcher) {
  std::vector<std::string> problems;
  Expr norm = NormalizeGuard(guard);
  std::string printed = PrintExpr(norm);
  if (!matcher.any_of.empty()) {
    bool hit = std::any_of(
        matcher.any_of.begin(), matcher.any_of.end(), [&](const auto& form) {
          return PrintExpr(NormalizeGuard(ParseExpression(form))) == printed;
        });
    if (!hit) {
      problems.push_back("guard '" + PrintExpr(guard) +
                         "' matches none of the expected forms");
    }
  }
  std::set<std::string> vars;
  CollectVars(guard, vars);
  for (const auto& name : matcher.uses_all) {
    if (!vars.contains(name)) {
      problems.push_back("guard '" + PrintExpr(guard) + "' does not use " +
                         name);
    }
  }
  if (matcher.reuses_original &&
      !ContainsSubterm(norm, PrintExpr(NormalizeGuard(original)))) {
    problems.push_back("guard '" + PrintExpr(guard) +
                       "' does not reuse the original guard");
  }
  return problems;
}

bool CorpusReport::all_passed() const {
  return !cases.empty() &&
         std::all_of(cases.begin(), cases.end(),
                     [](const CaseResult& c) { return c.passed; });
}

CorpusReport RunCorpus(const std::string& manifest_path,
                       const RepairConfig& config, int case_jobs) {
  auto start = std::chrono::steady_clock::now();
  std::vector<CorpusCase> cases = LoadManifest(manifest_path);
  CorpusReport report;
  report.cases.resize(cases.size());
  ParallelFor(cases.size(), case_jobs, [&](std::size_t i) {
    report.cases[i] = RunCase(cases[i], config);
  });
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace loopfix
