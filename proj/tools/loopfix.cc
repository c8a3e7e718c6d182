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

// Command-line driver for the repair pipeline and its stages.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "loopfix/angelic.h"
#include "loopfix/collection.h"
#include "loopfix/corpus.h"
#include "loopfix/detection.h"
#include "loopfix/error.h"
#include "loopfix/instrument.h"
#include "loopfix/io.h"
#include "loopfix/parser.h"
#include "loopfix/printer.h"
#include "loopfix/repair.h"
#include "loopfix/report.h"
#include "loopfix/smtlib.h"
#include "loopfix/synthesis.h"

namespace loopfix {
namespace {

struct Flags {
  std::string source;
  std::uint64_t max_iterations = kDefaultGlobalCap;
  std::string format = "text";
  int jobs = 1;
  bool timings = false;
  std::string output;
  std::string loop;
  std::optional<std::uint64_t> probe_budget;
  std::string mining_strategy = "linear";
  std::optional<double> mining_time_budget;
  int stage_budget = kMaxStage;
  std::optional<double> time_budget;
  std::string backend;
  std::string solver;
  int multiplicity = 1;
  std::string emit_smtlib;
  bool emit_unvalidated = false;
  bool simultaneous = false;
  int case_jobs = 1;
};

bool Json(const Flags& f) { return f.format == "json"; }

void Emit(const Flags& f, const loopfix::Json& doc, const std::string& text) {
  if (Json(f)) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

SynthesisOptions SynthesisFrom(const Flags& f) {
  SynthesisOptions o;
  o.max_stage = f.stage_budget;
  o.time_budget_seconds = f.time_budget;
  o.multiplicity = f.multiplicity;
  const char* env = std::getenv("LOOPFIX_SOLVER_CMD");
  bool env_solver = env != nullptr && *env != '\0';
  if (f.backend == "smt" || !f.solver.empty() ||
      (f.backend.empty() && env_solver)) {
    o.backend = SynthesisBackend::kSmt;
    o.solver_command = f.solver.empty() ? DefaultSolverCommand() : f.solver;
  }
  return o;
}

MiningOptions MiningFrom(const Flags& f) {
  MiningOptions m;
  m.global_cap = f.max_iterations;
  m.probe_budget = f.probe_budget;
  m.strategy = f.mining_strategy == "gallop" ? MiningStrategy::kGallop
                                             : MiningStrategy::kLinear;
  m.time_budget_seconds = f.mining_time_budget;
  m.jobs = f.jobs;
  return m;
}

RepairConfig RepairFrom(const Flags& f) {
  RepairConfig c;
  c.global_cap = f.max_iterations;
  c.probe_budget = f.probe_budget;
  c.mining_strategy = MiningFrom(f).strategy;
  c.mining_time_budget_seconds = f.mining_time_budget;
  c.synthesis = SynthesisFrom(f);
  c.jobs = f.jobs;
  c.emit_unvalidated = f.emit_unvalidated;
  c.simultaneous = f.simultaneous;
  if (!f.loop.empty()) c.loop = LoopId::FromString(f.loop);
  return c;
}

// Parses, instruments and detects; picks the loop to work on.
struct Front {
  Program program;
  Program instrumented;
  HangingReport report;
  LoopId loop;
};

Front Prepare(const Flags& f) {
  Front front;
  front.program = Parse(ReadTextFile(f.source));
  front.instrumented = Instrument(front.program);
  front.report =
      DetectInfiniteLoops(front.instrumented, f.max_iterations, f.jobs);
  if (front.report.empty()) {
    throw Error(ErrorCode::kNoInfiniteLoopDetected,
                "no test hangs within " + std::to_string(f.max_iterations) +
                    " iterations");
  }
  front.loop = front.report.Loops().front();
  if (!f.loop.empty()) {
    front.loop = LoopId::FromString(f.loop);
    if (front.report.EntriesFor(front.loop).empty()) {
      throw Error(ErrorCode::kNoInfiniteLoopDetected,
                  "loop " + f.loop + " does not hang");
    }
  }
  return front;
}

void WriteOrPrint(const Flags& f, const std::string& text) {
  if (f.output.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(f.output, text);
  }
}

void EmitSmtlib(const Flags& f, const PairSet& set, const SynthesisStats& s) {
  if (f.emit_smtlib.empty()) return;
  WriteTextFile(f.emit_smtlib,
                EncodeConstraints(set, s.stage, f.multiplicity));
}

int Detect(const Flags& f) {
  Program program = Parse(ReadTextFile(f.source));
  HangingReport report =
      DetectInfiniteLoops(Instrument(program), f.max_iterations, f.jobs);
  Emit(f, ToJson(report), ToText(report));
  return 0;
}

int Mine(const Flags& f) {
  Front front = Prepare(f);
  std::map<std::string, bool> idempotent = IdempotenceProbe(
      front.loop, front.instrumented, front.report, f.max_iterations, f.jobs);
  AngelicRecord record = FindThresholds(front.loop, front.instrumented,
                                        front.report, MiningFrom(f));
  Emit(f, ToJson(record, idempotent), ToText(record, idempotent));
  return 0;
}

int Collect(const Flags& f) {
  Front front = Prepare(f);
  AngelicRecord record = FindThresholds(front.loop, front.instrumented,
                                        front.report, MiningFrom(f));
  Specification spec =
      BuildSpecification(front.loop, front.instrumented, front.report, record,
                         CollectionOptions{f.max_iterations, f.jobs});
  std::string text = SerializePairSet(spec.pairs);
  if (Json(f)) {
    loopfix::Json doc = ToJson(spec);
    if (f.output.empty()) doc["pairset"] = text;
    std::cout << doc.dump(2) << "\n";
    if (!f.output.empty()) WriteTextFile(f.output, text);
  } else {
    WriteOrPrint(f, text);
  }
  return 0;
}

int Synth(const Flags& f) {
  PairSet set = ParsePairSet(ReadTextFile(f.source));
  SynthesisResult result = Synthesize(set, SynthesisFrom(f));
  EmitSmtlib(f, set, result.stats);
  Emit(f, ToJson(result, set, f.timings), ToText(result, set, f.timings));
  return 0;
}

int RepairCommand(const Flags& f) {
  Program program = Parse(ReadTextFile(f.source));
  std::string name = std::filesystem::path(f.source).filename().string();
  RepairOutcome outcome = RepairAll(program, RepairFrom(f), name);
  if (!outcome.patches.empty()) {
    const Patch& last = outcome.patches.back();
    EmitSmtlib(f, last.pairs, last.stats);
  }
  if (!f.output.empty()) {
    WriteTextFile(f.output, PrettyPrint(outcome.final_program));
  }
  Emit(f, ToJson(outcome, f.timings), ToText(outcome, f.timings));
  bool ok = outcome.final_validation.all_pass &&
            std::all_of(outcome.patches.begin(), outcome.patches.end(),
                        [](const Patch& p) { return p.validation.all_pass; });
  return ok ? 0 : ExitCodeFor(ErrorCode::kValidationFailed);
}

int Corpus(const Flags& f) {
  CorpusReport report = RunCorpus(f.source, RepairFrom(f), f.case_jobs);
  Emit(f, ToJson(report, f.timings), ToText(report, f.timings));
  return report.all_passed() ? 0 : 1;
}

void AddCommon(CLI::App* cmd, Flags& f) {
  cmd->add_option("--max-iterations", f.max_iterations,
                  "Iteration cap per loop execution")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", f.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--jobs", f.jobs, "Parallel test runs")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--timings", f.timings, "Include per-stage times");
}

void AddMining(CLI::App* cmd, Flags& f) {
  cmd->add_option("--loop", f.loop, "Loop id (function#index)");
  cmd->add_option("--probe-budget", f.probe_budget,
                  "Test runs allowed per hanging test while mining");
  cmd->add_option("--mining-strategy", f.mining_strategy)
      ->check(CLI::IsMember({"linear", "gallop"}));
  cmd->add_option("--mining-time-budget", f.mining_time_budget,
                  "Seconds allowed for mining");
}

void AddSynthesis(CLI::App* cmd, Flags& f) {
  cmd->add_option("--stage-budget", f.stage_budget,
                  "Highest component bundle to try")
      ->check(CLI::Range(0, kMaxStage));
  cmd->add_option("--time-budget", f.time_budget, "Seconds for synthesis");
  cmd->add_option("--backend", f.backend)
      ->check(CLI::IsMember({"enumerative", "smt"}));
  cmd->add_option("--solver", f.solver,
                  "SMT-LIB2 solver command (implies --backend smt)");
  cmd->add_option("--multiplicity", f.multiplicity,
                  "Instances of each component per stage")
      ->check(CLI::Range(1, 7));
  cmd->add_option("--emit-smtlib", f.emit_smtlib,
                  "Write the constraint document of the solved stage");
}

int Main(int argc, char** argv) {
  CLI::App app{"Repairs infinite loops by synthesizing a new loop guard."};
  app.require_subcommand(1);
  Flags f;

  CLI::App* detect = app.add_subcommand("detect", "Report hanging tests");
  detect->add_option("file", f.source)->required();
  AddCommon(detect, f);

  CLI::App* mine = app.add_subcommand("mine", "Mine angelic records");
  mine->add_option("file", f.source)->required();
  AddCommon(mine, f);
  AddMining(mine, f);

  CLI::App* collect = app.add_subcommand("collect", "Collect the pair set");
  collect->add_option("file", f.source)->required();
  collect->add_option("-o,--output", f.output, "Pair set file");
  AddCommon(collect, f);
  AddMining(collect, f);

  CLI::App* synth = app.add_subcommand("synth", "Synthesize from a pair set");
  synth->add_option("pairs", f.source)->required();
  AddCommon(synth, f);
  AddSynthesis(synth, f);

  CLI::App* repair = app.add_subcommand("repair", "Repair a program");
  repair->add_option("file", f.source)->required();
  repair->add_option("-o,--output", f.output, "Write the repaired program");
  repair->add_flag("--emit-unvalidated", f.emit_unvalidated,
                   "Report patches even if validation fails");
  repair->add_flag("--simultaneous", f.simultaneous,
                   "Reject inputs where several loops hang");
  AddCommon(repair, f);
  AddMining(repair, f);
  AddSynthesis(repair, f);

  CLI::App* corpus = app.add_subcommand("corpus", "Run the corpus manifest");
  f.source = "corpus/manifest.json";
  corpus->add_option("manifest", f.source);
  corpus->add_option("--case-jobs", f.case_jobs, "Cases run in parallel")
      ->check(CLI::PositiveNumber);
  AddCommon(corpus, f);
  AddMining(corpus, f);
  AddSynthesis(corpus, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ExitCodeFor(ErrorCode::kUsage);
  }

  try {
    if (*detect) return Detect(f);
    if (*mine) return Mine(f);
    if (*collect) return Collect(f);
    if (*synth) return Synth(f);
    if (*repair) return RepairCommand(f);
    return Corpus(f);
  } catch (const Error& e) {
    if (Json(f)) {
      std::cout << ToJson(e).dump(2) << "\n";
    } else {
      std::cerr << "loopfix: " << ErrorCodeName(e.code()) << ": " << e.what()
                << "\n";
    }
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "loopfix: internal error: " << e.what() << "\n";
    return ExitCodeFor(ErrorCode::kInternal);
  }
}

}  // namespace
}  // namespace loopfix

int main(int argc, char** argv) { return loopfix::Main(argc, argv); }
