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


// Python bindings. Documents cross the boundary as JSON text; the package
// wrapper decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "loopfix/angelic.h"
#include "loopfix/collection.h"
#include "loopfix/corpus.h"
#include "loopfix/detection.h"
#include "loopfix/error.h"
#include "loopfix/instrument.h"
#include "loopfix/parser.h"
#include "loopfix/printer.h"
#include "loopfix/repair.h"
#include "loopfix/report.h"
#include "loopfix/smtlib.h"
#include "loopfix/synthesis.h"

namespace py = pybind11;

namespace loopfix {
namespace {

struct Front {
  Program instrumented;
  HangingReport report;
  LoopId loop;
};

Front Prepare(const std::string& source, std::uint64_t cap,
              const std::optional<std::string>& loop, int jobs) {
  Front front;
  front.instrumented = Instrument(Parse(source));
  front.report = DetectInfiniteLoops(front.instrumented, cap, jobs);
  if (front.report.empty()) {
    throw Error(ErrorCode::kNoInfiniteLoopDetected,
                "no test hangs within " + std::to_string(cap) + " iterations");
  }
  front.loop = loop ? LoopId::FromString(*loop) : front.report.Loops().front();
  return front;
}

SynthesisOptions SynthesisFrom(int max_stage, std::optional<double> time_budget,
                               int multiplicity, const std::string& backend,
                               const std::string& solver) {
  SynthesisOptions o;
  o.max_stage = max_stage;
  o.time_budget_seconds = time_budget;
  o.multiplicity = multiplicity;
  if (backend == "smt") {
    o.backend = SynthesisBackend::kSmt;
    o.solver_command = solver.empty() ? DefaultSolverCommand() : solver;
  } else if (backend != "enumerative") {
    throw Error(ErrorCode::kUsage, "unknown backend '" + backend + "'");
  }
  return o;
}

std::string Detect(const std::string& source, std::uint64_t cap, int jobs) {
  return ToJson(DetectInfiniteLoops(Instrument(Parse(source)), cap, jobs)).dump();
}

std::string Mine(const std::string& source, std::uint64_t cap,
                 std::optional<std::string> loop, const std::string& strategy,
                 int jobs) {
  Front f = Prepare(source, cap, loop, jobs);
  MiningOptions options;
  options.global_cap = cap;
  options.jobs = jobs;
  if (strategy == "gallop") {
    options.strategy = MiningStrategy::kGallop;
  } else if (strategy != "linear") {
    throw Error(ErrorCode::kUsage, "unknown mining strategy '" + strategy + "'");
  }
  std::map<std::string, bool> idempotent =
      IdempotenceProbe(f.loop, f.instrumented, f.report, cap, jobs);
  AngelicRecord record = FindThresholds(f.loop, f.instrumented, f.report, options);
  return ToJson(record, idempotent).dump();
}

std::string Collect(const std::string& source, std::uint64_t cap,
                    std::optional<std::string> loop, int jobs) {
  Front f = Prepare(source, cap, loop, jobs);
  MiningOptions options;
  options.global_cap = cap;
  options.jobs = jobs;
  AngelicRecord record = FindThresholds(f.loop, f.instrumented, f.report, options);
  Specification spec = BuildSpecification(f.loop, f.instrumented, f.report,
                                          record, CollectionOptions{cap, jobs});
  Json doc = ToJson(spec);
  doc["pairset"] = SerializePairSet(spec.pairs);
  return doc.dump();
}

std::string Synth(const std::string& pairs, int max_stage,
                  std::optional<double> time_budget, int multiplicity,
                  const std::string& backend, const std::string& solver) {
  PairSet set = ParsePairSet(pairs);
  SynthesisResult r = Synthesize(
      set, SynthesisFrom(max_stage, time_budget, multiplicity, backend, solver));
  return ToJson(r, set, false).dump();
}

std::string RepairSource(const std::string& source, const std::string& file_name,
                         std::uint64_t cap, std::optional<std::string> loop,
                         bool simultaneous, int max_stage,
                         std::optional<double> time_budget, int multiplicity,
                         const std::string& backend, const std::string& solver,
                         int jobs, bool timings) {
  RepairConfig config;
  config.global_cap = cap;
  config.simultaneous = simultaneous;
  config.jobs = jobs;
  config.synthesis =
      SynthesisFrom(max_stage, time_budget, multiplicity, backend, solver);
  if (loop) config.loop = LoopId::FromString(*loop);
  RepairOutcome out = RepairAll(Parse(source), config, file_name);
  Json doc = ToJson(out, timings);
  doc["patched_source"] = PrettyPrint(out.final_program);
  return doc.dump();
}

std::string Corpus(const std::string& manifest, int case_jobs, bool timings) {
  return ToJson(RunCorpus(manifest, {}, case_jobs), timings).dump();
}

}  // namespace
}  // namespace loopfix

PYBIND11_MODULE(_core, m) {
  using namespace loopfix;
  m.doc() = "Native core of loopfix.";

  // Owned for the life of the interpreter.
  static PyObject* error_type =
      py::exception<Error>(m, "LoopfixError").release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::handle type(error_type);
      py::object err = type(e.detail());
      err.attr("code") = std::string(ErrorCodeName(e.code()));
      err.attr("exit_code") = ExitCodeFor(e.code());
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  m.attr("DEFAULT_GLOBAL_CAP") = kDefaultGlobalCap;
  m.attr("MAX_STAGE") = kMaxStage;

  m.def("pretty_print", [](const std::string& s) { return PrettyPrint(Parse(s)); },
        py::arg("source"));
  m.def("instrument",
        [](const std::string& s) { return PrettyPrint(Instrument(Parse(s))); },
        py::arg("source"));
  m.def("detect", &Detect, py::arg("source"),
        py::arg("max_iterations") = kDefaultGlobalCap, py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("mine", &Mine, py::arg("source"),
        py::arg("max_iterations") = kDefaultGlobalCap,
        py::arg("loop") = std::nullopt, py::arg("strategy") = "linear",
        py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("collect", &Collect, py::arg("source"),
        py::arg("max_iterations") = kDefaultGlobalCap,
        py::arg("loop") = std::nullopt, py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("synthesize", &Synth, py::arg("pairs"), py::arg("max_stage") = kMaxStage,
        py::arg("time_budget") = std::nullopt, py::arg("multiplicity") = 1,
        py::arg("backend") = "enumerative", py::arg("solver") = "",
        py::call_guard<py::gil_scoped_release>());
  m.def("repair", &RepairSource, py::arg("source"),
        py::arg("file_name") = "program.lp",
        py::arg("max_iterations") = kDefaultGlobalCap,
        py::arg("loop") = std::nullopt, py::arg("simultaneous") = false,
        py::arg("max_stage") = kMaxStage, py::arg("time_budget") = std::nullopt,
        py::arg("multiplicity") = 1, py::arg("backend") = "enumerative",
        py::arg("solver") = "", py::arg("jobs") = 1, py::arg("timings") = false,
        py::call_guard<py::gil_scoped_release>());
  m.def("run_corpus", &Corpus, py::arg("manifest"), py::arg("case_jobs") = 1,
        py::arg("timings") = false, py::call_guard<py::gil_scoped_release>());
}
