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

#include "loopfix/interpreter.h"

#include <pthread.h>

#include <exception>
#include <limits>
#include <memory>
#include <unordered_map>
#include <utility>

#include "loopfix/parallel.h"
#include "loopfix/printer.h"
#include "loopfix/snapshot.h"
#include "loopfix/value.h"

namespace loopfix {
namespace {

struct RuntimeFault {
  std::string message;
};

struct AssertFault {
  std::string message;
};

struct CapAbort {
  InvocationKey key;
};

using Frame = std::vector<Value>;

std::string Where(const SourceLocation& loc) {
  if (!loc.valid()) return "";
  return " at " + std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

[[noreturn]] void Fault(const std::string& what, const SourceLocation& loc) {
  throw RuntimeFault{what + Where(loc)};
}

class Interpreter;

class FrameReader : public ScopeReader {
 public:
  FrameReader(Interpreter& interp, Frame& frame)
      : interp_(interp), frame_(frame) {}
  std::optional<std::int64_t> Read(const Expr& expr) const override;

 private:
  Interpreter& interp_;
  Frame& frame_;
};

class Interpreter {
 public:
  Interpreter(const Program& program, const MonitorConfig& config,
              const RunOptions& options)
      : program_(program), config_(config), options_(options) {}

  TestRun Run(const TestCase& test) {
    TestRun run;
    trace_ = &run.trace;
    TestOutcome& out = run.outcome;
    try {
      Frame frame(test.frame_size);
      ExecBlock(test.body, frame);
      out.completion = TestStatus::kPass;
    } catch (const AssertFault& f) {
      out.completion = TestStatus::kAssertionFailure;
      out.message = f.message;
    } catch (const RuntimeFault& f) {
      out.completion = TestStatus::kRuntimeError;
      out.message = f.message;
    } catch (const CapAbort& a) {
      out.completion = TestStatus::kCapExceeded;
      out.hang = a.key;
      out.message = "loop " + a.key.loop.ToString() + " execution " +
                    std::to_string(a.key.rank) + " exceeded " +
                    std::to_string(config_.global_cap) + " iterations";
    }
    out.status = out.completion;
    if (!trace_->exceeding.empty()) {
      const InvocationKey& first = trace_->exceeding.front();
      out.status = TestStatus::kCapExceeded;
      out.hang = first;
      if (out.completion != TestStatus::kCapExceeded) {
        std::string residual = out.message;
        out.message = "loop " + first.loop.ToString() + " execution " +
                      std::to_string(first.rank) + " forced to break at " +
                      std::to_string(config_.global_cap) + " iterations";
        if (!residual.empty()) out.message += "; then " + residual;
      }
    }
    for (auto& [stmt, state] : loops_) {
      if (state.monitor && state.monitor->collecting()) {
        run.trace.pairs = state.monitor->TakePairs();
      }
    }
    trace_ = nullptr;
    return run;
  }

  std::int64_t EvalScalar(const Expr& e, Frame& f) {
    switch (e.kind) {
      case Expr::Kind::kIntLit:
        return e.int_value;
      case Expr::Kind::kBoolLit:
        return e.bool_value ? 1 : 0;
      case Expr::Kind::kVar:
        return f[e.slot].scalar;
      case Expr::Kind::kIndex: {
        auto array = EvalArray(e.operands[0], f);
        std::int64_t index = EvalScalar(e.operands[1], f);
        if (index < 0 || static_cast<std::uint64_t>(index) >= array->size()) {
          Fault("index " + std::to_string(index) + " out of bounds for length " +
                    std::to_string(array->size()),
                e.location);
        }
        return (*array)[static_cast<std::size_t>(index)];
      }
      case Expr::Kind::kLen:
        return static_cast<std::int64_t>(EvalArray(e.operands[0], f)->size());
      case Expr::Kind::kUnary: {
        std::int64_t v = EvalScalar(e.operands[0], f);
        if (e.unary_op == UnaryOp::kNot) return v == 0 ? 1 : 0;
        if (v == std::numeric_limits<std::int64_t>::min()) {
          Fault("integer overflow", e.location);
        }
        return -v;
      }
      case Expr::Kind::kBinary:
        return EvalBinary(e, f);
      case Expr::Kind::kCall:
        return Call(e, f).scalar;
      case Expr::Kind::kCond:
        return EvalScalar(e.operands[0], f) != 0
                   ? EvalScalar(e.operands[1], f)
                   : EvalScalar(e.operands[2], f);
      case Expr::Kind::kArrayLit:
        break;
    }
    Fault("internal: array expression in scalar context", e.location);
  }

 private:
  struct LoopState {
    LoopTelemetry* telemetry = nullptr;
    std::unique_ptr<LoopMonitor> monitor;
    std::uint64_t plain_invocations = 0;
    std::unique_ptr<SnapshotSchema> schema;
  };

  enum class Flow : std::uint8_t { kNormal, kBreak, kReturn };

  std::int64_t EvalBinary(const Expr& e, Frame& f) {
    const Expr& lhs = e.operands[0];
    const Expr& rhs = e.operands[1];
    if (e.binary_op == BinaryOp::kAnd) {
      return EvalScalar(lhs, f) != 0 && EvalScalar(rhs, f) != 0 ? 1 : 0;
    }
    if (e.binary_op == BinaryOp::kOr) {
      return EvalScalar(lhs, f) != 0 || EvalScalar(rhs, f) != 0 ? 1 : 0;
    }
    std::int64_t a = EvalScalar(lhs, f);
    std::int64_t b = EvalScalar(rhs, f);
    std::int64_t r = 0;
    switch (e.binary_op) {
      case BinaryOp::kAdd:
        if (__builtin_add_overflow(a, b, &r)) Fault("integer overflow", e.location);
        return r;
      case BinaryOp::kSub:
        if (__builtin_sub_overflow(a, b, &r)) Fault("integer overflow", e.location);
        return r;
      case BinaryOp::kMul:
        if (__builtin_mul_overflow(a, b, &r)) Fault("integer overflow", e.location);
        return r;
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        if (b == 0) Fault("division by zero", e.location);
        if (a == std::numeric_limits<std::int64_t>::min() && b == -1) {
          Fault("integer overflow", e.location);
        }
        return e.binary_op == BinaryOp::kDiv ? a / b : a % b;
      case BinaryOp::kLt: return a < b;
      case BinaryOp::kLe: return a <= b;
      case BinaryOp::kGt: return a > b;
      case BinaryOp::kGe: return a >= b;
      case BinaryOp::kEq: return a == b;
      case BinaryOp::kNe: return a != b;
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        break;
    }
    return 0;
  }

  std::shared_ptr<std::vector<std::int64_t>> EvalArray(const Expr& e,
                                                       Frame& f) {
    switch (e.kind) {
      case Expr::Kind::kVar:
        return f[e.slot].array;
      case Expr::Kind::kArrayLit: {
        std::vector<std::int64_t> elements;
        elements.reserve(e.operands.size());
        for (const auto& el : e.operands) elements.push_back(EvalScalar(el, f));
        return std::make_shared<std::vector<std::int64_t>>(std::move(elements));
      }
      case Expr::Kind::kCall:
        return Call(e, f).array;
      case Expr::Kind::kCond:
        return EvalScalar(e.operands[0], f) != 0 ? EvalArray(e.operands[1], f)
                                                 : EvalArray(e.operands[2], f);
      default:
        Fault("internal: scalar expression in array context", e.location);
    }
  }

  Value Eval(const Expr& e, Frame& f) {
    if (e.type == Type::kIntArray) {
      Value v;
      v.type = Type::kIntArray;
      v.array = EvalArray(e, f);
      return v;
    }
    return Value{e.type, EvalScalar(e, f), nullptr};
  }

  Value Call(const Expr& e, Frame& f) {
    const FunctionDecl& fn = program_.functions[e.callee];
    Frame callee(fn.frame_size);
    for (std::size_t i = 0; i < e.operands.size(); ++i) {
      callee[i] = Eval(e.operands[i], f);
    }
    if (depth_ >= options_.max_call_depth) {
      Fault("call depth exceeded " + std::to_string(options_.max_call_depth),
            e.location);
    }
    ++depth_;
    Flow flow;
    try {
      flow = ExecBlock(fn.body, callee);
    } catch (...) {
      --depth_;
      throw;
    }
    --depth_;
    if (flow != Flow::kReturn && fn.return_type != Type::kVoid) {
      Fault("'" + fn.name + "' ended without returning a value", e.location);
    }
    Value result = std::move(return_value_);
    return_value_ = Value{};
    return result;
  }

  Flow ExecBlock(const std::vector<Stmt>& body, Frame& f) {
    for (const auto& s : body) {
      Flow flow = ExecStmt(s, f);
      if (flow != Flow::kNormal) return flow;
    }
    return Flow::kNormal;
  }

  Flow ExecStmt(const Stmt& s, Frame& f) {
    switch (s.kind) {
      case Stmt::Kind::kVarDecl:
      case Stmt::Kind::kAssign:
        f[s.slot] = Eval(s.exprs[0], f);
        return Flow::kNormal;
      case Stmt::Kind::kStore: {
        auto array = f[s.slot].array;
        std::int64_t index = EvalScalar(s.exprs[0], f);
        std::int64_t value = EvalScalar(s.exprs[1], f);
        if (index < 0 || static_cast<std::uint64_t>(index) >= array->size()) {
          Fault("index " + std::to_string(index) + " out of bounds for length " +
                    std::to_string(array->size()),
                s.location);
        }
        (*array)[static_cast<std::size_t>(index)] = value;
        return Flow::kNormal;
      }
      case Stmt::Kind::kIf:
        return EvalScalar(s.exprs[0], f) != 0 ? ExecBlock(s.body, f)
                                              : ExecBlock(s.else_body, f);
      case Stmt::Kind::kWhile:
        return ExecWhile(s, f);
      case Stmt::Kind::kMonitoredWhile:
        return ExecMonitored(s, f);
      case Stmt::Kind::kBreak:
        return Flow::kBreak;
      case Stmt::Kind::kReturn:
        if (!s.exprs.empty()) return_value_ = Eval(s.exprs[0], f);
        return Flow::kReturn;
      case Stmt::Kind::kExpr:
        Call(s.exprs[0], f);
        return Flow::kNormal;
      case Stmt::Kind::kAssert:
        if (EvalScalar(s.exprs[0], f) == 0) {
          throw AssertFault{"assertion '" + PrintExpr(s.exprs[0]) +
                            "' failed" + Where(s.location)};
        }
        return Flow::kNormal;
    }
    return Flow::kNormal;
  }

  LoopState& StateFor(const Stmt& s) {
    auto [it, inserted] = loops_.try_emplace(&s);
    LoopState& state = it->second;
    if (inserted) {
      LoopTelemetry& tel = trace_->loops[s.loop];
      tel.monitored = s.kind == Stmt::Kind::kMonitoredWhile;
      state.telemetry = &tel;
      if (tel.monitored) {
        state.monitor = std::make_unique<LoopMonitor>(s.loop, &config_);
        if (state.monitor->collecting()) {
          state.schema =
              std::make_unique<SnapshotSchema>(SnapshotSchemaFor(s));
        }
      }
    }
    return state;
  }

  Flow ExecWhile(const Stmt& s, Frame& f) {
    LoopState& state = StateFor(s);
    LoopTelemetry& tel = *state.telemetry;
    std::uint64_t rank = ++state.plain_invocations;
    std::size_t slot = tel.iterations.size();
    tel.iterations.push_back(0);
    tel.exits.push_back(ExitNature::kAborted);
    const Expr& guard = s.guard();
    std::uint64_t iters = 0;
    ExitNature nature = ExitNature::kConditional;
    Flow result = Flow::kNormal;
    try {
      while (true) {
        if (EvalScalar(guard, f) == 0) break;
        if (iters >= config_.global_cap) {
          tel.exits[slot] = ExitNature::kForced;
          throw CapAbort{InvocationKey{s.loop, rank}};
        }
        tel.iterations[slot] = ++iters;
        Flow flow = ExecBlock(s.body, f);
        if (flow == Flow::kBreak) {
          nature = ExitNature::kBreak;
          break;
        }
        if (flow == Flow::kReturn) {
          nature = ExitNature::kReturn;
          result = Flow::kReturn;
          break;
        }
      }
    } catch (const CapAbort& a) {
      if (!(a.key.loop == s.loop && a.key.rank == rank)) {
        tel.exits[slot] = ExitNature::kAborted;
      }
      throw;
    }
    tel.exits[slot] = nature;
    return result;
  }

  Flow ExecMonitored(const Stmt& s, Frame& f) {
    LoopState& state = StateFor(s);
    LoopMonitor& monitor = *state.monitor;
    std::uint64_t rank = monitor.BeginInvocation();
    std::size_t slot = rank - 1;
    state.telemetry->iterations.push_back(0);
    state.telemetry->exits.push_back(ExitNature::kAborted);
    const Expr& guard = s.guard();
    std::uint64_t iters = 0;
    ExitNature nature = ExitNature::kConditional;
    Flow result = Flow::kNormal;
    try {
      while (true) {
        bool guard_value = EvalScalar(guard, f) != 0;
        bool had_exceeding = monitor.has_exceeding_execution();
        bool stay = monitor.Decide(guard_value, iters);
        if (monitor.collecting()) {
          FrameReader reader(*this, f);
          monitor.Collect(stay,
                          SnapshotIteration(*state.schema, reader, guard_value));
        }
        if (!stay) {
          if (monitor.last_break_forced()) {
            nature = ExitNature::kForced;
            if (!had_exceeding && monitor.has_exceeding_execution()) {
              trace_->exceeding.push_back(InvocationKey{s.loop, rank});
            }
          }
          break;
        }
        state.telemetry->iterations[slot] = ++iters;
        Flow flow = ExecBlock(s.body, f);
        if (flow == Flow::kBreak) {
          nature = ExitNature::kBreak;
          break;
        }
        if (flow == Flow::kReturn) {
          nature = ExitNature::kReturn;
          result = Flow::kReturn;
          break;
        }
      }
    } catch (...) {
      monitor.EndInvocation(ExitNature::kAborted);
      state.telemetry->exits[slot] = ExitNature::kAborted;
      throw;
    }
    monitor.EndInvocation(nature);
    state.telemetry->exits[slot] = nature;
    return result;
  }

  const Program& program_;
  const MonitorConfig& config_;
  const RunOptions& options_;
  ExecutionTrace* trace_ = nullptr;
  std::unordered_map<const Stmt*, LoopState> loops_;
  Value return_value_;
  int depth_ = 0;
};

std::optional<std::int64_t> FrameReader::Read(const Expr& expr) const {
  try {
    return interp_.EvalScalar(expr, frame_);
  } catch (const RuntimeFault&) {
    return std::nullopt;
  }
}

struct ThreadJob {
  const Program* program;
  const TestCase* test;
  const MonitorConfig* config;
  const RunOptions* options;
  TestRun result;
  std::exception_ptr error;
};

void* RunJob(void* arg) {
  auto* job = static_cast<ThreadJob*>(arg);
  try {
    Interpreter interp(*job->program, *job->config, *job->options);
    job->result = interp.Run(*job->test);
  } catch (...) {
    job->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace

std::string_view TestStatusName(TestStatus status) {
  switch (status) {
    case TestStatus::kPass: return "pass";
    case TestStatus::kAssertionFailure: return "assertion-failure";
    case TestStatus::kRuntimeError: return "runtime-error";
    case TestStatus::kCapExceeded: return "cap-exceeded";
  }
  return "?";
}

std::uint64_t ExecutionTrace::Invocations(const LoopId& loop) const {
  auto it = loops.find(loop);
  return it == loops.end() ? 0 : it->second.iterations.size();
}

std::optional<std::uint64_t> ExecutionTrace::IterationRecord(
    const LoopId& loop, std::uint64_t rank) const {
  auto it = loops.find(loop);
  if (it == loops.end() || rank == 0 || rank > it->second.iterations.size()) {
    return std::nullopt;
  }
  return it->second.iterations[rank - 1];
}

std::optional<ExitNature> ExecutionTrace::Exit(const LoopId& loop,
                                               std::uint64_t rank) const {
  auto it = loops.find(loop);
  if (it == loops.end() || rank == 0 || rank > it->second.exits.size()) {
    return std::nullopt;
  }
  return it->second.exits[rank - 1];
}

TestRun RunTest(const Program& program, const TestCase& test,
                const MonitorConfig& config, const RunOptions& options) {
  ThreadJob job{&program, &test, &config, &options, {}, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, options.stack_bytes);
  pthread_t thread;
  int rc = pthread_create(&thread, &attr, &RunJob, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    // Fall back to the calling thread.
    RunJob(&job);
  } else {
    pthread_join(thread, nullptr);
  }
  if (job.error) std::rethrow_exception(job.error);
  return std::move(job.result);
}

TestRun RunTest(const Program& program, std::string_view test_name,
                const MonitorConfig& config, const RunOptions& options) {
  const TestCase* test = program.FindTest(test_name);
  if (test == nullptr) {
    throw Error(ErrorCode::kUsage, "no test named '" + std::string(test_name) + "'");
  }
  return RunTest(program, *test, config, options);
}

std::vector<NamedRun> RunSuite(const Program& program,
                               const std::vector<const TestCase*>& tests,
                               const MonitorConfig& config, int jobs,
                               const RunOptions& options) {
  std::vector<NamedRun> results(tests.size());
  for (std::size_t i = 0; i < tests.size(); ++i) {
    results[i].test = tests[i]->name;
  }
  ParallelFor(tests.size(), jobs, [&](std::size_t i) {
    results[i].run = RunTest(program, *tests[i], config, options);
  });
  return results;
}

std::vector<NamedRun> RunSuite(const Program& program,
                               const MonitorConfig& config, int jobs,
                               const RunOptions& options) {
  std::vector<const TestCase*> tests;
  for (const auto& t : program.tests) tests.push_back(&t);
  return RunSuite(program, tests, config, jobs, options);
}

}  // namespace loopfix
