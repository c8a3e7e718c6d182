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

#include "loopfix/synthesis.h"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "loopfix/smtlib.h"

namespace loopfix {
namespace {

using Clock = std::chrono::steady_clock;

// Component usage packed as one 4-bit counter per kind; counters stay below
// 8 so componentwise comparison works on the whole word.
using Usage = std::uint64_t;
constexpr Usage kHighBits = 0x88888888888ULL;
constexpr Usage kLowBits = 0x11111111111ULL;

Usage UnitUsage(GuardOp op) { return Usage{1} << (4 * static_cast<int>(op)); }

bool UsageLeq(Usage a, Usage b) {
  return (((b | kHighBits) - a) & kHighBits) == kHighBits;
}

bool WithinLimit(Usage u, int multiplicity) {
  return ((u + kLowBits * static_cast<Usage>(7 - multiplicity)) & kHighBits) == 0;
}

[[noreturn]] void OutOfTime(const std::string& why) {
  throw Error(ErrorCode::kTimeBudgetExceeded, "synthesis " + why);
}

class Enumerator {
 public:
  Enumerator(const PairSet& set, int stage, const SynthesisOptions& options,
             Deadline deadline)
      : set_(set),
        n_(set.pairs.size()),
        active_(ActiveComponents(stage)),
        multiplicity_(std::clamp(options.multiplicity, 1, 7)),
        max_cells_(options.max_cells),
        deadline_(deadline),
        scratch_(n_) {
    target_.reserve(n_);
    for (const auto& p : set.pairs) target_.push_back(p.output ? 1 : 0);
    max_size_ = static_cast<int>(active_.size()) * multiplicity_;
  }

  std::optional<GuardExpr> Run() {
    by_size_.resize(max_size_ + 1);
    for (std::size_t i = 0; i < set_.schema.size(); ++i) {
      for (std::size_t p = 0; p < n_; ++p) scratch_[p] = set_.pairs[p].inputs[i];
      Term t{GuardOp::kInput, static_cast<int>(i), {-1, -1, -1},
             set_.schema[i].type, 0, 0};
      if (Add(t)) return Build(found_);
    }
    for (int size = 1; size <= max_size_; ++size) {
      for (GuardOp op : active_) {
        if (Grow(op, size)) return Build(found_);
      }
    }
    return std::nullopt;
  }

 private:
  struct Term {
    GuardOp op;
    int input;
    std::array<int, 3> child;
    Type type;
    Usage usage;
    int size;
  };

  static int Slot(Type t) { return t == Type::kBool ? 1 : 0; }

  const std::vector<int>& Bucket(int size, Type type) const {
    return by_size_[size][Slot(type)];
  }

  const std::int64_t* ValuesOf(int id) const {
    return values_.data() + static_cast<std::size_t>(id) * n_;
  }

  std::uint64_t HashScratch(Type type) const {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(type);
    for (std::int64_t v : scratch_) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  // Stores the term whose values are in scratch_ unless an equivalent term
  // with no more usage exists. Returns true when it matches the target.
  bool Add(const Term& t) {
    std::uint64_t h = HashScratch(t.type);
    std::vector<int>& same = index_[h];
    for (int id : same) {
      if (terms_[id].type == t.type && UsageLeq(terms_[id].usage, t.usage) &&
          std::equal(scratch_.begin(), scratch_.end(), ValuesOf(id))) {
        return false;
      }
    }
    if ((terms_.size() + 1) * std::max<std::size_t>(n_, 1) > max_cells_) {
      OutOfTime("search space limit reached");
    }
    int id = static_cast<int>(terms_.size());
    terms_.push_back(t);
    values_.insert(values_.end(), scratch_.begin(), scratch_.end());
    same.push_back(id);
    by_size_[t.size][Slot(t.type)].push_back(id);
    if (t.type == Type::kBool && scratch_ == target_) {
      found_ = id;
      return true;
    }
    return false;
  }

  void Tick() {
    if ((++ticks_ & 1023) == 0 && Clock::now() > deadline_) {
      OutOfTime("time budget exceeded");
    }
  }

  bool Compute(GuardOp op, const std::int64_t* a, const std::int64_t* b,
               const std::int64_t* c) {
    for (std::size_t p = 0; p < n_; ++p) {
      std::int64_t r = 0;
      switch (op) {
        case GuardOp::kGt: r = a[p] > b[p]; break;
        case GuardOp::kGe: r = a[p] >= b[p]; break;
        case GuardOp::kEq: r = a[p] == b[p]; break;
        case GuardOp::kNe: r = a[p] != b[p]; break;
        case GuardOp::kNot: r = a[p] == 0; break;
        case GuardOp::kOr: r = (a[p] | b[p]) != 0; break;
        case GuardOp::kAnd: r = a[p] != 0 && b[p] != 0; break;
        case GuardOp::kAdd:
          if (__builtin_add_overflow(a[p], b[p], &r)) return false;
          break;
        case GuardOp::kSub:
          if (__builtin_sub_overflow(a[p], b[p], &r)) return false;
          break;
        case GuardOp::kMul:
          if (__builtin_mul_overflow(a[p], b[p], &r)) return false;
          break;
        case GuardOp::kIte: r = a[p] != 0 ? b[p] : c[p]; break;
        case GuardOp::kInput: return false;
      }
      scratch_[p] = r;
    }
    return true;
  }

  bool Combine(GuardOp op, int size, int a, int b, int c) {
    Tick();
    Usage u = UnitUsage(op) + terms_[a].usage;
    if (b >= 0) u += terms_[b].usage;
    if (c >= 0) u += terms_[c].usage;
    if (!WithinLimit(u, multiplicity_)) return false;
    if (!Compute(op, ValuesOf(a), b >= 0 ? ValuesOf(b) : nullptr,
                 c >= 0 ? ValuesOf(c) : nullptr)) {
      return false;
    }
    return Add(Term{op, -1, {a, b, c}, ResultType(op), u, size});
  }

  // Children come from smaller sizes, so the buckets read here never grow
  // while this runs.
  bool Grow(GuardOp op, int size) {
    int rest = size - 1;
    switch (Arity(op)) {
      case 1: {
        const std::vector<int>& xs = Bucket(rest, OperandType(op, 0));
        for (std::size_t i = 0, n = xs.size(); i < n; ++i) {
          if (Combine(op, size, xs[i], -1, -1)) return true;
        }
        return false;
      }
      case 2: {
        bool commutative = IsCommutative(op);
        bool allow_same = op == GuardOp::kAdd || op == GuardOp::kMul;
        for (int s1 = 0; s1 <= rest; ++s1) {
          int s2 = rest - s1;
          if (commutative && s1 > s2) break;
          const std::vector<int>& xs = Bucket(s1, OperandType(op, 0));
          const std::vector<int>& ys = Bucket(s2, OperandType(op, 1));
          std::size_t nx = xs.size();
          std::size_t ny = ys.size();
          for (std::size_t i = 0; i < nx; ++i) {
            std::size_t j0 = 0;
            if (commutative && s1 == s2) j0 = allow_same ? i : i + 1;
            for (std::size_t j = j0; j < ny; ++j) {
              if (!allow_same && xs[i] == ys[j]) continue;
              if (Combine(op, size, xs[i], ys[j], -1)) return true;
            }
          }
        }
        return false;
      }
      case 3: {
        for (int s1 = 0; s1 <= rest; ++s1) {
          for (int s2 = 0; s1 + s2 <= rest; ++s2) {
            int s3 = rest - s1 - s2;
            const std::vector<int>& cs = Bucket(s1, Type::kBool);
            const std::vector<int>& ts = Bucket(s2, Type::kInt);
            const std::vector<int>& es = Bucket(s3, Type::kInt);
            std::size_t nc = cs.size();
            std::size_t nt = ts.size();
            std::size_t ne = es.size();
            for (std::size_t i = 0; i < nc; ++i) {
              for (std::size_t j = 0; j < nt; ++j) {
                for (std::size_t k = 0; k < ne; ++k) {
                  if (ts[j] == es[k]) continue;
                  if (Combine(op, size, cs[i], ts[j], es[k])) return true;
                }
              }
            }
          }
        }
        return false;
      }
    }
    return false;
  }

  GuardExpr Build(int id) const {
    const Term& t = terms_[id];
    if (t.op == GuardOp::kInput) return GuardExpr::Input(t.input);
    std::vector<GuardExpr> args;
    for (int i = 0; i < Arity(t.op); ++i) args.push_back(Build(t.child[i]));
    return GuardExpr::Node(t.op, std::move(args));
  }

  const PairSet& set_;
  std::size_t n_;
  std::vector<GuardOp> active_;
  int multiplicity_;
  std::size_t max_cells_;
  Deadline deadline_;
  int max_size_ = 0;
  std::vector<std::int64_t> target_;
  std::vector<std::int64_t> scratch_;
  std::vector<Term> terms_;
  std::vector<std::int64_t> values_;
  std::vector<std::array<std::vector<int>, 2>> by_size_;
  std::unordered_map<std::uint64_t, std::vector<int>> index_;
  std::uint64_t ticks_ = 0;
  int found_ = -1;
};

}  // namespace

bool CheckCandidate(const GuardExpr& expr, const PairSet& set) {
  if (TypeOfGuard(expr, set.schema) != Type::kBool) {
    throw Error(ErrorCode::kInternal, "candidate guard is not boolean");
  }
  for (const auto& p : set.pairs) {
    std::optional<std::int64_t> v = EvalGuard(expr, p.inputs);
    if (!v || (*v != 0) != p.output) return false;
  }
  return true;
}

bool HasConflict(const PairSet& set) {
  std::unordered_map<std::uint64_t, std::vector<const ContextPair*>> seen;
  for (const auto& p : set.pairs) {
    std::uint64_t h = 0;
    for (std::int64_t v : p.inputs) h = h * 1000003 ^ static_cast<std::uint64_t>(v);
    for (const ContextPair* q : seen[h]) {
      if (q->inputs == p.inputs && q->output != p.output) return true;
    }
    seen[h].push_back(&p);
  }
  return false;
}

std::optional<GuardExpr> SolveStageEnumerative(const PairSet& set, int stage,
                                               const SynthesisOptions& options,
                                               Deadline deadline) {
  Enumerator e(set, stage, options, deadline);
  return e.Run();
}

SynthesisResult Synthesize(const PairSet& set, const SynthesisOptions& options) {
  if (set.pairs.empty()) {
    throw Error(ErrorCode::kEmptySpecification, "the pair set is empty");
  }
  if (options.max_stage < 0 || options.max_stage > kMaxStage) {
    throw Error(ErrorCode::kUsage, "stage budget must be between 0 and " +
                                       std::to_string(kMaxStage));
  }
  Clock::time_point start = Clock::now();
  Deadline deadline = Deadline::max();
  if (options.time_budget_seconds) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(
                               *options.time_budget_seconds));
  }
  if (HasConflict(set)) {
    throw Error(ErrorCode::kSynthesisExhausted,
                "pairs with identical inputs require different outputs");
  }
  SynthesisStats stats;
  for (int stage = 0; stage <= options.max_stage; ++stage) {
    ++stats.formulations;
    Clock::time_point t0 = Clock::now();
    std::optional<GuardExpr> found =
        options.backend == SynthesisBackend::kSmt
            ? SolveStageSmt(set, stage, options.multiplicity,
                            options.solver_command, deadline)
            : SolveStageEnumerative(set, stage, options, deadline);
    stats.solver_seconds +=
        std::chrono::duration<double>(Clock::now() - t0).count();
    if (!found) continue;
    if (!CheckCandidate(*found, set)) {
      throw Error(ErrorCode::kInternal,
                  "stage " + std::to_string(stage) +
                      " produced a guard inconsistent with the pairs: " +
                      GuardToString(*found, set.schema));
    }
    stats.stage = stage;
    stats.components = ComponentCount(*found);
    stats.component_types = ComponentTypeCount(*found);
    return SynthesisResult{std::move(*found), stats};
  }
  throw Error(ErrorCode::kSynthesisExhausted,
              "no guard over " + std::to_string(set.schema.size()) +
                  " inputs fits the pairs up to stage " +
                  std::to_string(options.max_stage));
}

}  // namespace loopfix
