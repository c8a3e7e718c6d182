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

#include "loopfix/smtlib.h"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace loopfix {
namespace {

std::string Literal(Type type, std::int64_t v) {
  if (type == Type::kBool) return v != 0 ? "true" : "false";
  if (v < 0) {
    // Avoids negating INT64_MIN.
    std::string digits = std::to_string(v).substr(1);
    return "(- " + digits + ")";
  }
  return std::to_string(v);
}

std::string SortOf(Type type) { return type == Type::kBool ? "Bool" : "Int"; }

std::string Sum(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  if (terms.size() == 1) return terms[0];
  std::string out = "(+";
  for (const auto& t : terms) out += " " + t;
  return out + ")";
}

std::string AnyOf(const std::vector<std::string>& terms) {
  if (terms.empty()) return "false";
  if (terms.size() == 1) return terms[0];
  std::string out = "(or";
  for (const auto& t : terms) out += " " + t;
  return out + ")";
}

std::string Apply(GuardOp op, const std::vector<std::string>& a) {
  switch (op) {
    case GuardOp::kGt: return "(> " + a[0] + " " + a[1] + ")";
    case GuardOp::kGe: return "(>= " + a[0] + " " + a[1] + ")";
    case GuardOp::kEq: return "(= " + a[0] + " " + a[1] + ")";
    case GuardOp::kNe: return "(not (= " + a[0] + " " + a[1] + "))";
    case GuardOp::kNot: return "(not " + a[0] + ")";
    case GuardOp::kOr: return "(or " + a[0] + " " + a[1] + ")";
    case GuardOp::kAnd: return "(and " + a[0] + " " + a[1] + ")";
    case GuardOp::kAdd: return "(+ " + a[0] + " " + a[1] + ")";
    case GuardOp::kSub: return "(- " + a[0] + " " + a[1] + ")";
    case GuardOp::kMul: return "(* " + a[0] + " " + a[1] + ")";
    case GuardOp::kIte: return "(ite " + a[0] + " " + a[1] + " " + a[2] + ")";
    case GuardOp::kInput: break;
  }
  return "";
}

struct Layout {
  int n = 0;
  std::vector<GuardOp> comps;

  Type SourceType(const PairSet& set, int s) const {
    return s < n ? set.schema[s].type : ResultType(comps[s - n]);
  }
  // Sources that may feed port p of component c.
  std::vector<int> Candidates(const PairSet& set, int c, int p) const {
    Type want = OperandType(comps[c], p);
    std::vector<int> out;
    for (int s = 0; s < n + static_cast<int>(comps.size()); ++s) {
      if (s == n + c) continue;
      if (SourceType(set, s) == want) out.push_back(s);
    }
    return out;
  }
};

std::string Sel(int c, int p) {
  return "sel_" + std::to_string(c) + "_" + std::to_string(p);
}
std::string Act(int c) { return "act_" + std::to_string(c); }
std::string Rank(int c) { return "rank_" + std::to_string(c); }
std::string Out(int c, std::size_t i) {
  return "v_" + std::to_string(c) + "_" + std::to_string(i);
}
std::string In(int c, int p, std::size_t i) {
  return "in_" + std::to_string(c) + "_" + std::to_string(p) + "_" +
         std::to_string(i);
}

// Tokenizer for get-value output.
class SExpr {
 public:
  explicit SExpr(std::string_view text) : text_(text) {}

  std::map<std::string, std::string> Bindings() {
    std::map<std::string, std::string> out;
    Expect('(');
    while (Peek() == '(') {
      Expect('(');
      std::string name = Atom();
      std::string value = Value();
      Expect(')');
      out[name] = value;
    }
    Expect(')');
    return out;
  }

 private:
  char Peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void Expect(char c) {
    if (Peek() != c) {
      throw Error(ErrorCode::kInternal,
                  std::string("malformed solver model: expected '") + c + "'");
    }
    ++pos_;
  }
  std::string Atom() {
    Peek();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) throw Error(ErrorCode::kInternal, "malformed solver model");
    return std::string(text_.substr(start, pos_ - start));
  }
  // Atoms, or "(- k)" folded to "-k".
  std::string Value() {
    if (Peek() != '(') return Atom();
    Expect('(');
    std::string head = Atom();
    std::string arg = Atom();
    Expect(')');
    if (head != "-") throw Error(ErrorCode::kInternal, "malformed solver model value");
    return "-" + arg;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<GuardOp> StageComponents(int stage, int multiplicity) {
  std::vector<GuardOp> comps;
  for (GuardOp op : ActiveComponents(stage)) {
    for (int r = 0; r < multiplicity; ++r) comps.push_back(op);
  }
  return comps;
}

std::string EncodeConstraints(const PairSet& set, int stage, int multiplicity) {
  Layout lay{static_cast<int>(set.schema.size()),
             StageComponents(stage, multiplicity)};
  int m = static_cast<int>(lay.comps.size());
  int total = lay.n + m;
  std::ostringstream out;
  out << "; guard synthesis: " << set.schema.size() << " inputs, "
      << set.pairs.size() << " pairs, " << m << " components\n";
  for (int s = 0; s < lay.n; ++s) {
    out << "; source " << s << ": " << set.schema[s].name << "\n";
  }
  for (int c = 0; c < m; ++c) {
    out << "; source " << lay.n + c << ": " << GuardOpName(lay.comps[c]) << "\n";
  }
  bool nonlinear = false;
  for (GuardOp op : lay.comps) nonlinear |= op == GuardOp::kMul;
  out << "(set-option :produce-models true)\n";
  out << "(set-logic " << (nonlinear ? "QF_NIA" : "QF_LIA") << ")\n";
  out << "(declare-const root Int)\n";
  for (int c = 0; c < m; ++c) {
    out << "(declare-const " << Act(c) << " Bool)\n";
    out << "(declare-const " << Rank(c) << " Int)\n";
    for (int p = 0; p < Arity(lay.comps[c]); ++p) {
      out << "(declare-const " << Sel(c, p) << " Int)\n";
    }
  }

  // Wiring: typed selectors, acyclicity, single use.
  std::vector<std::vector<std::string>> uses(m);
  for (int c = 0; c < m; ++c) {
    for (int p = 0; p < Arity(lay.comps[c]); ++p) {
      std::vector<std::string> choices;
      for (int s : lay.Candidates(set, c, p)) {
        choices.push_back("(= " + Sel(c, p) + " " + std::to_string(s) + ")");
        if (s >= lay.n) {
          int src = s - lay.n;
          out << "(assert (=> (and " << Act(c) << " (= " << Sel(c, p) << " "
              << s << ")) (and " << Act(src) << " (< " << Rank(src) << " "
              << Rank(c) << "))))\n";
          uses[src].push_back("(ite (and " + Act(c) + " (= " + Sel(c, p) +
                              " " + std::to_string(s) + ")) 1 0)");
        }
      }
      out << "(assert (=> " << Act(c) << " " << AnyOf(choices) << "))\n";
    }
  }
  std::vector<std::string> roots;
  for (int s = 0; s < total; ++s) {
    if (lay.SourceType(set, s) != Type::kBool) continue;
    roots.push_back("(= root " + std::to_string(s) + ")");
    if (s >= lay.n) {
      uses[s - lay.n].push_back("(ite (= root " + std::to_string(s) + ") 1 0)");
    }
  }
  out << "(assert " << AnyOf(roots) << ")\n";
  for (int c = 0; c < m; ++c) {
    out << "(assert (= " << Act(c) << " (= " << Sum(uses[c]) << " 1)))\n";
  }

  // Semantics per pair.
  for (std::size_t i = 0; i < set.pairs.size(); ++i) {
    const ContextPair& pair = set.pairs[i];
    auto value = [&](int s) {
      return s < lay.n ? Literal(set.schema[s].type, pair.inputs[s])
                       : Out(s - lay.n, i);
    };
    for (int c = 0; c < m; ++c) {
      out << "(declare-const " << Out(c, i) << " "
          << SortOf(ResultType(lay.comps[c])) << ")\n";
    }
    for (int c = 0; c < m; ++c) {
      GuardOp op = lay.comps[c];
      std::vector<std::string> ports;
      for (int p = 0; p < Arity(op); ++p) {
        out << "(declare-const " << In(c, p, i) << " "
            << SortOf(OperandType(op, p)) << ")\n";
        for (int s : lay.Candidates(set, c, p)) {
          out << "(assert (=> (= " << Sel(c, p) << " " << s << ") (= "
              << In(c, p, i) << " " << value(s) << ")))\n";
        }
        ports.push_back(In(c, p, i));
      }
      out << "(assert (=> " << Act(c) << " (= " << Out(c, i) << " "
          << Apply(op, ports) << ")))\n";
    }
    for (int s = 0; s < total; ++s) {
      if (lay.SourceType(set, s) != Type::kBool) continue;
      std::string want = pair.output ? "true" : "false";
      if (s < lay.n) {
        if ((pair.inputs[s] != 0) != pair.output) {
          out << "(assert (not (= root " << s << ")))\n";
        }
      } else {
        out << "(assert (=> (= root " << s << ") (= " << Out(s - lay.n, i)
            << " " << want << ")))\n";
      }
    }
  }
  out << "(check-sat)\n";
  out << "(get-value (root";
  for (int c = 0; c < m; ++c) {
    out << ' ' << Act(c);
    for (int p = 0; p < Arity(lay.comps[c]); ++p) out << ' ' << Sel(c, p);
  }
  out << "))\n";
  return out.str();
}

std::string DefaultSolverCommand() {
  const char* env = std::getenv("LOOPFIX_SOLVER_CMD");
  if (env != nullptr && *env != '\0') return env;
  return "z3 -smt2 -in";
}

SolverAnswer RunSolver(const std::string& command, const std::string& document) {
  char path[] = "/tmp/loopfix-smt-XXXXXX";
  int fd = mkstemp(path);
  if (fd < 0) throw Error(ErrorCode::kIo, "cannot create a temporary file");
  {
    std::ofstream file(path);
    file << document;
  }
  close(fd);
  std::string full = command + " < " + path + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (pipe == nullptr) {
    unlink(path);
    throw Error(ErrorCode::kIo, "cannot start solver '" + command + "'");
  }
  std::string raw;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) raw.append(buffer, got);
  int status = pclose(pipe);
  unlink(path);

  SolverAnswer answer{SolverAnswer::Status::kUnknown, "", raw};
  std::istringstream lines(raw);
  std::string first;
  std::getline(lines, first);
  while (!first.empty() && std::isspace(static_cast<unsigned char>(first.back()))) {
    first.pop_back();
  }
  if (first == "sat") {
    answer.status = SolverAnswer::Status::kSat;
    std::ostringstream rest;
    rest << lines.rdbuf();
    answer.model = rest.str();
  } else if (first == "unsat") {
    answer.status = SolverAnswer::Status::kUnsat;
  } else if (status != 0 && raw.find("not found") != std::string::npos) {
    throw Error(ErrorCode::kIo, "cannot run solver '" + command + "': " + raw);
  }
  return answer;
}

GuardExpr DecodeModel(const PairSet& set, int stage, int multiplicity,
                      std::string_view model) {
  Layout lay{static_cast<int>(set.schema.size()),
             StageComponents(stage, multiplicity)};
  std::map<std::string, std::string> values = SExpr(model).Bindings();
  auto number = [&](const std::string& name) {
    auto it = values.find(name);
    if (it == values.end()) {
      throw Error(ErrorCode::kInternal, "solver model lacks '" + name + "'");
    }
    return std::stoll(it->second);
  };
  int total = lay.n + static_cast<int>(lay.comps.size());
  std::function<GuardExpr(long long, int)> build = [&](long long s, int depth) {
    if (s < 0 || s >= total || depth > total) {
      throw Error(ErrorCode::kInternal, "solver model selects source " +
                                            std::to_string(s));
    }
    if (s < lay.n) return GuardExpr::Input(static_cast<int>(s));
    int c = static_cast<int>(s) - lay.n;
    if (values[Act(c)] != "true") {
      throw Error(ErrorCode::kInternal, "solver model uses an inactive component");
    }
    std::vector<GuardExpr> args;
    for (int p = 0; p < Arity(lay.comps[c]); ++p) {
      args.push_back(build(number(Sel(c, p)), depth + 1));
    }
    return GuardExpr::Node(lay.comps[c], std::move(args));
  };
  GuardExpr guard = build(number("root"), 0);
  if (TypeOfGuard(guard, set.schema) != Type::kBool) {
    throw Error(ErrorCode::kInternal, "solver model root is not boolean");
  }
  return guard;
}

std::optional<GuardExpr> SolveStageSmt(const PairSet& set, int stage,
                                       int multiplicity,
                                       const std::string& command,
                                       std::chrono::steady_clock::time_point deadline) {
  std::string cmd = command.empty() ? DefaultSolverCommand() : command;
  SolverAnswer answer = RunSolver(cmd, EncodeConstraints(set, stage, multiplicity));
  if (std::chrono::steady_clock::now() > deadline) {
    throw Error(ErrorCode::kTimeBudgetExceeded, "synthesis time budget exceeded");
  }
  switch (answer.status) {
    case SolverAnswer::Status::kSat:
      return DecodeModel(set, stage, multiplicity, answer.model);
    case SolverAnswer::Status::kUnsat:
      return std::nullopt;
    case SolverAnswer::Status::kUnknown:
      break;
  }
  std::string head = answer.raw.substr(0, answer.raw.find('\n'));
  throw Error(ErrorCode::kInternal, "solver gave no verdict: " + head);
}

}  // namespace loopfix
