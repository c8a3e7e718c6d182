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


#ifndef LOOPFIX_TESTS_CC_PROGRAM_GEN_H_
#define LOOPFIX_TESTS_CC_PROGRAM_GEN_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace loopfix::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  bool Chance(int percent) { return Int(0, 99) < percent; }
  template <typename T>
  const T& Pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(Int(0, static_cast<int>(xs.size()) - 1))];
  }

 private:
  std::mt19937_64 gen_;
};

inline std::string ArrayLiteral(Rng& rng, int min_len, int max_len) {
  int n = rng.Int(min_len, max_len);
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    if (i) s += ", ";
    s += std::to_string(rng.Int(-3, 9));
  }
  return s + "]";
}

// Random programs whose loops all terminate: every loop is bounded by a
// counter that only its own body increments, and calls go to earlier
// functions. Runtime errors and failed asserts are allowed outcomes.
class TerminatingProgramGen {
 public:
  explicit TerminatingProgramGen(std::uint64_t seed) : rng_(seed) {}

  std::string Generate() {
    out_.clear();
    int functions = rng_.Int(1, 3);
    for (int f = 0; f < functions; ++f) Function(f);
    for (int t = 0; t < 3; ++t) {
      out_ += "test t" + std::to_string(t) + " {\n";
      out_ += "  var a: int[] = " + ArrayLiteral(rng_, 0, 5) + ";\n";
      int f = rng_.Int(0, functions - 1);
      out_ += "  var r: int = f" + std::to_string(f) + "(" +
              std::to_string(rng_.Int(-2, 6)) + ", a);\n";
      out_ += "  assert(r " + std::string(rng_.Chance(50) ? "!=" : ">=") + " " +
              std::to_string(rng_.Int(-5, 20)) + ");\n";
      if (rng_.Chance(40)) out_ += "  assert(len(a) < 4 || a[0] != a[1]);\n";
      out_ += "}\n\n";
    }
    return out_;
  }

 private:
  void Function(int f) {
    callable_ = f;
    counters_ = 0;
    loop_depth_ = 0;
    body_.clear();
    Loop(2, 1);
    Block(2, 1);
    out_ += "fn f" + std::to_string(f) + "(x: int, a: int[]) -> int {\n";
    out_ += "  var r: int = x;\n";
    out_ += "  var flag: bool = x > 1;\n";
    for (int c = 0; c < counters_; ++c) {
      out_ += "  var c" + std::to_string(c) + ": int = 0;\n";
    }
    out_ += body_;
    out_ += "  return r;\n}\n\n";
  }

  std::string Pad(int indent) { return std::string(2 * indent, ' '); }

  std::string Atom() {
    std::vector<std::string> xs{"r", "x", "len(a)", std::to_string(rng_.Int(-2, 5))};
    for (int c = 0; c < counters_; ++c) xs.push_back("c" + std::to_string(c));
    return rng_.Pick(xs);
  }

  std::string IntExpr(int depth) {
    if (depth == 0 || rng_.Chance(35)) return Atom();
    switch (rng_.Int(0, 6)) {
      case 0: return "(" + IntExpr(depth - 1) + " + " + IntExpr(depth - 1) + ")";
      case 1: return "(" + IntExpr(depth - 1) + " - " + IntExpr(depth - 1) + ")";
      case 2: return "(" + IntExpr(depth - 1) + " * " + Atom() + ")";
      case 3:
        return "(" + IntExpr(depth - 1) + " % " + std::to_string(rng_.Int(1, 4)) +
               ")";
      case 4:
        if (rng_.Chance(30)) return "a[" + IntExpr(depth - 1) + "]";
        return "(len(a) > 0 ? a[" + Atom() + " % len(a)] : 0)";
      case 5:
        if (callable_ > 0) {
          return "f" + std::to_string(rng_.Int(0, callable_ - 1)) + "(" +
                 IntExpr(depth - 1) + ", a)";
        }
        return Atom();
      default:
        return "(" + BoolExpr(depth - 1) + " ? " + IntExpr(depth - 1) + " : " +
               IntExpr(depth - 1) + ")";
    }
  }

  std::string BoolExpr(int depth) {
    static const std::vector<std::string> kCmp{"<", "<=", ">", ">=", "==", "!="};
    if (depth == 0 || rng_.Chance(50)) {
      if (rng_.Chance(15)) return "flag";
      return IntExpr(depth) + " " + rng_.Pick(kCmp) + " " + IntExpr(0);
    }
    switch (rng_.Int(0, 2)) {
      case 0: return "(" + BoolExpr(depth - 1) + " && " + BoolExpr(depth - 1) + ")";
      case 1: return "(" + BoolExpr(depth - 1) + " || " + BoolExpr(depth - 1) + ")";
      default: return "!(" + BoolExpr(depth - 1) + ")";
    }
  }

  void Block(int depth, int indent) {
    int n = rng_.Int(1, 4);
    for (int i = 0; i < n; ++i) Statement(depth, indent);
  }

  void Loop(int depth, int indent) {
    std::string c = "c" + std::to_string(counters_++);
    std::string bound = rng_.Chance(50) ? std::to_string(rng_.Int(0, 9))
                                        : "len(a) + " + std::to_string(rng_.Int(0, 4));
    body_ += Pad(indent) + c + " = 0;\n";
    std::string guard = c + " < " + bound;
    if (rng_.Chance(20)) guard += " && " + BoolExpr(1);
    body_ += Pad(indent) + "while (" + guard + ") {\n";
    body_ += Pad(indent + 1) + c + " = " + c + " + 1;\n";
    ++loop_depth_;
    Block(depth - 1, indent + 1);
    --loop_depth_;
    body_ += Pad(indent) + "}\n";
  }

  void Statement(int depth, int indent) {
    int roll = rng_.Int(0, 99);
    if (roll < 30) {
      body_ += Pad(indent) + "r = " + IntExpr(2) + ";\n";
    } else if (roll < 38) {
      body_ += Pad(indent) + "flag = " + BoolExpr(1) + ";\n";
    } else if (roll < 45) {
      body_ += Pad(indent) + "a[" + IntExpr(1) + "] = " + IntExpr(1) + ";\n";
    } else if (roll < 60 && depth > 0) {
      body_ += Pad(indent) + "if (" + BoolExpr(2) + ") {\n";
      Block(depth - 1, indent + 1);
      if (rng_.Chance(40)) {
        body_ += Pad(indent) + "} else {\n";
        Block(depth - 1, indent + 1);
      }
      body_ += Pad(indent) + "}\n";
    } else if (roll < 85 && depth > 0) {
      Loop(depth, indent);
    } else if (roll < 92 && loop_depth_ > 0) {
      body_ += Pad(indent) + "if (" + BoolExpr(1) + ") {\n" + Pad(indent + 1) +
               "break;\n" + Pad(indent) + "}\n";
    } else if (roll < 96) {
      body_ += Pad(indent) + "if (" + BoolExpr(1) + ") {\n" + Pad(indent + 1) +
               "return " + IntExpr(1) + ";\n" + Pad(indent) + "}\n";
    } else {
      body_ += Pad(indent) + "assert(" + BoolExpr(1) + ");\n";
    }
  }

  Rng rng_;
  std::string out_;
  std::string body_;
  int callable_ = 0;
  int counters_ = 0;
  int loop_depth_ = 0;
};

// A function `f` whose loop guard was replaced by a faulty one, a correct
// copy `ref`, and tests asserting f agrees with ref.
struct SeededBug {
  std::string source;
  std::string correct_guard;
  std::string faulty_guard;
};

class SeededBugGen {
 public:
  explicit SeededBugGen(std::uint64_t seed) : rng_(seed) {}

  SeededBug Generate() {
    struct Shape {
      std::string guard;
      std::string weaker;
      bool indexes;  // guard implies i < len(a)
    };
    static const std::vector<Shape> kShapes{
        {"i < len(a)", "i <= len(a)", true},
        {"len(a) > i", "len(a) >= i", true},
        {"i < x", "i <= x", false},
        {"i < len(a) && acc < x", "i < len(a)", true},
        {"i < len(a) && !done", "i < len(a)", true},
        {"i + 1 < len(a)", "i < len(a)", true},
        {"acc < x", "acc != x", false},
        {"i != len(a)", "true", true},
    };
    const Shape& shape = rng_.Pick(kShapes);
    SeededBug bug;
    bug.correct_guard = shape.guard;
    bug.faulty_guard = rng_.Chance(50) ? "true" : shape.weaker;

    std::vector<std::string> updates{
        "acc = acc + 1;",
        "acc = acc + 2;",
        "acc = acc + i + 1;",
    };
    if (shape.indexes) {
      updates.push_back("acc = acc + (a[i] > 0 ? a[i] : 1);");
      updates.push_back("a[i] = acc;");
      updates.push_back("acc = acc + (a[i] < 0 ? 1 : a[i] + 1);");
    }
    std::string body;
    int n = rng_.Int(1, 2);
    for (int k = 0; k < n; ++k) body += "      " + rng_.Pick(updates) + "\n";
    if (shape.guard.find("done") != std::string::npos || rng_.Chance(30)) {
      body += "      if (acc > " + std::to_string(rng_.Int(3, 12)) +
              ") {\n        done = true;\n      }\n";
    }
    if (rng_.Chance(30)) {
      body += "      if (acc == " + std::to_string(rng_.Int(2, 9)) +
              ") {\n        return acc;\n      }\n";
    }
    body += "      i = i + 1;\n";

    auto function = [&](const std::string& name, const std::string& guard) {
      // The shield keeps an iteration past the correct exit harmless.
      return "fn " + name + "(a: int[], x: int) -> int {\n"
             "  var i: int = 0;\n"
             "  var acc: int = 0;\n"
             "  var done: bool = false;\n"
             "  while (" + guard + ") {\n"
             "    if (" + shape.guard + ") {\n" + body +
             "    }\n"
             "  }\n"
             "  return acc;\n"
             "}\n\n";
    };
    bug.source = function("f", bug.faulty_guard) + function("ref", shape.guard);
    int tests = rng_.Int(3, 6);
    for (int t = 0; t < tests; ++t) {
      std::string arr = ArrayLiteral(rng_, 0, 5);
      std::string x = std::to_string(rng_.Int(0, 7));
      bug.source += "test t" + std::to_string(t) + " {\n"
                    "  var a: int[] = " + arr + ";\n"
                    "  var b: int[] = " + arr + ";\n"
                    "  assert(f(a, " + x + ") == ref(b, " + x + "));\n"
                    "}\n\n";
    }
    return bug;
  }

 private:
  Rng rng_;
};

}  // namespace loopfix::testing

#endif  // LOOPFIX_TESTS_CC_PROGRAM_GEN_H_
