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

#include "loopfix/collection.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "loopfix/parallel.h"
#include "loopfix/printer.h"

namespace loopfix {
namespace {

void AddConstant(PairSet& set, std::string_view name, std::int64_t value) {
  if (set.IndexOf(name) >= 0) return;
  set.schema.push_back(InputSpec{std::string(name), Type::kInt,
                                 std::to_string(value), true, value});
  for (auto& p : set.pairs) p.inputs.push_back(value);
}

std::string ValueText(Type type, std::int64_t v) {
  if (type == Type::kBool) return v != 0 ? "true" : "false";
  return std::to_string(v);
}

[[noreturn]] void TextFail(const std::string& message, int line) {
  throw Error(ErrorCode::kSyntax, message, SourceLocation{line, 1});
}

std::optional<std::int64_t> ParseValue(Type type, std::string_view text) {
  if (type == Type::kBool) {
    if (text == "true") return 1;
    if (text == "false") return 0;
    return std::nullopt;
  }
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    return std::nullopt;
  }
  return v;
}

std::optional<Type> ParseTypeName(std::string_view text) {
  if (text == "int") return Type::kInt;
  if (text == "bool") return Type::kBool;
  return std::nullopt;
}

std::vector<std::string> Words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

int PairSet::IndexOf(std::string_view name) const {
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (schema[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

void EnrichConstants(PairSet& set) {
  AddConstant(set, kConstMinusOne, -1);
  AddConstant(set, kConstZero, 0);
  AddConstant(set, kConstOne, 1);
}

PairSet MakePairSet(const SnapshotSchema& fields,
                    const std::vector<RawPair>& raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::kEmptySpecification,
                "no input-output pairs were collected");
  }
  PairSet set;
  set.raw_count = raw.size();

  std::vector<const SnapshotField*> kept;
  for (const auto& f : fields) {
    bool everywhere = std::all_of(raw.begin(), raw.end(), [&](const RawPair& p) {
      return std::any_of(p.inputs.begin(), p.inputs.end(),
                         [&](const NamedScalar& s) { return s.name == f.name; });
    });
    if (everywhere) {
      kept.push_back(&f);
    } else {
      set.dropped.push_back(f.name);
    }
  }

  std::set<std::pair<std::vector<std::int64_t>, bool>> seen;
  std::vector<ContextPair> unique;
  for (const auto& p : raw) {
    std::vector<std::int64_t> values;
    values.reserve(kept.size());
    for (const SnapshotField* f : kept) {
      for (const auto& s : p.inputs) {
        if (s.name == f->name) {
          values.push_back(s.value);
          break;
        }
      }
    }
    if (seen.emplace(values, p.output).second) {
      unique.push_back(ContextPair{std::move(values), p.output, p.provenance});
    }
  }

  std::vector<std::size_t> columns;
  for (std::size_t c = 0; c < kept.size(); ++c) {
    std::int64_t first = unique.front().inputs[c];
    bool constant = std::all_of(unique.begin(), unique.end(),
                                [&](const ContextPair& p) {
                                  return p.inputs[c] == first;
                                });
    if (constant) {
      set.pruned.push_back(kept[c]->name);
    } else {
      columns.push_back(c);
    }
  }
  for (std::size_t c : columns) {
    const SnapshotField& f = *kept[c];
    set.schema.push_back(InputSpec{f.name, f.type, PrintExpr(f.source)});
  }
  for (auto& p : unique) {
    std::vector<std::int64_t> values;
    values.reserve(columns.size());
    for (std::size_t c : columns) values.push_back(p.inputs[c]);
    p.inputs = std::move(values);
  }
  set.pairs = std::move(unique);
  EnrichConstants(set);
  return set;
}

std::string SerializePairSet(const PairSet& set) {
  std::ostringstream out;
  for (const auto& in : set.schema) {
    out << (in.constant ? "@const " : "@input ") << in.name << ' '
        << TypeName(in.type) << ' '
        << (in.constant ? ValueText(in.type, in.constant_value) : in.source)
        << '\n';
  }
  for (const auto& p : set.pairs) {
    bool first = true;
    for (std::size_t i = 0; i < set.schema.size(); ++i) {
      if (set.schema[i].constant) continue;
      if (!first) out << ' ';
      first = false;
      out << set.schema[i].name << '='
          << ValueText(set.schema[i].type, p.inputs[i]);
    }
    out << (first ? "-> " : " -> ") << (p.output ? "true" : "false");
    if (!p.provenance.test.empty()) {
      out << "  # " << p.provenance.test << ' ' << p.provenance.rank << ' '
          << p.provenance.iteration;
    }
    out << '\n';
  }
  return out.str();
}

PairSet ParsePairSet(std::string_view text) {
  PairSet set;
  bool saw_const = false;
  std::set<std::pair<std::vector<std::int64_t>, bool>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view comment;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      comment = line.substr(hash + 1);
      line = line.substr(0, hash);
    }
    std::vector<std::string> words = Words(line);
    if (words.empty()) continue;
    if (words[0] == "@input" || words[0] == "@const") {
      if (!set.pairs.empty()) TextFail("declaration after pairs", line_no);
      if (words.size() < 4) TextFail("expected: " + words[0] + " <name> <type> <text>", line_no);
      std::optional<Type> type = ParseTypeName(words[2]);
      if (!type) TextFail("unknown type '" + words[2] + "'", line_no);
      if (set.IndexOf(words[1]) >= 0) TextFail("duplicate input '" + words[1] + "'", line_no);
      InputSpec in{words[1], *type, "", words[0] == "@const", 0};
      std::string rest;
      for (std::size_t i = 3; i < words.size(); ++i) {
        if (i > 3) rest += ' ';
        rest += words[i];
      }
      if (in.constant) {
        std::optional<std::int64_t> v = ParseValue(*type, rest);
        if (!v) TextFail("bad constant value '" + rest + "'", line_no);
        in.constant_value = *v;
        in.source = ValueText(*type, *v);
        saw_const = true;
      } else {
        in.source = rest;
      }
      set.schema.push_back(std::move(in));
      continue;
    }
    ContextPair pair;
    pair.inputs.assign(set.schema.size(), 0);
    std::vector<bool> filled(set.schema.size(), false);
    bool arrow = false;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] == "->") {
        if (w + 2 != words.size()) TextFail("expected one output after '->'", line_no);
        std::optional<std::int64_t> out = ParseValue(Type::kBool, words[w + 1]);
        if (!out) TextFail("output must be true or false", line_no);
        pair.output = *out != 0;
        arrow = true;
        break;
      }
      std::size_t eq = words[w].find('=');
      if (eq == std::string::npos) TextFail("expected name=value, found '" + words[w] + "'", line_no);
      std::string name = words[w].substr(0, eq);
      int index = set.IndexOf(name);
      if (index < 0) TextFail("undeclared input '" + name + "'", line_no);
      if (set.schema[index].constant) TextFail("value given for constant '" + name + "'", line_no);
      std::optional<std::int64_t> v =
          ParseValue(set.schema[index].type, words[w].substr(eq + 1));
      if (!v) TextFail("bad value for '" + name + "'", line_no);
      pair.inputs[index] = *v;
      filled[index] = true;
    }
    if (!arrow) TextFail("missing '-> output'", line_no);
    for (std::size_t i = 0; i < set.schema.size(); ++i) {
      if (set.schema[i].constant) {
        pair.inputs[i] = set.schema[i].constant_value;
      } else if (!filled[i]) {
        TextFail("missing value for '" + set.schema[i].name + "'", line_no);
      }
    }
    std::vector<std::string> prov = Words(comment);
    if (prov.size() == 3) {
      pair.provenance.test = prov[0];
      pair.provenance.rank = std::strtoull(prov[1].c_str(), nullptr, 10);
      pair.provenance.iteration = std::strtoull(prov[2].c_str(), nullptr, 10);
    }
    ++set.raw_count;
    if (seen.emplace(pair.inputs, pair.output).second) {
      set.pairs.push_back(std::move(pair));
    }
  }
  if (!saw_const) EnrichConstants(set);
  return set;
}

Specification BuildSpecification(const LoopId& loop,
                                 const Program& instrumented,
                                 const HangingReport& report,
                                 const AngelicRecord& record,
                                 const CollectionOptions& options) {
  const Stmt* target = FindLoop(instrumented, loop);
  if (target == nullptr) {
    throw Error(ErrorCode::kUsage, "unknown loop " + loop.ToString());
  }
  std::set<std::string> hangs_elsewhere;
  for (const auto& e : report.entries) {
    if (!(e.loop == loop)) hangs_elsewhere.insert(e.test);
  }
  Specification spec;
  for (const auto& test : report.TestsOf(loop)) {
    if (hangs_elsewhere.contains(test) && !record.ChiOf(test)) continue;
    CollectionRun run;
    run.test = test;
    for (const auto& e : record.entries) {
      if (e.test == test) {
        run.limit = e.chi;
        run.rank = e.rank;
      }
    }
    spec.runs.push_back(std::move(run));
  }
  if (spec.runs.empty()) {
    throw Error(ErrorCode::kEmptySpecification,
                "no test reaches loop " + loop.ToString());
  }

  std::vector<std::vector<CollectedPair>> collected(spec.runs.size());
  ParallelFor(spec.runs.size(), options.jobs, [&](std::size_t i) {
    CollectionRun& run = spec.runs[i];
    MonitorConfig config;
    config.global_cap = options.global_cap;
    config.collection_enabled = true;
    config.collection_target = loop;
    if (run.limit) config.SetLimitIn(loop, run.rank, *run.limit);
    TestRun result = RunTest(instrumented, run.test, config);
    run.outcome = result.outcome;
    run.pairs = result.trace.pairs.size();
    collected[i] = std::move(result.trace.pairs);
  });

  std::vector<RawPair> raw;
  for (std::size_t i = 0; i < spec.runs.size(); ++i) {
    const CollectionRun& run = spec.runs[i];
    if (run.limit && !run.outcome.passed()) {
      throw Error(ErrorCode::kInternal,
                  "clamped run of '" + run.test + "' at " +
                      std::to_string(*run.limit) +
                      " iterations did not pass: " + run.outcome.message);
    }
    for (auto& p : collected[i]) {
      raw.push_back(RawPair{std::move(p.inputs), p.output,
                            Provenance{run.test, p.rank, p.iteration}});
    }
  }
  spec.pairs = MakePairSet(SnapshotSchemaFor(*target), raw);
  return spec;
}

}  // namespace loopfix
