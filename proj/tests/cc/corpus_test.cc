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

#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <string>

#include "loopfix/io.h"
#include "loopfix/parser.h"
#include "loopfix/printer.h"
#include "test_support.h"

namespace loopfix {
namespace {

using testing::CodeOf;
using testing::CorpusPath;

std::string Normal(const std::string& e) {
  return PrintExpr(NormalizeGuard(ParseExpression(e)));
}

TEST(NormalizeGuardTest, FlipsAndSorts) {
  EXPECT_EQ(Normal("len(a) > i"), Normal("i < len(a)"));
  EXPECT_EQ(Normal("x >= y + 1"), Normal("1 + y <= x"));
  EXPECT_EQ(Normal("a && b || c"), Normal("c || b && a"));
  EXPECT_NE(Normal("x > y"), Normal("y > x"));
  EXPECT_NE(Normal("x - y > 0"), Normal("y - x > 0"));
}

TEST(MatchGuardTest, Criteria) {
  Expr original = ParseExpression("pos != len(src)");
  PatchMatcher any;
  any.any_of = {"pos < len(src)", "pos != len(src) && pos < len(src)"};
  EXPECT_TRUE(MatchGuard(ParseExpression("len(src) > pos"), original, any).empty());
  EXPECT_FALSE(MatchGuard(ParseExpression("len(src) >= pos"), original, any).empty());

  PatchMatcher uses;
  uses.uses_all = {"pos", "src"};
  EXPECT_TRUE(MatchGuard(ParseExpression("len(src) > pos"), original, uses).empty());
  EXPECT_EQ(MatchGuard(ParseExpression("pos > 0"), original, uses).size(), 1u);

  PatchMatcher reuse;
  reuse.reuses_original = true;
  EXPECT_TRUE(MatchGuard(ParseExpression("pos != len(src) && pos > 0"), original,
                         reuse)
                  .empty());
  EXPECT_FALSE(MatchGuard(ParseExpression("pos > 0"), original, reuse).empty());
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("loopfix-corpus-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string Write(const std::string& name, const std::string& text) const {
    std::string p = (path_ / name).string();
    WriteTextFile(p, text);
    return p;
  }

 private:
  std::filesystem::path path_;
};

TEST(LoadManifestTest, ShippedManifest) {
  std::vector<CorpusCase> cases = LoadManifest(CorpusPath("manifest.json"));
  EXPECT_EQ(cases.size(), 10u);
  std::set<std::string> names;
  for (const CorpusCase& c : cases) {
    names.insert(c.name);
    EXPECT_TRUE(std::filesystem::exists(c.file)) << c.file;
  }
  EXPECT_EQ(names.size(), cases.size());
}

TEST(LoadManifestTest, Errors) {
  TempDir dir;
  EXPECT_EQ(CodeOf([&] { LoadManifest(dir.Write("m.json", "{not json")); }),
            ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([&] { LoadManifest(dir.Write("m.json", R"({"cases": 3})")); }),
            ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([&] {
              LoadManifest(dir.Write(
                  "m.json",
                  R"({"cases": [{"name": "x", "file": "x.lp",
                      "expect": {"error": "NoSuchCode"}}]})"));
            }),
            ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([&] { LoadManifest(dir.Write("m.json", "") + ".missing"); }),
            ErrorCode::kIo);
}

TEST(LoadManifestTest, RelativeFiles) {
  TempDir dir;
  std::string m = dir.Write(
      "m.json", R"({"cases": [{"name": "x", "file": "sub/x.lp", "pattern": "p",
                    "expect": {"hanging": ["t"], "chi": {"t": 2}}}]})");
  std::vector<CorpusCase> cases = LoadManifest(m);
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_EQ(std::filesystem::path(cases[0].file),
            std::filesystem::path(m).parent_path() / "sub/x.lp");
  EXPECT_EQ(cases[0].expect.chi.at("t"), 2u);
}

TEST(RunCorpusTest, EveryCasePasses) {
  CorpusReport report = RunCorpus(CorpusPath("manifest.json"), {}, 2);
  ASSERT_EQ(report.cases.size(), 10u);
  for (const CaseResult& c : report.cases) {
    std::string why;
    for (const std::string& p : c.problems) why += p + "; ";
    EXPECT_TRUE(c.passed) << c.spec.name << ": " << why;
  }
  EXPECT_TRUE(report.all_passed());
}

TEST(RunCorpusTest, WrongExpectationIsReported) {
  TempDir dir;
  std::string program = ReadTextFile(CorpusPath("flag_guard.lp"));
  dir.Write("f.lp", program);
  std::string m = dir.Write(
      "m.json", R"({"cases": [{"name": "f", "file": "f.lp", "pattern": "p",
                    "match": {"any_of": ["!more"]},
                    "expect": {"formulations": 4}}]})");
  CorpusReport report = RunCorpus(m);
  ASSERT_EQ(report.cases.size(), 1u);
  EXPECT_FALSE(report.cases[0].passed);
  EXPECT_GE(report.cases[0].problems.size(), 2u);
}

}  // namespace
}  // namespace loopfix
