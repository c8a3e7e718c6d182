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


#include "loopfix/diff.h"

#include <gtest/gtest.h>

#include <string>

namespace loopfix {
namespace {

std::string Lines(int from, int to) {
  std::string s;
  for (int i = from; i <= to; ++i) s += "l" + std::to_string(i) + "\n";
  return s;
}

TEST(DiffTest, EqualTextsGiveNothing) {
  EXPECT_EQ(UnifiedDiff("a\nb\n", "a\nb\n", "x", "y"), "");
  EXPECT_EQ(UnifiedDiff("", "", "x", "y"), "");
}

TEST(DiffTest, SingleChangeWithContext) {
  std::string before = Lines(1, 10);
  std::string after = before;
  after.replace(after.find("l5\n"), 3, "L5\n");
  EXPECT_EQ(UnifiedDiff(before, after, "a/f", "b/f"),
            "--- a/f\n+++ b/f\n"
            "@@ -2,7 +2,7 @@\n"
            " l2\n l3\n l4\n-l5\n+L5\n l6\n l7\n l8\n");
}

TEST(DiffTest, ContextIsClippedAtEdges) {
  EXPECT_EQ(UnifiedDiff("a\nb\n", "A\nb\n", "x", "y", 1),
            "--- x\n+++ y\n@@ -1,2 +1,2 @@\n-a\n+A\n b\n");
}

TEST(DiffTest, DistantChangesSplitIntoHunks) {
  std::string before = Lines(1, 20);
  std::string after = before;
  after.replace(after.find("l2\n"), 3, "L2\n");
  after.replace(after.find("l18\n"), 4, "L18\n");
  std::string d = UnifiedDiff(before, after, "x", "y", 2);
  EXPECT_NE(d.find("@@ -1,4 +1,4 @@\n"), std::string::npos) << d;
  EXPECT_NE(d.find("@@ -16,5 +16,5 @@\n"), std::string::npos) << d;
}

TEST(DiffTest, CloseChangesMerge) {
  std::string before = Lines(1, 10);
  std::string after = before;
  after.replace(after.find("l4\n"), 3, "L4\n");
  after.replace(after.find("l7\n"), 3, "L7\n");
  std::string d = UnifiedDiff(before, after, "x", "y", 1);
  EXPECT_EQ(d,
            "--- x\n+++ y\n@@ -3,6 +3,6 @@\n"
            " l3\n-l4\n+L4\n l5\n l6\n-l7\n+L7\n l8\n");
}

TEST(DiffTest, InsertionsAndDeletionsCountLines) {
  EXPECT_EQ(UnifiedDiff("a\nc\n", "a\nb\nc\n", "x", "y"),
            "--- x\n+++ y\n@@ -1,2 +1,3 @@\n a\n+b\n c\n");
  EXPECT_EQ(UnifiedDiff("a\nb\nc\n", "a\nc\n", "x", "y"),
            "--- x\n+++ y\n@@ -1,3 +1,2 @@\n a\n-b\n c\n");
}

}  // namespace
}  // namespace loopfix
