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


#ifndef LOOPFIX_TESTS_CC_ORACLE_CASES_H_
#define LOOPFIX_TESTS_CC_ORACLE_CASES_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "loopfix/collection.h"

namespace loopfix::testing {

// Pairs over every point of the domain; the output is `g`.
inline PairSet Exhaustive(int vars, std::int64_t lo, std::int64_t hi,
                   const std::function<bool(const std::int64_t*)>& g) {
  const char* names[] = {"x", "y", "z"};
  std::string text;
  for (int v = 0; v < vars; ++v) {
    text += std::string("@input ") + names[v] + " int " + names[v] + "\n";
  }
  std::int64_t point[3] = {lo, lo, lo};
  while (true) {
    for (int v = 0; v < vars; ++v) {
      text += std::string(names[v]) + "=" + std::to_string(point[v]) + " ";
    }
    text += std::string("-> ") + (g(point) ? "true" : "false") + "\n";
    int v = 0;
    while (v < vars && point[v] == hi) point[v++] = lo;
    if (v == vars) break;
    ++point[v];
  }
  return ParsePairSet(text);
}

struct OracleCase {
  const char* name;
  int vars;
  std::int64_t lo;
  std::int64_t hi;
  std::function<bool(const std::int64_t*)> g;
};

inline std::vector<OracleCase> OracleCases() {
  return {
      {"x > y", 2, -3, 4, [](const std::int64_t* p) { return p[0] > p[1]; }},
      {"x != 1", 1, -3, 4, [](const std::int64_t* p) { return p[0] != 1; }},
      {"x >= 0", 2, -4, 3, [](const std::int64_t* p) { return p[0] >= 0; }},
      {"x == y", 2, 0, 7, [](const std::int64_t* p) { return p[0] == p[1]; }},
      {"x > y && y > 0", 2, -1, 2,
       [](const std::int64_t* p) { return p[0] > p[1] && p[1] > 0; }},
      {"x == y || x > 1", 2, -1, 2,
       [](const std::int64_t* p) { return p[0] == p[1] || p[0] > 1; }},
      {"!(x == z) && y >= 0", 3, -1, 1,
       [](const std::int64_t* p) { return p[0] != p[2] && p[1] >= 0; }},
      {"x > y || y > z", 3, 0, 2,
       [](const std::int64_t* p) { return p[0] > p[1] || p[1] > p[2]; }},
      {"x + y > 2", 2, -1, 2,
       [](const std::int64_t* p) { return p[0] + p[1] > 2; }},
      {"x - y >= z", 3, 0, 2,
       [](const std::int64_t* p) { return p[0] - p[1] >= p[2]; }},
  };
}

}  // namespace loopfix::testing

#endif  // LOOPFIX_TESTS_CC_ORACLE_CASES_H_
