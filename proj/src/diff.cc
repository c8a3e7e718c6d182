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

#include <algorithm>
#include <vector>

namespace loopfix {
namespace {

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

struct Edit {
  char tag;  // ' ', '-', '+'
  std::size_t a;
  std::size_t b;
};

// Longest-common-subsequence edit script; inputs are source files, so the
// quadratic table is fine.
std::vector<Edit> Script(const std::vector<std::string_view>& a,
                         const std::vector<std::string_view>& b) {
  std::size_t n = a.size();
  std::size_t m = b.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::vector<Edit> edits;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      edits.push_back({' ', i++, j++});
    } else if (i < n && (j == m || lcs[i + 1][j] >= lcs[i][j + 1])) {
      edits.push_back({'-', i++, j});
    } else {
      edits.push_back({'+', i, j++});
    }
  }
  return edits;
}

}  // namespace

std::string UnifiedDiff(std::string_view before, std::string_view after,
                        std::string_view before_name,
                        std::string_view after_name, int context) {
  std::vector<std::string_view> a = Lines(before);
  std::vector<std::string_view> b = Lines(after);
  std::vector<Edit> edits = Script(a, b);
  std::string out;
  std::size_t k = 0;
  while (k < edits.size()) {
    while (k < edits.size() && edits[k].tag == ' ') ++k;
    if (k == edits.size()) break;
    std::size_t start = k >= static_cast<std::size_t>(context) ? k - context : 0;
    std::size_t end = k;
    // Extend over changes separated by at most 2 * context equal lines.
    while (true) {
      while (end < edits.size() && edits[end].tag != ' ') ++end;
      std::size_t run = end;
      while (run < edits.size() && edits[run].tag == ' ') ++run;
      if (run < edits.size() &&
          run - end <= static_cast<std::size_t>(2 * context)) {
        end = run;
        continue;
      }
      end = std::min(edits.size(), end + context);
      break;
    }
    if (out.empty()) {
      out += "--- " + std::string(before_name) + "\n";
      out += "+++ " + std::string(after_name) + "\n";
    }
    std::size_t a_start = edits[start].a;
    std::size_t b_start = edits[start].b;
    std::size_t a_len = 0;
    std::size_t b_len = 0;
    for (std::size_t e = start; e < end; ++e) {
      if (edits[e].tag != '+') ++a_len;
      if (edits[e].tag != '-') ++b_len;
    }
    out += "@@ -" + std::to_string(a_len ? a_start + 1 : a_start) + "," +
           std::to_string(a_len) + " +" +
           std::to_string(b_len ? b_start + 1 : b_start) + "," +
           std::to_string(b_len) + " @@\n";
    for (std::size_t e = start; e < end; ++e) {
      out += edits[e].tag;
      out += std::string(edits[e].tag == '+' ? b[edits[e].b] : a[edits[e].a]);
      out += '\n';
    }
    k = end;
  }
  return out;
}

}  // namespace loopfix
