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

#ifndef LOOPFIX_PRINTER_H_
#define LOOPFIX_PRINTER_H_

#include <string>

#include "loopfix/ast.h"

namespace loopfix {

// Canonical source text. For uninstrumented programs,
// Parse(PrettyPrint(p)) == p. Monitored loops print in their expanded
// monitor/decide/collect form, which is for display only.
std::string PrettyPrint(const Program& program);

// Minimal-parenthesis rendering of an expression.
std::string PrintExpr(const Expr& expr);

}  // namespace loopfix

#endif  // LOOPFIX_PRINTER_H_
