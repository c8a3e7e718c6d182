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

#ifndef LOOPFIX_PARSER_H_
#define LOOPFIX_PARSER_H_

#include <string_view>

#include "loopfix/ast.h"

namespace loopfix {

// Parses and type-checks a source file. Throws Error(kSyntax) or
// Error(kType) with the offending location.
Program Parse(std::string_view source);

// Parses without running the checker; loop ids are still assigned.
Program ParseUnchecked(std::string_view source);

// Parses a standalone expression (unresolved).
Expr ParseExpression(std::string_view source);

}  // namespace loopfix

#endif  // LOOPFIX_PARSER_H_
