// Copyright 2026 The Solgen Authors
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

#ifndef SOLGEN_EMITTER_H_
#define SOLGEN_EMITTER_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "solgen/ast.h"

namespace solgen {

// Pretty-prints a program: SPDX line, caret pragma, then the contract with
// 4-space indentation and one statement per line. Throws std::logic_error if
// the program does not validate.
std::string EmitProgram(const Program& program);

// Same layout without the validity check; used for fragments and fixtures.
std::string EmitProgramUnchecked(const Program& program);

std::string EmitFunction(const FunctionDecl& fn, int indent = 0);
std::string EmitModifier(const ModifierDecl& mod, int indent = 0);
std::string EmitStmt(const Stmt& stmt, int indent = 0);
std::string EmitExpr(const Expr& expr);
std::string EmitYulStmt(const YulStmt& stmt, int indent = 0);
std::string EmitYulExpr(const YulExpr& expr);

// Number of newline-terminated lines in `text`.
std::size_t LineCount(std::string_view text);

}  // namespace solgen

#endif  // SOLGEN_EMITTER_H_
