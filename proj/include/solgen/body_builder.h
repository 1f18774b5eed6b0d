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
// Function frames, statement and expression generation, inline assembly and
// the state-logging epilogue.

#ifndef SOLGEN_BODY_BUILDER_H_
#define SOLGEN_BODY_BUILDER_H_

#include <optional>
#include <string>

#include "solgen/ast.h"
#include "solgen/context.h"

namespace solgen {

// Upper bound on the estimated dynamic cost of one call expression.
inline constexpr uint64_t kCallCostBudget = 20000;

struct ExprOptions {
  bool side_effects = true;     // IncDec and impure constructs allowed
  std::string exclude_array;    // array that must not be read
};

// Decimal literal of `type`, biased towards small and boundary values.
std::string RandomLiteral(Prng& prng, Type type);

// Picks a visibility, mutability, parameters, optional return and modifier.
// The frame's body is empty.
FunctionDecl GenFunctionFrame(GenContext& ctx);

// Fills the frame's body: blocks of statements, the return assignment and
// the logging epilogue.
FunctionDecl FillFunction(GenContext& ctx, FunctionDecl frame);

// Appends the log epilogue to non-read-only functions.
void AppendStateLog(FunctionDecl& fn, const Program& program);

// `depth` is the remaining nesting budget; 0 yields a leaf.
Expr GenArithExpr(GenContext& ctx, Type target, int depth, const ExprOptions& opts = {});
// Relational comparison or a logical combination of 2-3 of them.
Expr GenCondition(GenContext& ctx, int depth);
// Declines (nullopt) when no callable candidate exists or nesting is spent.
std::optional<Expr> GenCallExpr(GenContext& ctx, Type target, int depth,
                                const ExprOptions& opts = {});

std::optional<Stmt> GenArrayOp(GenContext& ctx);
std::optional<Stmt> GenLoop(GenContext& ctx);
std::optional<Stmt> GenConditional(GenContext& ctx);
std::optional<Stmt> GenAssignment(GenContext& ctx);
std::optional<Stmt> GenLocalDecl(GenContext& ctx);
Stmt GenYulBlock(GenContext& ctx);

// Statement of the given kind, or nullopt when the kind declines here.
std::optional<Stmt> GenStatement(GenContext& ctx, std::string_view kind);
// Statement kinds whose preconditions hold at the current program point.
Weights AvailableStmtWeights(const GenContext& ctx);
// A scoped block of up to `max_nodes` statements with its own weight region.
Block GenBlock(GenContext& ctx, uint64_t max_nodes);

}  // namespace solgen

#endif  // SOLGEN_BODY_BUILDER_H_
