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

// Static checks that every compliance and consistency rule of the generated
// subset holds on a tree. Violations are data; nothing here throws.

#ifndef SOLGEN_VALIDATE_H_
#define SOLGEN_VALIDATE_H_

#include <string>
#include <string_view>
#include <vector>

#include "solgen/ast.h"

namespace solgen {

struct Violation {
  std::string rule;      // one of the rule:: names below
  std::string path;      // e.g. "functions[2].body[0].body[3]"
  std::string fragment;  // printed source of the offending node

  std::string ToString() const;
  bool operator==(const Violation&) const = default;
};

namespace rule {
inline constexpr std::string_view kPragmaFloor = "pragma-floor";
inline constexpr std::string_view kUniqueIdentifiers = "unique-identifiers";
inline constexpr std::string_view kShadowedDeclaration = "shadowed-declaration";
inline constexpr std::string_view kEventsNonEmpty = "events-nonempty";
inline constexpr std::string_view kEventParamType = "event-param-type";
inline constexpr std::string_view kStateVarType = "state-var-type";
inline constexpr std::string_view kStateInitRange = "state-init-range";
inline constexpr std::string_view kArrayInitRange = "array-init-range";
inline constexpr std::string_view kLiteralRange = "literal-range";
inline constexpr std::string_view kPlaceholderCount = "placeholder-count";
inline constexpr std::string_view kPlaceholderPosition = "placeholder-position";
inline constexpr std::string_view kModifierScope = "modifier-scope";
inline constexpr std::string_view kUnknownModifier = "unknown-modifier";
inline constexpr std::string_view kModifierMutability = "modifier-mutability";
inline constexpr std::string_view kPayableVisibility = "payable-visibility";
inline constexpr std::string_view kPureStateAccess = "pure-state-access";
inline constexpr std::string_view kViewStateWrite = "view-state-write";
inline constexpr std::string_view kUncheckedNesting = "unchecked-nesting";
inline constexpr std::string_view kDivisionGuard = "division-guard";
inline constexpr std::string_view kIncDecIsolation = "incdec-isolation";
inline constexpr std::string_view kOperandTypes = "operand-types";
inline constexpr std::string_view kConstantOperands = "constant-operands";
inline constexpr std::string_view kConstantAssignment = "constant-assignment";
inline constexpr std::string_view kLoopCounterWrite = "loop-counter-write";
inline constexpr std::string_view kUndeclaredIdentifier = "undeclared-identifier";
inline constexpr std::string_view kCallVisibility = "call-visibility";
inline constexpr std::string_view kImpureCall = "impure-call";
inline constexpr std::string_view kCallOrder = "call-order";
inline constexpr std::string_view kEventArgs = "event-args";
inline constexpr std::string_view kYulArrayRef = "yul-array-ref";
inline constexpr std::string_view kYulStateRef = "yul-state-ref";
inline constexpr std::string_view kNoVerbatim = "no-verbatim";
inline constexpr std::string_view kYulArrayLengthWrite = "yul-array-length-write";
inline constexpr std::string_view kYulUnknownFunction = "yul-unknown-function";
inline constexpr std::string_view kYulArity = "yul-arity";
inline constexpr std::string_view kYulMemoryRange = "yul-memory-range";
inline constexpr std::string_view kYulUninitializedMemory = "yul-uninitialized-memory";
}  // namespace rule

// Returns an empty list iff every structural invariant of the subset holds.
std::vector<Violation> Validate(const Program& program);

// Maximum number of simultaneously in-scope Solidity locals (parameters,
// named return, declared locals, loop counters) over all program points.
int MaxLiveLocals(const FunctionDecl& fn);

// Length of the longest chain of nested calls: `f(g(5))` has length 2.
int CallChainLength(const Expr& expr);

// Bytes of memory addressable by generated inline assembly: the scratch
// space [0, 64).
inline constexpr uint64_t kYulScratchBytes = 64;

// Number of stack inputs of a Yul builtin; -1 if `name` is not a builtin the
// subset understands. Sets `returns_value` accordingly.
int YulBuiltinArity(std::string_view name, bool* returns_value);

}  // namespace solgen

#endif  // SOLGEN_VALIDATE_H_
