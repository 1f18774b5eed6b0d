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
// Contract skeleton: header, events, state variables, arrays and modifiers.

#ifndef SOLGEN_ENV_BUILDER_H_
#define SOLGEN_ENV_BUILDER_H_

#include "solgen/ast.h"
#include "solgen/context.h"

namespace solgen {

// Relative weight of the placeholder among modifier statement kinds.
inline constexpr double kPlaceholderWeight = 1.0;

// Fills ctx.program with everything except functions and returns a copy.
Program BuildEnvironment(GenContext& ctx);

// Modifier over state variables and arrays with exactly one placeholder.
ModifierDecl GenModifier(GenContext& ctx);

}  // namespace solgen

#endif  // SOLGEN_ENV_BUILDER_H_
