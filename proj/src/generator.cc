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
#include "solgen/generator.h"

#include <algorithm>

#include "solgen/body_builder.h"
#include "solgen/context.h"
#include "solgen/emitter.h"
#include "solgen/env_builder.h"

namespace solgen {

Program GenerateProgram(uint64_t seed, const GenConfig& config) {
  GenContext ctx(seed, config);
  BuildEnvironment(ctx);
  uint64_t count = 0;
  if (config.max_functions > 0) {
    uint64_t floor = std::max<uint64_t>(1, config.max_functions / 4);
    count = ctx.prng.NextInRange(floor, config.max_functions);
  }
  for (uint64_t i = 0; i < count; ++i) {
    FunctionDecl frame = GenFunctionFrame(ctx);
    ctx.program.functions.push_back(FillFunction(ctx, std::move(frame)));
  }
  return std::move(ctx.program);
}

std::string GenerateSource(uint64_t seed, const GenConfig& config) {
  return EmitProgram(GenerateProgram(seed, config));
}

}  // namespace solgen
