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
#ifndef SOLGEN_GENERATOR_H_
#define SOLGEN_GENERATOR_H_

#include <cstdint>
#include <string>

#include "solgen/ast.h"
#include "solgen/config.h"

namespace solgen {

// Complete program for (seed, config). Deterministic.
Program GenerateProgram(uint64_t seed, const GenConfig& config);

// GenerateProgram followed by EmitProgram.
std::string GenerateSource(uint64_t seed, const GenConfig& config);

}  // namespace solgen

#endif  // SOLGEN_GENERATOR_H_
