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
// Generation policies consulted by the builders: the per-statement usage
// gate, the modifier placeholder gate, inline-assembly strategy payloads and
// the post-hoc undefined-behaviour screen.

#ifndef SOLGEN_POLICIES_H_
#define SOLGEN_POLICIES_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "solgen/ast.h"
#include "solgen/validate.h"

namespace solgen {

struct GenContext;

enum class Usage { kUnused, kUsedPlain, kUsedIncDec };
enum class UsageRequest { kPlain, kIncDec };
enum class UsageDecision { kAllowPlain, kAllowIncDec, kSubstituteConstant };

std::string_view UsageName(Usage usage);
std::string_view UsageDecisionName(UsageDecision decision);

struct UsageTransition {
  UsageDecision decision;
  Usage next;
};

// Pure transition table. kUsedIncDec is absorbing.
UsageTransition UsageGate(Usage state, UsageRequest request);

// Per-statement variable -> usage map.
class UsageState {
 public:
  Usage Get(const std::string& var) const;
  // Applies UsageGate and records the resulting state.
  UsageDecision Request(const std::string& var, UsageRequest request);
  void Reset() { states_.clear(); }

 private:
  std::map<std::string, Usage> states_;
};

enum class PlaceholderDecision { kEmit, kRedraw };

// counter == 0: emit and increment; counter == 1: redraw.
PlaceholderDecision PlaceholderGate(int& counter);

enum class PayloadKind { kKeccakPair, kStorageWriteReturn, kYulSolvarRef, kSelectorAccess };
std::string_view PayloadKindName(PayloadKind kind);

struct StrategyPayload {
  PayloadKind kind = PayloadKind::kKeccakPair;
  // keccak pair: shared base address and the two lengths.
  uint64_t address = 0;
  uint64_t length_a = 0;
  uint64_t length_b = 0;
  bool collision_prone = false;
  // storage write + return: literal slot, written value, terminator.
  uint64_t slot = 0;
  uint64_t value = 0;
  bool use_stop = false;
  bool overwrite = false;
  YulBody body;
};

// ceil(l1 / 32) == ceil(l2 / 32) and l1 != l2.
bool IsCollisionPronePair(uint64_t l1, uint64_t l2);

// Both require an open inline-assembly context in ctx.
StrategyPayload InjectKeccakPair(GenContext& ctx);
StrategyPayload InjectStorageWriteReturn(GenContext& ctx);

namespace ub_rule {
inline constexpr std::string_view kArrayInAssembly = "ub-array-in-assembly";
inline constexpr std::string_view kArgumentSideEffect = "ub-argument-side-effect";
inline constexpr std::string_view kArrayGrowth = "ub-array-growth";
inline constexpr std::string_view kVerbatim = "ub-verbatim";
}  // namespace ub_rule

// Screens a complete program for the four undefined-behaviour patterns.
std::vector<Violation> UbScreen(const Program& program);

}  // namespace solgen

#endif  // SOLGEN_POLICIES_H_
