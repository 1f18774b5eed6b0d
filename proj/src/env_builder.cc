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
#include "solgen/env_builder.h"

#include <algorithm>

#include "solgen/body_builder.h"

namespace solgen {

Program BuildEnvironment(GenContext& ctx) {
  Prng& prng = ctx.prng;
  const GenConfig& cfg = ctx.cfg;
  Program& p = ctx.program;
  p.events = StandardEvents();

  uint64_t n = prng.NextInRange(cfg.state_var_count_range.lo, cfg.state_var_count_range.hi);
  for (uint64_t i = 0; i < n; ++i) {
    StateVar sv;
    sv.name = "sv" + std::to_string(i);
    sv.type = prng.Chance(0.5) ? Type::kInt256 : Type::kUint256;
    sv.init = RandomLiteral(prng, sv.type);
    sv.is_constant = prng.Chance(cfg.constant_probability);
    p.state_vars.push_back(std::move(sv));
  }
  uint64_t m = prng.NextInRange(cfg.array_count_range.lo, cfg.array_count_range.hi);
  for (uint64_t j = 0; j < m; ++j) {
    DynArray arr;
    arr.name = "arr" + std::to_string(j);
    uint64_t len = prng.NextInRange(cfg.array_len_range.lo, cfg.array_len_range.hi);
    for (uint64_t e = 0; e < len; ++e) arr.init_elems.push_back(RandomLiteral(prng, Type::kUint256));
    p.arrays.push_back(std::move(arr));
  }
  uint64_t k = prng.NextInRange(cfg.modifier_count_range.lo, cfg.modifier_count_range.hi);
  for (uint64_t i = 0; i < k; ++i) {
    ModifierDecl mod = GenModifier(ctx);
    p.modifiers.push_back(std::move(mod));
  }
  return p;
}

ModifierDecl GenModifier(GenContext& ctx) {
  ctx.ResetFunction();
  ctx.frame = Frame{};
  ctx.frame.in_modifier = true;
  ModifierDecl mod;
  mod.name = "m" + std::to_string(ctx.program.modifiers.size());

  ctx.EnterScope();
  ctx.DistortRegion();
  Block run;
  auto flush = [&]() {
    if (!run.empty()) mod.body.push_back(Unchecked{std::move(run)});
    run.clear();
  };
  const std::string placeholder = "placeholder";
  uint64_t target = ctx.prng.NextInRange(1, std::max<uint64_t>(1, ctx.cfg.max_nodes_per_block / 2));
  uint64_t produced = 0;
  Weights weights = AvailableStmtWeights(ctx);
  weights[placeholder] = kPlaceholderWeight;
  for (int attempts = 0; produced < target && attempts < 64; ++attempts) {
    bool any = std::any_of(weights.begin(), weights.end(),
                           [](const auto& kv) { return kv.second > 0; });
    if (!any) break;
    const std::string kind = PickWeighted(ctx.prng, weights);
    if (kind == placeholder) {
      if (PlaceholderGate(ctx.placeholder_counter) == PlaceholderDecision::kEmit) {
        flush();
        mod.body.push_back(Placeholder{});
        ++produced;
      }
      continue;  // a second placeholder is redrawn as another kind
    }
    std::optional<Stmt> s = GenStatement(ctx, kind);
    if (!s) {
      weights[kind] = 0;
      continue;
    }
    run.push_back(std::move(*s));
    ++produced;
  }
  flush();
  if (ctx.placeholder_counter == 0) {
    mod.body.push_back(Placeholder{});
    ctx.placeholder_counter = 1;
  }
  ctx.RestoreRegion();
  ctx.ExitScope();
  ctx.frame = Frame{};
  return mod;
}

}  // namespace solgen
