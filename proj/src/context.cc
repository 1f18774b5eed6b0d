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
#include "solgen/context.h"

#include <algorithm>
#include <stdexcept>

namespace solgen {

const std::string& PickWeighted(Prng& prng, const Weights& weights) {
  double total = 0;
  for (const auto& [kind, w] : weights) total += std::max(w, 0.0);
  if (!(total > 0)) throw ConfigError("PickWeighted: all weights are zero");
  double point = prng.NextDouble() * total;
  const std::string* last = nullptr;
  for (const auto& [kind, w] : weights) {
    if (w <= 0) continue;
    last = &kind;
    if (point < w) return kind;
    point -= w;
  }
  return *last;  // rounding at the upper edge
}

Weights DistortWeights(const Weights& base, const std::set<std::string>& subset,
                       double factor) {
  Weights out = base;
  for (const std::string& kind : subset) {
    auto it = out.find(kind);
    if (it != out.end()) it->second *= factor;
  }
  return out;
}

GenContext::GenContext(uint64_t seed, const GenConfig& config)
    : prng(seed), cfg(config), weights_{config.strategy_weights} {}

void GenContext::EnterScope() { scopes_.emplace_back(); }

void GenContext::ExitScope() {
  if (scopes_.empty()) throw std::logic_error("ExitScope on empty scope stack");
  scopes_.pop_back();
}

void GenContext::DeclareLocal(const std::string& name, Type type, bool counter) {
  if (scopes_.empty()) throw std::logic_error("DeclareLocal outside any scope");
  if (LiveLocals() + yul.Live() >= cfg.max_live_locals) {
    throw std::logic_error("live-local cap exceeded declaring " + name);
  }
  scopes_.back().push_back(LocalSym{name, type, counter});
}

const LocalSym* GenContext::FindLocal(const std::string& name) const {
  for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope) {
    for (const LocalSym& sym : *scope) {
      if (sym.name == name) return &sym;
    }
  }
  return nullptr;
}

std::vector<LocalSym> GenContext::VisibleLocals() const {
  std::vector<LocalSym> out;
  for (const auto& scope : scopes_) out.insert(out.end(), scope.begin(), scope.end());
  return out;
}

size_t GenContext::LiveLocals() const {
  size_t n = 0;
  for (const auto& scope : scopes_) n += scope.size();
  return n;
}

void GenContext::ResetFunction() {
  scopes_.clear();
  next_local = 0;
  next_yul = 0;
  cond_loop_depth = 0;
  loop_depth = 0;
  call_nesting_depth = 0;
  placeholder_counter = 0;
  loop_multiplier = 1;
  cost = 0;
  stmt_usage.Reset();
  yul = YulState{};
  weights_.resize(1);
}

const Weights& GenContext::DistortRegion() {
  const Weights& parent = weights_.back();
  if (!prng.Chance(cfg.distortion.fraction)) {
    weights_.push_back(parent);
    return weights_.back();
  }
  std::vector<std::string> kinds;
  for (const auto& [kind, w] : parent) kinds.push_back(kind);
  std::set<std::string> subset;
  for (const std::string& kind : kinds) {
    if (prng.Chance(0.5)) subset.insert(kind);
  }
  if (subset.empty() && !kinds.empty()) subset.insert(kinds[prng.NextBounded(kinds.size())]);
  // Opposing families: a distorted block commits to one of them.
  const std::string ref(strategy::kYulSolvarRef);
  const std::string swr(strategy::kStorageWriteReturn);
  if (subset.count(ref) && subset.count(swr)) subset.erase(prng.Chance(0.5) ? ref : swr);
  const Distortion& d = cfg.distortion;
  double factor = d.multiplier_min + prng.NextDouble() * (d.multiplier_max - d.multiplier_min);
  weights_.push_back(DistortWeights(parent, subset, factor));
  return weights_.back();
}

void GenContext::RestoreRegion() {
  if (weights_.size() <= 1) throw std::logic_error("RestoreRegion without DistortRegion");
  weights_.pop_back();
}

double GenContext::StrategyProbability(std::string_view name) const {
  auto it = active_weights().find(std::string(name));
  if (it == active_weights().end()) return 0;
  return std::clamp(it->second, 0.0, 1.0);
}

}  // namespace solgen
