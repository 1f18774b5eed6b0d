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
#include "solgen/config.h"

#include <fstream>
#include <functional>
#include <set>

namespace solgen {

using nlohmann::json;

GenConfig::GenConfig() {
  stmt_weights = {
      {std::string(stmt_kind::kLocalDecl), 3},  {std::string(stmt_kind::kAssignment), 4},
      {std::string(stmt_kind::kConditional), 2}, {std::string(stmt_kind::kLoop), 1.5},
      {std::string(stmt_kind::kYulBlock), 1},   {std::string(stmt_kind::kArrayOp), 1.5},
  };
  expr_weights = {
      {std::string(expr_kind::kLiteral), 3}, {std::string(expr_kind::kVariable), 5},
      {std::string(expr_kind::kBinary), 4},  {std::string(expr_kind::kIndex), 1},
      {std::string(expr_kind::kCall), 1},    {std::string(expr_kind::kIncDec), 1},
  };
  strategy_weights = {
      {std::string(strategy::kKeccakPair), 0.3},
      {std::string(strategy::kStorageWriteReturn), 0.1},
      {std::string(strategy::kYulSolvarRef), 0.5},
      {std::string(strategy::kSelectorAccess), 0.2},
  };
  visibility_weights = {{"public", 3}, {"external", 1}, {"internal", 1}};
  mutability_weights = {{"default", 4}, {"view", 1}, {"pure", 2}, {"payable", 1}};
}

namespace {

void CheckWeights(const Weights& weights, std::string_view name, bool need_positive) {
  double total = 0;
  for (const auto& [kind, w] : weights) {
    if (!(w >= 0)) {
      throw ConfigError(std::string(name) + "." + kind + ": weight must be >= 0");
    }
    total += w;
  }
  if (need_positive && total <= 0) {
    throw ConfigError(std::string(name) + ": at least one weight must be > 0");
  }
}

void CheckRange(const Range& r, std::string_view name) {
  if (r.lo > r.hi) throw ConfigError(std::string(name) + ": lo > hi");
}

void CheckProbability(double p, std::string_view name) {
  if (!(p >= 0 && p <= 1)) throw ConfigError(std::string(name) + ": must be in [0, 1]");
}

}  // namespace

void GenConfig::Check() const {
  if (max_live_locals > kHardLiveLocalCap) {
    throw ConfigError("max_live_locals: must be <= " + std::to_string(kHardLiveLocalCap));
  }
  if (max_live_locals < 4) throw ConfigError("max_live_locals: must be >= 4");
  if (loop_bound_range.lo < 1) throw ConfigError("loop_bound_range: lo must be >= 1");
  CheckRange(loop_bound_range, "loop_bound_range");
  CheckRange(state_var_count_range, "state_var_count_range");
  CheckRange(array_count_range, "array_count_range");
  CheckRange(array_len_range, "array_len_range");
  CheckRange(modifier_count_range, "modifier_count_range");
  CheckRange(param_count_range, "param_count_range");
  CheckRange(yul_nodes_range, "yul_nodes_range");
  if (param_count_range.hi > 4) throw ConfigError("param_count_range: hi must be <= 4");
  CheckProbability(constant_probability, "constant_probability");
  CheckProbability(modifier_probability, "modifier_probability");
  CheckProbability(return_probability, "return_probability");
  CheckProbability(else_probability, "else_probability");
  CheckProbability(keccak_collision_probability, "keccak_collision_probability");
  CheckProbability(distortion.fraction, "distortion.fraction");
  if (!(distortion.multiplier_min > 0 && distortion.multiplier_min <= distortion.multiplier_max)) {
    throw ConfigError("distortion: need 0 < multiplier_min <= multiplier_max");
  }
  CheckWeights(stmt_weights, "stmt_weights", true);
  CheckWeights(expr_weights, "expr_weights", false);
  CheckWeights(strategy_weights, "strategy_weights", false);
  CheckWeights(visibility_weights, "visibility_weights", true);
  CheckWeights(mutability_weights, "mutability_weights", true);
}

namespace {

template <typename T>
T Get(const json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path + ": wrong value type");
  }
}

void ReadRange(const json& j, const std::string& path, Range* out) {
  if (j.is_array() && j.size() == 2) {
    out->lo = Get<uint64_t>(j[0], path + "[0]");
    out->hi = Get<uint64_t>(j[1], path + "[1]");
    return;
  }
  if (!j.is_object()) throw ConfigError(path + ": expected [lo, hi] or {lo, hi}");
  for (const auto& [key, value] : j.items()) {
    if (key == "lo") {
      out->lo = Get<uint64_t>(value, path + ".lo");
    } else if (key == "hi") {
      out->hi = Get<uint64_t>(value, path + ".hi");
    } else {
      throw ConfigError("unknown config key: " + path + "." + key);
    }
  }
}

// Known weight keys may be overridden; new keys are rejected.
void ReadWeights(const json& j, const std::string& path, Weights* out) {
  if (!j.is_object()) throw ConfigError(path + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    auto it = out->find(key);
    if (it == out->end()) throw ConfigError("unknown config key: " + path + "." + key);
    it->second = Get<double>(value, path + "." + key);
  }
}

}  // namespace

GenConfig ConfigFromJson(const json& j) {
  GenConfig cfg;
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  using Setter = std::function<void(const json&, const std::string&)>;
  auto count = [&](uint64_t* field) -> Setter {
    return [field](const json& v, const std::string& p) { *field = Get<uint64_t>(v, p); };
  };
  auto real = [&](double* field) -> Setter {
    return [field](const json& v, const std::string& p) { *field = Get<double>(v, p); };
  };
  auto range = [&](Range* field) -> Setter {
    return [field](const json& v, const std::string& p) { ReadRange(v, p, field); };
  };
  auto weights = [&](Weights* field) -> Setter {
    return [field](const json& v, const std::string& p) { ReadWeights(v, p, field); };
  };
  const std::map<std::string, Setter> setters = {
      {"max_functions", count(&cfg.max_functions)},
      {"max_blocks_per_function", count(&cfg.max_blocks_per_function)},
      {"max_nodes_per_block", count(&cfg.max_nodes_per_block)},
      {"max_expr_depth", count(&cfg.max_expr_depth)},
      {"max_call_nesting", count(&cfg.max_call_nesting)},
      {"max_cond_loop_depth", count(&cfg.max_cond_loop_depth)},
      {"max_live_locals", count(&cfg.max_live_locals)},
      {"loop_bound_range", range(&cfg.loop_bound_range)},
      {"state_var_count_range", range(&cfg.state_var_count_range)},
      {"array_count_range", range(&cfg.array_count_range)},
      {"array_len_range", range(&cfg.array_len_range)},
      {"modifier_count_range", range(&cfg.modifier_count_range)},
      {"param_count_range", range(&cfg.param_count_range)},
      {"yul_nodes_range", range(&cfg.yul_nodes_range)},
      {"constant_probability", real(&cfg.constant_probability)},
      {"modifier_probability", real(&cfg.modifier_probability)},
      {"return_probability", real(&cfg.return_probability)},
      {"else_probability", real(&cfg.else_probability)},
      {"keccak_collision_probability", real(&cfg.keccak_collision_probability)},
      {"stmt_weights", weights(&cfg.stmt_weights)},
      {"expr_weights", weights(&cfg.expr_weights)},
      {"strategy_weights", weights(&cfg.strategy_weights)},
      {"visibility_weights", weights(&cfg.visibility_weights)},
      {"mutability_weights", weights(&cfg.mutability_weights)},
      {"distortion",
       [&](const json& v, const std::string& p) {
         if (!v.is_object()) throw ConfigError(p + ": expected an object");
         for (const auto& [key, value] : v.items()) {
           std::string sub = p + "." + key;
           if (key == "fraction") {
             cfg.distortion.fraction = Get<double>(value, sub);
           } else if (key == "multiplier_min") {
             cfg.distortion.multiplier_min = Get<double>(value, sub);
           } else if (key == "multiplier_max") {
             cfg.distortion.multiplier_max = Get<double>(value, sub);
           } else {
             throw ConfigError("unknown config key: " + sub);
           }
         }
       }},
  };
  for (const auto& [key, value] : j.items()) {
    auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key: " + key);
    it->second(value, key);
  }
  cfg.Check();
  return cfg;
}

GenConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return ConfigFromJson(j);
}

json ConfigToJson(const GenConfig& c) {
  auto range = [](const Range& r) { return json::array({r.lo, r.hi}); };
  return json{
      {"max_functions", c.max_functions},
      {"max_blocks_per_function", c.max_blocks_per_function},
      {"max_nodes_per_block", c.max_nodes_per_block},
      {"max_expr_depth", c.max_expr_depth},
      {"max_call_nesting", c.max_call_nesting},
      {"max_cond_loop_depth", c.max_cond_loop_depth},
      {"max_live_locals", c.max_live_locals},
      {"loop_bound_range", range(c.loop_bound_range)},
      {"state_var_count_range", range(c.state_var_count_range)},
      {"array_count_range", range(c.array_count_range)},
      {"array_len_range", range(c.array_len_range)},
      {"modifier_count_range", range(c.modifier_count_range)},
      {"param_count_range", range(c.param_count_range)},
      {"yul_nodes_range", range(c.yul_nodes_range)},
      {"constant_probability", c.constant_probability},
      {"modifier_probability", c.modifier_probability},
      {"return_probability", c.return_probability},
      {"else_probability", c.else_probability},
      {"keccak_collision_probability", c.keccak_collision_probability},
      {"stmt_weights", c.stmt_weights},
      {"expr_weights", c.expr_weights},
      {"strategy_weights", c.strategy_weights},
      {"visibility_weights", c.visibility_weights},
      {"mutability_weights", c.mutability_weights},
      {"distortion",
       {{"fraction", c.distortion.fraction},
        {"multiplier_min", c.distortion.multiplier_min},
        {"multiplier_max", c.distortion.multiplier_max}}},
  };
}

}  // namespace solgen
