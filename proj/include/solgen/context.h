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
#ifndef SOLGEN_CONTEXT_H_
#define SOLGEN_CONTEXT_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "solgen/ast.h"
#include "solgen/config.h"
#include "solgen/policies.h"
#include "solgen/prng.h"

namespace solgen {

// Returns a kind with probability weight / total using one double draw.
// Throws ConfigError when every weight is zero.
const std::string& PickWeighted(Prng& prng, const Weights& weights);

// Multiplies the weights named in `subset` by `factor`.
Weights DistortWeights(const Weights& base, const std::set<std::string>& subset,
                       double factor);

struct LocalSym {
  std::string name;
  Type type = Type::kUint256;
  bool counter = false;  // loop counter: readable, never written
};

// What the builder is currently filling.
struct Frame {
  bool in_modifier = false;
  size_t function_index = 0;  // index the function will take in the program
  std::string function_name;
  Mutability mutability = Mutability::kDefault;
  bool externally_callable = false;

  bool pure() const { return !in_modifier && mutability == Mutability::kPure; }
  bool reads_state() const { return !pure(); }
  bool writes_state() const {
    return in_modifier ||
           mutability == Mutability::kDefault || mutability == Mutability::kPayable;
  }
  bool has_locals() const { return !in_modifier; }
};

// Inline-assembly generation state for the block under construction.
struct YulState {
  bool active = false;
  std::vector<std::vector<std::string>> scopes;
  std::vector<std::set<uint64_t>> written;  // initialized scratch words
  bool in_function = false;
  int depth = 0;
  std::set<std::string> counters;  // for-loop counters: never assigned
  // User functions returning one value, with their parameter counts.
  std::vector<std::pair<std::string, size_t>> value_functions;
  // User functions returning nothing, with their parameter counts.
  std::vector<std::pair<std::string, size_t>> function_arity;

  // Yul variables currently occupying stack slots.
  size_t Live() const {
    size_t n = 0;
    for (const auto& scope : scopes) n += scope.size();
    return n;
  }
};

// Mutable state threaded through every builder for one program.
struct GenContext {
  GenContext(uint64_t seed, const GenConfig& config);

  Prng prng;
  const GenConfig& cfg;
  Program program;
  Frame frame;

  int cond_loop_depth = 0;
  int loop_depth = 0;
  int call_nesting_depth = 0;
  int placeholder_counter = 0;
  UsageState stmt_usage;

  // Rough dynamic cost of the code under construction; bounds gas use.
  uint64_t loop_multiplier = 1;
  uint64_t cost = 0;
  std::vector<std::pair<std::string, uint64_t>> function_costs;

  int next_local = 0;
  int next_yul = 0;
  YulState yul;

  // Local scopes. The outermost scope of a function holds params and return.
  void EnterScope();
  void ExitScope();
  size_t ScopeDepth() const { return scopes_.size(); }
  void DeclareLocal(const std::string& name, Type type, bool counter = false);
  const LocalSym* FindLocal(const std::string& name) const;
  std::vector<LocalSym> VisibleLocals() const;
  size_t LiveLocals() const;
  void ResetFunction();

  // Strategy weight stack.
  const Weights& active_weights() const { return weights_.back(); }
  size_t WeightDepth() const { return weights_.size(); }
  const Weights& DistortRegion();
  void RestoreRegion();
  double StrategyProbability(std::string_view name) const;

  std::string FreshLocal() { return "v" + std::to_string(next_local++); }
  std::string FreshYul(std::string_view prefix) {
    return std::string(prefix) + std::to_string(next_yul++);
  }

 private:
  std::vector<std::vector<LocalSym>> scopes_;
  std::vector<Weights> weights_;
};

}  // namespace solgen

#endif  // SOLGEN_CONTEXT_H_
