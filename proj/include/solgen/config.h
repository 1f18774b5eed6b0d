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
#ifndef SOLGEN_CONFIG_H_
#define SOLGEN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace solgen {

// Kind name -> non-negative weight. Ordered so that sampling is stable.
using Weights = std::map<std::string, double>;

struct Range {
  uint64_t lo = 0;
  uint64_t hi = 0;
  bool operator==(const Range&) const = default;
};

namespace stmt_kind {
inline constexpr std::string_view kLocalDecl = "local-decl";
inline constexpr std::string_view kAssignment = "assignment";
inline constexpr std::string_view kConditional = "conditional";
inline constexpr std::string_view kLoop = "loop";
inline constexpr std::string_view kYulBlock = "yul-block";
inline constexpr std::string_view kArrayOp = "array-op";
}  // namespace stmt_kind

namespace expr_kind {
inline constexpr std::string_view kLiteral = "literal";
inline constexpr std::string_view kVariable = "variable";
inline constexpr std::string_view kBinary = "binary";
inline constexpr std::string_view kIndex = "index";
inline constexpr std::string_view kCall = "call";
inline constexpr std::string_view kIncDec = "incdec";
}  // namespace expr_kind

namespace strategy {
inline constexpr std::string_view kKeccakPair = "keccak-pair";
inline constexpr std::string_view kStorageWriteReturn = "storage-write-return";
inline constexpr std::string_view kYulSolvarRef = "yul-solvar-ref";
inline constexpr std::string_view kSelectorAccess = "selector-access";
}  // namespace strategy

struct Distortion {
  double fraction = 0.25;        // probability that a block is distorted
  double multiplier_min = 2.0;
  double multiplier_max = 8.0;
  bool operator==(const Distortion&) const = default;
};

inline constexpr uint64_t kHardLiveLocalCap = 16;

struct GenConfig {
  uint64_t max_functions = 8;
  uint64_t max_blocks_per_function = 4;
  uint64_t max_nodes_per_block = 8;
  uint64_t max_expr_depth = 4;
  uint64_t max_call_nesting = 2;
  uint64_t max_cond_loop_depth = 3;
  uint64_t max_live_locals = 15;
  Range loop_bound_range{1, 8};
  Range state_var_count_range{4, 10};
  Range array_count_range{1, 3};
  Range array_len_range{1, 8};
  Range modifier_count_range{0, 2};
  Range param_count_range{0, 2};
  Range yul_nodes_range{1, 5};

  double constant_probability = 0.2;   // per state variable
  double modifier_probability = 0.5;   // per function, at most one modifier
  double return_probability = 0.6;
  double else_probability = 0.4;
  double keccak_collision_probability = 0.5;

  Weights stmt_weights;
  Weights expr_weights;
  Weights strategy_weights;
  Weights visibility_weights;
  Weights mutability_weights;
  Distortion distortion;

  GenConfig();
  bool operator==(const GenConfig&) const = default;

  // Throws ConfigError when an invariant does not hold.
  void Check() const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Overlays the keys of `json` on the defaults. Unknown keys are rejected
// with the offending key path in the message.
GenConfig ConfigFromJson(const nlohmann::json& json);
GenConfig LoadConfig(const std::filesystem::path& path);
nlohmann::json ConfigToJson(const GenConfig& config);

}  // namespace solgen

#endif  // SOLGEN_CONFIG_H_
