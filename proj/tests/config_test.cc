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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

namespace solgen {
namespace {

using nlohmann::json;

TEST(GenConfigTest, DefaultsSatisfyInvariants) {
  GenConfig cfg;
  EXPECT_NO_THROW(cfg.Check());
  EXPECT_LE(cfg.max_live_locals, kHardLiveLocalCap);
  EXPECT_GE(cfg.loop_bound_range.lo, 1u);
  double total = 0;
  for (const auto& [kind, w] : cfg.stmt_weights) {
    EXPECT_GE(w, 0.0) << kind;
    total += w;
  }
  EXPECT_GT(total, 0.0);
}

TEST(GenConfigTest, JsonRoundTrip) {
  GenConfig cfg;
  cfg.max_functions = 3;
  cfg.loop_bound_range = {2, 5};
  cfg.stmt_weights[std::string(stmt_kind::kLoop)] = 0.0;
  EXPECT_EQ(ConfigFromJson(ConfigToJson(cfg)), cfg);
}

TEST(GenConfigTest, RangeAcceptsArrayAndObject) {
  GenConfig a = ConfigFromJson(json::parse(R"({"loop_bound_range": [2, 4]})"));
  GenConfig b = ConfigFromJson(json::parse(R"({"loop_bound_range": {"lo": 2, "hi": 4}})"));
  EXPECT_EQ(a.loop_bound_range, (Range{2, 4}));
  EXPECT_EQ(b.loop_bound_range, (Range{2, 4}));
}

TEST(GenConfigTest, UnknownKeyIsNamed) {
  try {
    ConfigFromJson(json::parse(R"({"max_fnctions": 3})"));
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("max_fnctions"), std::string::npos);
  }
}

TEST(GenConfigTest, UnknownNestedKeyIsNamedWithPath) {
  try {
    ConfigFromJson(json::parse(R"({"stmt_weights": {"goto": 1}})"));
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("stmt_weights.goto"), std::string::npos);
  }
}

TEST(GenConfigTest, RejectsLiveLocalsAboveHardCap) {
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"max_live_locals": 17})")), ConfigError);
}

TEST(GenConfigTest, RejectsZeroLoopBound) {
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"loop_bound_range": [0, 3]})")), ConfigError);
}

TEST(GenConfigTest, RejectsNegativeWeightAndAllZeroStatements) {
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"expr_weights": {"literal": -1}})")),
               ConfigError);
  json zero = json::object();
  for (const auto& [kind, w] : GenConfig().stmt_weights) zero[kind] = 0;
  EXPECT_THROW(ConfigFromJson(json{{"stmt_weights", zero}}), ConfigError);
}

TEST(GenConfigTest, RejectsWrongValueType) {
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"max_functions": "many"})")), ConfigError);
}

TEST(GenConfigTest, LoadConfigReportsMissingFile) {
  EXPECT_THROW(LoadConfig("/nonexistent/solgen.json"), ConfigError);
}

TEST(GenConfigTest, LoadConfigReadsFile) {
  auto path = std::filesystem::temp_directory_path() / "solgen_config_test.json";
  std::ofstream(path) << R"({"max_functions": 2})";
  EXPECT_EQ(LoadConfig(path).max_functions, 2u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace solgen
