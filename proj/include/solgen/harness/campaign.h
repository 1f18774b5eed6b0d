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
#ifndef SOLGEN_HARNESS_CAMPAIGN_H_
#define SOLGEN_HARNESS_CAMPAIGN_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "solgen/config.h"
#include "solgen/harness/compiler.h"
#include "solgen/harness/executor.h"
#include "solgen/harness/outcome.h"

namespace solgen::harness {

// Compiles `source` under every cell, executes the ok builds and compares.
// Environment errors are recorded in the report instead of propagating.
DivergenceReport TestSource(const std::string& source, const std::string& program_path,
                            uint64_t seed, const std::vector<CompilerConfig>& matrix,
                            Compiler& compiler, EvmBackend& backend,
                            const std::vector<std::string>& call_order = {},
                            ExecMode mode = ExecMode::kFresh);

struct CampaignOptions {
  uint64_t first_seed = 0;
  uint64_t count = 1;
  GenConfig gen;
  std::vector<CompilerConfig> matrix;
  std::string out_dir;  // empty: nothing is written
  int jobs = 1;
  ExecMode mode = ExecMode::kFresh;
};

struct CampaignSummary {
  uint64_t programs = 0;
  std::map<std::string, uint64_t> verdicts;  // every verdict name present
  uint64_t valid_programs = 0;
  uint64_t environment_errors = 0;
  // Valid programs over programs without environment errors.
  double validity_rate = 0.0;
  std::map<std::string, uint64_t> invalid_per_cell;
  double mean_lines = 0.0;
  uint64_t min_lines = 0;
  uint64_t max_lines = 0;

  uint64_t findings() const;
};

struct CampaignResult {
  std::vector<DivergenceReport> reports;  // ordered by seed
  CampaignSummary summary;
};

// True when no cell of the report is compile_error or compiler_crash.
bool AllCellsCompiled(const DivergenceReport& report);

CampaignSummary Summarize(const std::vector<DivergenceReport>& reports,
                          const std::vector<uint64_t>& line_counts);
nlohmann::json ToJson(const CampaignSummary& summary);

// Generates, emits and tests every seed. Writes <out>/<seed>.sol,
// <out>/reports/<seed>.json and <out>/summary.json when out_dir is set.
// `progress` runs after each finished seed, possibly from a worker thread.
CampaignResult RunCampaign(const CampaignOptions& options, Compiler& compiler,
                           EvmBackend& backend,
                           const std::function<void(const DivergenceReport&)>& progress = {});

// Writes `text` to `path`, creating parent directories.
void WriteFile(const std::string& path, const std::string& text);

}  // namespace solgen::harness

#endif  // SOLGEN_HARNESS_CAMPAIGN_H_
