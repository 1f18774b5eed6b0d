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
#ifndef SOLGEN_HARNESS_FIXTURES_H_
#define SOLGEN_HARNESS_FIXTURES_H_

#include <string>
#include <vector>

#include "solgen/harness/campaign.h"
#include "solgen/harness/compiler.h"
#include "solgen/harness/executor.h"
#include "solgen/harness/outcome.h"

namespace solgen::harness {

enum class Symptom {
  kRevertVsSuccess,     // one cell reverts where another succeeds
  kLogMismatch,         // same call status, different logged values
  kEqualVsUnequalPair,  // LogU ids 0 and 1 equal in one cell, unequal in another
};

const char* ToString(Symptom symptom);

// A known compiler defect reproducer. The programs log the observed values
// through LogU so that log comparison exposes them.
struct Fixture {
  std::string name;
  std::string source;
  std::vector<CompilerConfig> matrix;  // two cells, compiler_version set
  Symptom symptom;
};

// The FullInliner, selector, keccak cache and unchecked reproducers, with
// matrices pinned to `version`.
std::vector<Fixture> RegressionFixtures(const std::string& version = "0.8.0");

// Whether the report exhibits exactly the fixture's symptom class.
bool SymptomMatches(const DivergenceReport& report, Symptom symptom);

struct FixtureResult {
  std::string name;
  DivergenceReport report;
  bool symptom_matched = false;
};

// Runs every fixture; reports are written to <out_dir>/<name>.json when
// out_dir is non-empty.
std::vector<FixtureResult> RunRegression(const std::vector<Fixture>& fixtures,
                                         Compiler& compiler, EvmBackend& backend,
                                         const std::string& out_dir = "");

}  // namespace solgen::harness

#endif  // SOLGEN_HARNESS_FIXTURES_H_
