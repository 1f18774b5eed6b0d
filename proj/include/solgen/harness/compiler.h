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
#ifndef SOLGEN_HARNESS_COMPILER_H_
#define SOLGEN_HARNESS_COMPILER_H_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace solgen::harness {

enum class Pipeline { kLegacy, kViaIr };

inline constexpr uint64_t kMaxRuns = 4294967295ULL;

struct CompilerConfig {
  std::string label;
  Pipeline pipeline = Pipeline::kLegacy;
  bool optimizer_enabled = false;
  uint64_t runs = 200;
  std::string compiler_version = "0.8.28";
  // Deep-merged into the standard-JSON "settings" object.
  nlohmann::json extra_settings = nlohmann::json::object();

  // Throws std::invalid_argument when runs is outside [1, 2^32-1] with the
  // optimizer enabled or the label is empty.
  void Check() const;
};

enum class CompileStatus { kOk, kCompileError, kCompilerCrash };

struct CompileResult {
  CompileStatus status = CompileStatus::kCompileError;
  std::string diagnostics;
  std::string bytecode;  // hex, no 0x prefix
  nlohmann::json abi = nlohmann::json::array();
};

// No-opt, runs=1 and runs=2^32-1, each crossed with both pipelines.
std::vector<CompilerConfig> DefaultMatrix(const std::string& version = "0.8.28");

// Keeps the cells of `matrix` whose labels appear in the comma separated
// `filter`; an empty filter keeps everything. Throws std::invalid_argument
// on an unknown label.
std::vector<CompilerConfig> FilterMatrix(const std::vector<CompilerConfig>& matrix,
                                         const std::string& filter);

nlohmann::json ConfigToJson(const CompilerConfig& cc);
CompilerConfig CompilerConfigFromJson(const nlohmann::json& j);

// Builds the standard-JSON input document for one source unit.
nlohmann::json StandardJsonRequest(const std::string& source, const CompilerConfig& cc);

// Maps a standard-JSON response (or a failed invocation) onto a result.
CompileResult ClassifyResponse(int exit_code, const std::string& out, const std::string& err,
                               const std::string& contract);

class Compiler {
 public:
  virtual ~Compiler() = default;
  // Throws EnvironmentError when no binary serves cc.compiler_version.
  virtual CompileResult Compile(const std::string& source, const CompilerConfig& cc) = 0;
};

// Runs `<solc_dir>/solc-<version> --standard-json`.
class SolcCompiler : public Compiler {
 public:
  explicit SolcCompiler(std::string solc_dir, std::string contract = "C",
                        std::chrono::milliseconds timeout = std::chrono::minutes(5));
  CompileResult Compile(const std::string& source, const CompilerConfig& cc) override;
  std::string BinaryPath(const std::string& version) const;

 private:
  std::string solc_dir_;
  std::string contract_;
  std::chrono::milliseconds timeout_;
};

}  // namespace solgen::harness

#endif  // SOLGEN_HARNESS_COMPILER_H_
