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
#include "solgen/harness/compiler.h"

#include <unistd.h>

#include <sstream>
#include <stdexcept>

#include "solgen/harness/process.h"

namespace solgen::harness {

using nlohmann::json;

void CompilerConfig::Check() const {
  if (label.empty()) throw std::invalid_argument("compiler config without label");
  if (optimizer_enabled && (runs < 1 || runs > kMaxRuns)) {
    throw std::invalid_argument("optimizer runs out of range in " + label);
  }
  if (!extra_settings.is_object()) {
    throw std::invalid_argument("extra_settings must be an object in " + label);
  }
}

std::vector<CompilerConfig> DefaultMatrix(const std::string& version) {
  std::vector<CompilerConfig> out;
  struct Setup {
    const char* name;
    bool enabled;
    uint64_t runs;
  };
  const Setup setups[] = {{"noopt", false, 200}, {"opt1", true, 1}, {"optmax", true, kMaxRuns}};
  for (const Setup& s : setups) {
    for (Pipeline p : {Pipeline::kLegacy, Pipeline::kViaIr}) {
      CompilerConfig cc;
      cc.label = std::string(s.name) + (p == Pipeline::kLegacy ? "-legacy" : "-ir");
      cc.pipeline = p;
      cc.optimizer_enabled = s.enabled;
      cc.runs = s.runs;
      cc.compiler_version = version;
      out.push_back(cc);
    }
  }
  return out;
}

std::vector<CompilerConfig> FilterMatrix(const std::vector<CompilerConfig>& matrix,
                                         const std::string& filter) {
  if (filter.empty()) return matrix;
  std::vector<CompilerConfig> out;
  std::stringstream in(filter);
  for (std::string label; std::getline(in, label, ',');) {
    if (label.empty()) continue;
    bool found = false;
    for (const CompilerConfig& cc : matrix) {
      if (cc.label == label) {
        out.push_back(cc);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown matrix cell: " + label);
  }
  if (out.empty()) throw std::invalid_argument("empty matrix");
  return out;
}

json ConfigToJson(const CompilerConfig& cc) {
  return json{{"label", cc.label},
              {"pipeline", cc.pipeline == Pipeline::kLegacy ? "legacy" : "via_ir"},
              {"optimizer_enabled", cc.optimizer_enabled},
              {"runs", cc.runs},
              {"compiler_version", cc.compiler_version},
              {"extra_settings", cc.extra_settings}};
}

CompilerConfig CompilerConfigFromJson(const json& j) {
  CompilerConfig cc;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "label") {
      cc.label = it->get<std::string>();
    } else if (key == "pipeline") {
      std::string p = it->get<std::string>();
      if (p == "legacy") {
        cc.pipeline = Pipeline::kLegacy;
      } else if (p == "via_ir") {
        cc.pipeline = Pipeline::kViaIr;
      } else {
        throw std::invalid_argument("unknown pipeline: " + p);
      }
    } else if (key == "optimizer_enabled") {
      cc.optimizer_enabled = it->get<bool>();
    } else if (key == "runs") {
      cc.runs = it->get<uint64_t>();
    } else if (key == "compiler_version") {
      cc.compiler_version = it->get<std::string>();
    } else if (key == "extra_settings") {
      cc.extra_settings = *it;
    } else {
      throw std::invalid_argument("unknown compiler config key: " + key);
    }
  }
  cc.Check();
  return cc;
}

json StandardJsonRequest(const std::string& source, const CompilerConfig& cc) {
  json settings;
  settings["optimizer"] = {{"enabled", cc.optimizer_enabled}};
  if (cc.optimizer_enabled) settings["optimizer"]["runs"] = cc.runs;
  if (cc.pipeline == Pipeline::kViaIr) settings["viaIR"] = true;
  settings["outputSelection"] = {{"*", {{"*", {"abi", "evm.bytecode.object"}}}}};
  settings.merge_patch(cc.extra_settings);
  return json{{"language", "Solidity"},
              {"sources", {{"program.sol", {{"content", source}}}}},
              {"settings", settings}};
}

CompileResult ClassifyResponse(int exit_code, const std::string& out, const std::string& err,
                               const std::string& contract) {
  CompileResult result;
  json response = json::parse(out, nullptr, false);
  if (exit_code != 0 || response.is_discarded() || !response.is_object()) {
    result.status = CompileStatus::kCompilerCrash;
    result.diagnostics = "exit " + std::to_string(exit_code) + "\n" + err + out;
    return result;
  }
  bool crashed = false;
  bool failed = false;
  for (const json& e : response.value("errors", json::array())) {
    if (e.value("severity", "") != "error") continue;
    std::string type = e.value("type", "");
    if (type == "InternalCompilerError" || type == "Exception" || type == "FatalError") {
      crashed = true;
    }
    failed = true;
    result.diagnostics += e.value("formattedMessage", e.value("message", type));
    if (!result.diagnostics.empty() && result.diagnostics.back() != '\n') {
      result.diagnostics += '\n';
    }
  }
  if (crashed) {
    result.status = CompileStatus::kCompilerCrash;
    return result;
  }
  if (failed) {
    result.status = CompileStatus::kCompileError;
    return result;
  }
  const json* found = nullptr;
  if (response.contains("contracts")) {
    for (const auto& [file, contracts] : response["contracts"].items()) {
      if (contracts.contains(contract)) found = &contracts[contract];
    }
  }
  if (found == nullptr) {
    result.status = CompileStatus::kCompileError;
    result.diagnostics = "contract " + contract + " missing from compiler output\n";
    return result;
  }
  result.status = CompileStatus::kOk;
  result.abi = found->value("abi", json::array());
  result.bytecode = (*found)["evm"]["bytecode"].value("object", "");
  return result;
}

SolcCompiler::SolcCompiler(std::string solc_dir, std::string contract,
                           std::chrono::milliseconds timeout)
    : solc_dir_(std::move(solc_dir)), contract_(std::move(contract)), timeout_(timeout) {}

std::string SolcCompiler::BinaryPath(const std::string& version) const {
  return solc_dir_ + "/solc-" + version;
}

CompileResult SolcCompiler::Compile(const std::string& source, const CompilerConfig& cc) {
  std::string binary = BinaryPath(cc.compiler_version);
  if (access(binary.c_str(), X_OK) != 0) {
    throw EnvironmentError("compiler binary not found: " + binary +
                           " (set --solc-dir or SOLGEN_SOLC_DIR)");
  }
  std::string request = StandardJsonRequest(source, cc).dump();
  ProcessResult run = RunProcess({binary, "--standard-json"}, request, timeout_);
  if (run.timed_out) {
    CompileResult result;
    result.status = CompileStatus::kCompilerCrash;
    result.diagnostics = "compiler timed out\n";
    return result;
  }
  return ClassifyResponse(run.exit_code, run.out, run.err, contract_);
}

}  // namespace solgen::harness
