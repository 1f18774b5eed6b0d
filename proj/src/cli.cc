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
#include "solgen/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>

#include "CLI11.hpp"
#include "solgen/config.h"
#include "solgen/emitter.h"
#include "solgen/generator.h"
#include "solgen/harness/campaign.h"
#include "solgen/harness/compiler.h"
#include "solgen/harness/executor.h"
#include "solgen/harness/fixtures.h"
#include "solgen/harness/process.h"

#ifndef SOLGEN_DEFAULT_TOOLCHAIN_DIR
#define SOLGEN_DEFAULT_TOOLCHAIN_DIR ""
#endif

namespace solgen {
namespace {

namespace fs = std::filesystem;
using harness::CompilerConfig;

std::string FromEnv(const std::string& flag, const char* var, const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (const char* value = std::getenv(var); value != nullptr && *value) return value;
  return fallback;
}

std::string DefaultSolcDir() {
  std::string root = SOLGEN_DEFAULT_TOOLCHAIN_DIR;
  return root.empty() ? "" : root + "/solc";
}

std::string DefaultEvmCmd() {
  std::string root = SOLGEN_DEFAULT_TOOLCHAIN_DIR;
  return root.empty() ? "" : root + "/evm-backend";
}

GenConfig LoadGenConfig(const std::string& path) {
  return path.empty() ? GenConfig{} : LoadConfig(path);
}

std::vector<CompilerConfig> ResolveMatrix(const std::string& spec, const std::string& version) {
  if (!spec.empty() && spec.size() > 5 && spec.ends_with(".json")) {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot read matrix file " + spec);
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<CompilerConfig> matrix;
    for (const nlohmann::json& cell : j) matrix.push_back(harness::CompilerConfigFromJson(cell));
    if (matrix.empty()) throw std::invalid_argument("empty matrix in " + spec);
    return matrix;
  }
  return harness::FilterMatrix(harness::DefaultMatrix(version), spec);
}

// Returns the first missing binary, or empty when all are present.
std::string MissingCompiler(const harness::SolcCompiler& compiler,
                            const std::vector<CompilerConfig>& matrix) {
  for (const CompilerConfig& cc : matrix) {
    std::string path = compiler.BinaryPath(cc.compiler_version);
    if (!fs::exists(path)) return path;
  }
  return "";
}

int Generate(uint64_t seed, uint64_t count, const std::string& out_dir,
             const std::string& config_path, std::ostream& out) {
  GenConfig config = LoadGenConfig(config_path);
  fs::create_directories(out_dir);
  uint64_t total = 0;
  for (uint64_t s = seed; s < seed + count; ++s) {
    std::string source = GenerateSource(s, config);
    std::string path = (fs::path(out_dir) / (std::to_string(s) + ".sol")).string();
    harness::WriteFile(path, source);
    size_t lines = LineCount(source);
    total += lines;
    out << path << " " << lines << " lines\n";
  }
  if (count > 0) {
    out << "mean " << std::fixed << std::setprecision(1)
        << static_cast<double>(total) / static_cast<double>(count) << " lines over " << count
        << " programs\n";
  }
  return kExitClean;
}

struct TestFlags {
  uint64_t seed = 0;
  uint64_t count = 1;
  std::string matrix;
  std::string solc_dir;
  std::string evm_cmd;
  std::string out = "solgen-out";
  std::string config;
  std::string version = "0.8.28";
  int jobs = 1;
  bool sequential = false;
};

int Test(const TestFlags& flags, std::ostream& out, std::ostream& err) {
  harness::CampaignOptions options;
  options.first_seed = flags.seed;
  options.count = flags.count;
  options.gen = LoadGenConfig(flags.config);
  options.matrix = ResolveMatrix(flags.matrix, flags.version);
  options.out_dir = flags.out;
  options.jobs = flags.jobs;
  options.mode = flags.sequential ? harness::ExecMode::kSequential : harness::ExecMode::kFresh;

  std::string solc_dir = FromEnv(flags.solc_dir, "SOLGEN_SOLC_DIR", DefaultSolcDir());
  std::string evm_cmd = FromEnv(flags.evm_cmd, "SOLGEN_EVM_CMD", DefaultEvmCmd());
  harness::SolcCompiler compiler(solc_dir);
  if (std::string missing = MissingCompiler(compiler, options.matrix); !missing.empty()) {
    err << "error: compiler binary not found: " << missing
        << "\nhint: run tools/toolchain/setup_toolchain.sh or pass --solc-dir/SOLGEN_SOLC_DIR\n";
    return kExitEnvironment;
  }
  if (evm_cmd.empty()) {
    err << "error: no EVM backend\nhint: pass --evm-cmd or set SOLGEN_EVM_CMD\n";
    return kExitEnvironment;
  }
  harness::ProcessBackend backend(evm_cmd);
  harness::CampaignResult result =
      harness::RunCampaign(options, compiler, backend, [&](const harness::DivergenceReport& r) {
        out << r.program_path << " "
            << (r.environment_error ? "environment_error" : harness::ToString(r.verdict));
        if (r.environment_error) out << " (" << *r.environment_error << ")";
        out << "\n" << std::flush;
      });
  const harness::CampaignSummary& s = result.summary;
  out << "programs " << s.programs << ", equivalent " << s.verdicts.at("equivalent")
      << ", divergent " << s.verdicts.at("divergent") << ", crash " << s.verdicts.at("crash")
      << ", all_invalid " << s.verdicts.at("all_invalid") << ", environment errors "
      << s.environment_errors << "\n";
  out << "validity " << std::fixed << std::setprecision(3) << s.validity_rate << ", lines mean "
      << std::setprecision(1) << s.mean_lines << " min " << s.min_lines << " max "
      << s.max_lines << "\n";
  out << "reports in " << flags.out << "\n";
  if (s.environment_errors > 0) {
    err << "error: " << s.environment_errors << " seeds hit environment errors\n";
    return kExitEnvironment;
  }
  return s.findings() > 0 ? kExitFindings : kExitClean;
}

int Regress(const std::string& solc_flag, const std::string& evm_flag, const std::string& out_dir,
            const std::string& version, std::ostream& out, std::ostream& err) {
  std::string solc_dir = FromEnv(solc_flag, "SOLGEN_SOLC_DIR", DefaultSolcDir());
  std::string evm_cmd = FromEnv(evm_flag, "SOLGEN_EVM_CMD", DefaultEvmCmd());
  harness::SolcCompiler compiler(solc_dir);
  std::vector<harness::Fixture> fixtures = harness::RegressionFixtures(version);
  if (!fs::exists(compiler.BinaryPath(version))) {
    err << "notice: regression skipped, compiler binary not found: "
        << compiler.BinaryPath(version)
        << "\nhint: run tools/toolchain/setup_toolchain.sh or pass --solc-dir/SOLGEN_SOLC_DIR\n";
    return kExitEnvironment;
  }
  if (evm_cmd.empty()) {
    err << "error: no EVM backend\nhint: pass --evm-cmd or set SOLGEN_EVM_CMD\n";
    return kExitEnvironment;
  }
  harness::ProcessBackend backend(evm_cmd);
  std::vector<harness::FixtureResult> results =
      harness::RunRegression(fixtures, compiler, backend, out_dir);
  bool environment = false;
  bool findings = false;
  for (size_t i = 0; i < results.size(); ++i) {
    const harness::FixtureResult& r = results[i];
    out << r.name << " ";
    if (r.report.environment_error) {
      environment = true;
      out << "environment_error (" << *r.report.environment_error << ")\n";
      continue;
    }
    out << harness::ToString(r.report.verdict);
    if (r.report.diff) {
      out << " at " << r.report.diff->function << "/" << r.report.diff->field << " ("
          << r.report.diff->config_a << ": " << r.report.diff->lhs << ", "
          << r.report.diff->config_b << ": " << r.report.diff->rhs << ")";
    }
    out << " expected " << harness::ToString(fixtures[i].symptom) << ": "
        << (r.symptom_matched ? "matched" : "not matched") << "\n";
    findings = findings || r.report.verdict == harness::Verdict::kDivergent ||
               r.report.verdict == harness::Verdict::kCrash;
  }
  if (environment) return kExitEnvironment;
  return findings ? kExitFindings : kExitClean;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random Solidity program generator and differential compiler tester", "solgen"};
  app.require_subcommand(1);

  uint64_t gen_seed = 0;
  uint64_t gen_count = 1;
  std::string gen_out;
  std::string gen_config;
  CLI::App* generate = app.add_subcommand("generate", "Write <seed>.sol programs");
  generate->add_option("--seed", gen_seed, "First seed");
  generate->add_option("--count", gen_count, "Number of programs");
  generate->add_option("--out", gen_out, "Output directory")->required();
  generate->add_option("--config", gen_config, "Generator config JSON");

  TestFlags test_flags;
  CLI::App* test = app.add_subcommand("test", "Differential campaign over a seed range");
  test->add_option("--seed", test_flags.seed, "First seed");
  test->add_option("--count", test_flags.count, "Number of programs");
  test->add_option("--matrix", test_flags.matrix,
                   "Comma separated cell labels of the default matrix, or a JSON file");
  test->add_option("--solc-dir", test_flags.solc_dir, "Directory of solc-<version> binaries");
  test->add_option("--evm-cmd", test_flags.evm_cmd, "EVM backend command");
  test->add_option("--out", test_flags.out, "Output directory");
  test->add_option("--config", test_flags.config, "Generator config JSON");
  test->add_option("--compiler-version", test_flags.version, "Version for the default matrix");
  test->add_option("--jobs", test_flags.jobs, "Worker threads")->check(CLI::Range(1, 256));
  test->add_flag("--sequential", test_flags.sequential, "Call functions on one deployment");

  std::string reg_solc, reg_evm, reg_out, reg_version = "0.8.0";
  CLI::App* regress = app.add_subcommand("regress", "Run the known-defect fixtures");
  regress->add_option("--solc-dir", reg_solc, "Directory of solc-<version> binaries");
  regress->add_option("--evm-cmd", reg_evm, "EVM backend command");
  regress->add_option("--out", reg_out, "Report directory");
  regress->add_option("--compiler-version", reg_version, "Compiler version under test");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitEnvironment;
  }
  try {
    if (generate->parsed()) return Generate(gen_seed, gen_count, gen_out, gen_config, out);
    if (test->parsed()) return Test(test_flags, out, err);
    if (regress->parsed()) return Regress(reg_solc, reg_evm, reg_out, reg_version, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitEnvironment;
}

}  // namespace solgen
