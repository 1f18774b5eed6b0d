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
#include "solgen/harness/campaign.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "solgen/emitter.h"
#include "solgen/generator.h"
#include "solgen/harness/process.h"

namespace solgen::harness {

using nlohmann::json;

DivergenceReport TestSource(const std::string& source, const std::string& program_path,
                            uint64_t seed, const std::vector<CompilerConfig>& matrix,
                            Compiler& compiler, EvmBackend& backend,
                            const std::vector<std::string>& call_order, ExecMode mode) {
  if (matrix.empty()) throw std::invalid_argument("empty compiler matrix");
  DivergenceReport report;
  report.program_path = program_path;
  report.seed = seed;
  for (const CompilerConfig& cc : matrix) report.matrix.push_back(cc.label);
  try {
    for (const CompilerConfig& cc : matrix) {
      CompileResult build = compiler.Compile(source, cc);
      ExecutionOutcome outcome;
      if (build.status == CompileStatus::kOk) {
        outcome = Execute(build.bytecode, build.abi, backend, call_order, mode);
      } else {
        outcome.status = build.status == CompileStatus::kCompilerCrash
                             ? OutcomeStatus::kCompilerCrash
                             : OutcomeStatus::kCompileError;
        outcome.diagnostics = build.diagnostics;
      }
      report.outcomes[cc.label] = std::move(outcome);
    }
  } catch (const EnvironmentError& e) {
    report.environment_error = e.what();
    report.outcomes.clear();
    report.verdict = Verdict::kEquivalent;
    return report;
  }
  CompareResult cmp = Compare(report.outcomes);
  report.verdict = cmp.verdict;
  report.diff = cmp.diff;
  return report;
}

uint64_t CampaignSummary::findings() const {
  auto get = [&](const char* key) {
    auto it = verdicts.find(key);
    return it == verdicts.end() ? 0 : it->second;
  };
  return get(ToString(Verdict::kDivergent)) + get(ToString(Verdict::kCrash));
}

bool AllCellsCompiled(const DivergenceReport& report) {
  if (report.environment_error) return false;
  return std::all_of(report.outcomes.begin(), report.outcomes.end(), [](const auto& kv) {
    return kv.second.status != OutcomeStatus::kCompileError &&
           kv.second.status != OutcomeStatus::kCompilerCrash;
  });
}

CampaignSummary Summarize(const std::vector<DivergenceReport>& reports,
                          const std::vector<uint64_t>& line_counts) {
  CampaignSummary s;
  s.programs = reports.size();
  for (Verdict v : {Verdict::kEquivalent, Verdict::kDivergent, Verdict::kCrash,
                    Verdict::kAllInvalid}) {
    s.verdicts[ToString(v)] = 0;
  }
  for (const DivergenceReport& r : reports) {
    if (r.environment_error) {
      ++s.environment_errors;
      continue;
    }
    ++s.verdicts[ToString(r.verdict)];
    if (AllCellsCompiled(r)) ++s.valid_programs;
    for (const auto& [label, outcome] : r.outcomes) {
      if (outcome.status == OutcomeStatus::kCompileError ||
          outcome.status == OutcomeStatus::kCompilerCrash) {
        ++s.invalid_per_cell[label];
      }
    }
  }
  uint64_t evaluated = s.programs - s.environment_errors;
  s.validity_rate = evaluated ? static_cast<double>(s.valid_programs) / evaluated : 0.0;
  if (!line_counts.empty()) {
    uint64_t total = 0;
    for (uint64_t n : line_counts) total += n;
    s.mean_lines = static_cast<double>(total) / line_counts.size();
    s.min_lines = *std::min_element(line_counts.begin(), line_counts.end());
    s.max_lines = *std::max_element(line_counts.begin(), line_counts.end());
  }
  return s;
}

json ToJson(const CampaignSummary& s) {
  return json{{"programs", s.programs},
              {"verdicts", s.verdicts},
              {"valid_programs", s.valid_programs},
              {"environment_errors", s.environment_errors},
              {"validity_rate", s.validity_rate},
              {"invalid_per_cell", s.invalid_per_cell},
              {"lines", {{"mean", s.mean_lines}, {"min", s.min_lines}, {"max", s.max_lines}}}};
}

void WriteFile(const std::string& path, const std::string& text) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

CampaignResult RunCampaign(const CampaignOptions& options, Compiler& compiler,
                           EvmBackend& backend,
                           const std::function<void(const DivergenceReport&)>& progress) {
  if (options.matrix.empty()) throw std::invalid_argument("empty compiler matrix");
  for (const CompilerConfig& cc : options.matrix) cc.Check();
  options.gen.Check();
  const uint64_t n = options.count;
  std::vector<DivergenceReport> reports(n);
  std::vector<uint64_t> lines(n);
  std::atomic<uint64_t> next{0};
  std::mutex progress_mu;
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (uint64_t i = next++; i < n; i = next++) {
      try {
        uint64_t seed = options.first_seed + i;
        Program program = GenerateProgram(seed, options.gen);
        std::string source = EmitProgram(program);
        lines[i] = LineCount(source);
        std::string name = std::to_string(seed) + ".sol";
        std::string path = name;
        if (!options.out_dir.empty()) {
          path = (std::filesystem::path(options.out_dir) / name).string();
          WriteFile(path, source);
        }
        std::vector<std::string> order;
        for (const FunctionDecl& f : program.functions) order.push_back(f.name);
        reports[i] = TestSource(source, name, seed, options.matrix, compiler, backend, order,
                                options.mode);
        if (!options.out_dir.empty()) {
          WriteFile((std::filesystem::path(options.out_dir) / "reports" /
                     (std::to_string(seed) + ".json")).string(),
                    ToJson(reports[i]).dump(2) + "\n");
        }
        if (progress) {
          std::lock_guard<std::mutex> lock(progress_mu);
          progress(reports[i]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  CampaignResult result{std::move(reports), {}};
  result.summary = Summarize(result.reports, lines);
  if (!options.out_dir.empty()) {
    WriteFile((std::filesystem::path(options.out_dir) / "summary.json").string(),
              ToJson(result.summary).dump(2) + "\n");
  }
  return result;
}

}  // namespace solgen::harness
