// Copyright 2026 The cqbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQBENCH_PROVER_H_
#define CQBENCH_PROVER_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/classification.h"
#include "cqbench/common.h"

namespace cqbench {

struct ProverConfig {
  // Whitespace-separated argv; single or double quotes group words. The
  // placeholders {problem}, {cpu_limit} and {mem_limit} are substituted in
  // every word.
  std::string command_template;
  double time_limit_s = 60.0;
  int memory_limit_mb = 2048;
  int workers = 1;
  // The process is killed time_limit_s + grace_period_s after launch.
  double grace_period_s = 1.0;

  // Throws Error for a non-positive time limit or worker count.
  void validate() const;
};

enum class VerdictStatus { kProved, kDisproved, kUnknown, kError };

std::string_view to_string(VerdictStatus status);
std::optional<VerdictStatus> parse_verdict_status(std::string_view text);

// Theorem -> Proved; CounterSatisfiable, Satisfiable -> Disproved;
// Timeout, GaveUp, ResourceOut, Unknown -> Unknown; anything else -> Error.
VerdictStatus status_from_szs(std::string_view token);

// Token of the first "SZS status <token>" line, if any.
std::optional<std::string> find_szs_status(std::string_view output);

struct ProverVerdict {
  VerdictStatus status = VerdictStatus::kError;
  std::string szs;  // raw token, empty when the prover printed none
  double wall_time_s = 0.0;
  std::string problem;
  std::string detail;  // error text or output excerpt; empty on success

  bool proved() const { return status == VerdictStatus::kProved; }
};

std::vector<std::string> expand_command(const ProverConfig& config,
                                        const std::filesystem::path& problem);

// Runs one prover process. Never throws for prover failures: a missing
// executable, a crash without SZS output or an unparsable run yields an
// Error verdict with detail; a run killed at the limit yields Unknown.
ProverVerdict run_prover(const std::filesystem::path& problem,
                         const ProverConfig& config);

struct ProblemPair {
  std::string cq_id;
  std::filesystem::path truth;
  std::filesystem::path falsity;
};

struct TestOutcome {
  std::string cq_id;
  ProverVerdict truth;
  ProverVerdict falsity;
  Classification classification = Classification::kUnknown;
  std::string error;  // set when either verdict is an Error
};

TestOutcome make_outcome(std::string cq_id, ProverVerdict truth,
                         ProverVerdict falsity);

// Runs both tests, always.
TestOutcome evaluate_cq(const ProblemPair& problems, const ProverConfig& config);

using Evaluator = std::function<TestOutcome(const ProblemPair&)>;

struct ScheduleOptions {
  // JSON-lines checkpoint; empty disables checkpointing.
  std::filesystem::path checkpoint;
  // Minimum time between checkpoint rewrites. The final state is always
  // written.
  double checkpoint_interval_s = 1.0;
  std::stop_token stop;
  // Called from the writer side, serialised, once per fresh outcome.
  std::function<void(const TestOutcome&)> on_outcome;
  // Replaces evaluate_cq; used by tests.
  Evaluator evaluator;
};

struct ScheduleResult {
  // Input order. When stopped early only finished questions are present.
  std::vector<TestOutcome> outcomes;
  size_t reused = 0;     // taken from the checkpoint
  size_t evaluated = 0;  // proved in this run
  bool complete = false;
};

// Evaluates every pair with up to config.workers concurrent evaluations.
// Questions found in the checkpoint are not re-proved unless their entry
// records an error. Throws Error for a
// corrupt checkpoint or one naming questions outside `problems`.
ScheduleResult schedule(std::span<const ProblemPair> problems,
                        const ProverConfig& config,
                        const ScheduleOptions& options = {});

std::string outcome_to_json(const TestOutcome& outcome);
TestOutcome outcome_from_json(std::string_view line,
                              const SourceLocation& location);

std::vector<TestOutcome> read_checkpoint(const std::filesystem::path& path);
void write_checkpoint(const std::filesystem::path& path,
                      std::span<const TestOutcome> outcomes);

// Results table: cq_id, qp, truth_szs, falsity_szs, classification,
// truth_wall_s, falsity_wall_s.
struct ResultRow {
  std::string cq_id;
  std::string qp;
  std::string truth_szs;
  std::string falsity_szs;
  Classification classification = Classification::kUnknown;
  double truth_wall_s = 0.0;
  double falsity_wall_s = 0.0;
};

ResultRow result_row(const TestOutcome& outcome, std::string qp);
std::string format_results(std::span<const ResultRow> rows);
std::vector<ResultRow> parse_results(std::string_view csv,
                                     std::string_view source);

}  // namespace cqbench

#endif  // CQBENCH_PROVER_H_
