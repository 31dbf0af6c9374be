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

// Acceptance suite. Prints one line per criterion and exits non-zero when
// any criterion fails. AC6 needs the full resources and is skipped unless
// CQBENCH_FULL_RESOURCES names a directory holding data.{noun,verb,adj},
// WordNetMappings30-{noun,verb,adj}.txt, the SUO-KIF files (*.kif) and
// optionally morphosemantic.csv.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stop_token>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "pipeline.h"
#include "support.h"

namespace cqbench::acceptance {
namespace {

namespace fs = std::filesystem;
using namespace cqbench::testing;
using pipeline::ClassifyMode;
using pipeline::OutputLayout;
using pipeline::RunConfig;

constexpr double kFixtureBudgetS = 5.0;
constexpr int kSoundnessCases = 1000;
constexpr int kSoundnessMaxDomain = 4;
constexpr double kSoundnessBudgetS = 60.0;
constexpr size_t kSampleCorpus = 16972;
constexpr double kSampleFraction = 0.01;
constexpr size_t kExpectedSample = 169;
constexpr int kUniformitySeeds = 10000;
constexpr double kTotalTolerance = 0.10;
constexpr double kRowTolerance = 0.15;
constexpr std::string_view kPublishedTotalRow =
    "169 / 65 / 51(11) / 14 / 65 / 0 / 17 / 9(2) / 8 / 17 / 0 / 87 / 51(11) / "
    "36 / 111(24) / 58 / 82 / 0 / 87";

enum class Verdict { kPass, kFail, kSkip };

struct Result {
  Verdict verdict = Verdict::kFail;
  std::string detail;
};

Result pass(std::string detail) { return {Verdict::kPass, std::move(detail)}; }
Result fail(std::string detail) { return {Verdict::kFail, std::move(detail)}; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

RunConfig fixture_config(const fs::path& out) {
  RunConfig c;
  c.wordnet_dir = fixture_path("");
  c.mapping_dir = fixture_path("");
  c.morphosemantic_csv = fixture_path("morphosemantic.csv");
  c.kif_files = {fixture_path("mini_sumo.kif")};
  c.axiom_file = fixture_path("mini_fol_sumo.p");
  c.bridge_csv = fixture_path("bridges.csv");
  c.output_dir = out;
  c.prover.command_template = stub_prover_path().string() + " {problem}";
  c.prover.time_limit_s = 10;
  c.prover.workers = 4;
  return c;
}

std::map<std::string, Classification> by_id(const std::vector<ResultRow>& rows) {
  std::map<std::string, Classification> out;
  for (const auto& r : rows) out[r.cq_id] = r.classification;
  return out;
}

Result ac1_fixture_labels() {
  const std::vector<std::pair<std::string, Classification>> expected = {
      {"noun2_08191230n_08198398n_Army_MilitaryService", Classification::kEntailed},
      {"noun1_11450566n_11449907n_Lightning_Radiating", Classification::kEntailed},
      {"noun2_00841628n_00831191n_Smoking_Breathing", Classification::kIncompatible},
      {"noun2_09247410n_00034213n_Cloud_NaturalProcess", Classification::kIncompatible},
      {"antonym2_02082690v_02085898v_Removing_Transfer", Classification::kIncompatible},
      {"instrument_01614925v_03699975n_Making_Machine", Classification::kUnknown}};
  TempDir dir;
  auto start = std::chrono::steady_clock::now();
  std::ostringstream log;
  RunConfig config = fixture_config(dir.path());
  pipeline::cmd_generate(config, log);
  auto labels = by_id(pipeline::cmd_classify(config, ClassifyMode::kOracle, log).oracle);
  double elapsed = seconds_since(start);
  int matched = 0;
  std::string misses;
  for (const auto& [id, want] : expected) {
    auto it = labels.find(id);
    if (it != labels.end() && it->second == want) {
      ++matched;
    } else {
      misses += fmt::format(" {}={}", id,
                            it == labels.end() ? "missing" : to_string(it->second));
    }
  }
  std::string detail = fmt::format("{}/6 labels in {:.2f} s{}", matched, elapsed, misses);
  return matched == 6 && elapsed < kFixtureBudgetS ? pass(detail) : fail(detail);
}

Result ac2_soundness() {
  SoundnessStats stats;
  auto start = std::chrono::steady_clock::now();
  auto violations =
      check_oracle_soundness(20260, kSoundnessCases, kSoundnessMaxDomain, &stats);
  double elapsed = seconds_since(start);
  std::string detail = fmt::format(
      "{} cases, {} proofs checked in {} models up to domain {}, {} violations, "
      "{:.1f} s",
      stats.cases, stats.proofs, stats.models, stats.max_domain_checked,
      violations.size(), elapsed);
  if (!violations.empty()) detail += "; first: " + violations.front();
  bool ok = violations.empty() && stats.cases == kSoundnessCases &&
            stats.proofs > 0 && elapsed < kSoundnessBudgetS;
  return ok ? pass(detail) : fail(detail);
}

Result ac3_golden_emission() {
  const auto& world = fixture_world();
  int identical = 0;
  std::string misses;
  for (std::string_view id : {"instrument_01614925v_03699975n_Making_Machine",
                              "noun2_00841628n_00831191n_Smoking_Breathing"}) {
    const auto* cq = world.find(id);
    if (cq == nullptr) {
      misses += fmt::format(" {} not generated", id);
      continue;
    }
    auto docs = emit_tptp(*cq, "mini_fol_sumo.p");
    for (const auto* doc : {&docs.truth, &docs.falsity}) {
      if (doc->text == read_file(golden_path(doc->name + ".p"))) {
        ++identical;
      } else {
        misses += " " + doc->name;
      }
    }
  }
  std::string detail = fmt::format("{}/4 files byte-identical{}", identical, misses);
  return identical == 4 ? pass(detail) : fail(detail);
}

Result ac4_sampling() {
  auto a = sample_indices(kSampleCorpus, kSampleFraction, 1);
  auto b = sample_indices(kSampleCorpus, kSampleFraction, 1);
  auto c = sample_indices(kSampleCorpus, kSampleFraction, 2);
  std::set<size_t> distinct(a.begin(), a.end());
  auto uniformity = check_sampling_uniformity(kUniformitySeeds);
  std::string detail = fmt::format(
      "{} of {} sampled, {} distinct, deterministic={}, seed-sensitive={}, "
      "uniformity violations={}",
      a.size(), kSampleCorpus, distinct.size(), a == b, a != c, uniformity.size());
  bool ok = a.size() == kExpectedSample && distinct.size() == a.size() &&
            a == b && a != c && uniformity.empty();
  return ok ? pass(detail) : fail(detail);
}

Result ac5_total_row() {
  std::string row =
      format_row_compact(build_analysis_table(published_total_row_records()).total);
  return row == kPublishedTotalRow ? pass(row) : fail(row);
}

Result ac6_full_scale() {
  const char* env = std::getenv("CQBENCH_FULL_RESOURCES");
  if (env == nullptr || *env == '\0') {
    return {Verdict::kSkip, "CQBENCH_FULL_RESOURCES not set"};
  }
  fs::path root(env);
  TempDir dir;
  RunConfig config;
  config.wordnet_dir = root;
  config.mapping_dir = root;
  if (fs::exists(root / "morphosemantic.csv")) {
    config.morphosemantic_csv = root / "morphosemantic.csv";
  }
  for (const auto& e : fs::directory_iterator(root)) {
    if (e.path().extension() == ".kif") config.kif_files.push_back(e.path());
  }
  std::sort(config.kif_files.begin(), config.kif_files.end());
  config.axiom_file = root / "SUMO.fof";
  config.unknown_suffix = UnknownSuffixPolicy::kSkip;
  config.output_dir = dir.path();
  std::ostringstream log;
  auto summary = pipeline::cmd_generate(config, log);
  auto published = published_qp_counts();
  auto deviation = [](size_t ours, size_t theirs) {
    return std::abs(static_cast<double>(ours) - static_cast<double>(theirs)) /
           static_cast<double>(theirs);
  };
  bool ok = deviation(summary.counts.total(), published.total()) <= kTotalTolerance;
  std::string detail = fmt::format("total {} vs {}", summary.counts.total(),
                                   published.total());
  for (QpKind k : kAllQpKinds) {
    double d = deviation(summary.counts[k], published[k]);
    ok = ok && d <= kRowTolerance;
    detail += fmt::format("; {} {} ({:+.1f}%)", qp_tag(k), summary.counts[k],
                          100.0 * (static_cast<double>(summary.counts[k]) -
                                   static_cast<double>(published[k])) /
                              static_cast<double>(published[k]));
  }
  return ok ? pass(detail) : fail(detail);
}

std::vector<ProblemPair> manifest_pairs(const OutputLayout& out) {
  std::vector<ProblemPair> pairs;
  for (const auto& row : read_manifest(out.manifest())) {
    pairs.push_back({row.cq_id, fs::absolute(out.root / row.truth_file),
                     fs::absolute(out.root / row.falsity_file)});
  }
  return pairs;
}

Result ac7_stub_prover() {
  TempDir dir;
  std::ostringstream log;
  RunConfig config = fixture_config(dir.path());
  pipeline::cmd_generate(config, log);
  auto both = pipeline::cmd_classify(config, ClassifyMode::kBoth, log);
  auto oracle = by_id(both.oracle);
  auto prover = by_id(both.prover);
  size_t agree = 0;
  for (const auto& [id, label] : oracle) {
    auto it = prover.find(id);
    agree += it != prover.end() && it->second == label;
  }

  // Interrupted run followed by a resume from its checkpoint.
  auto pairs = manifest_pairs(OutputLayout{dir.path()});
  ScheduleOptions first;
  first.checkpoint = dir / "resume.jsonl";
  first.checkpoint_interval_s = 0;
  std::stop_source stop;
  first.stop = stop.get_token();
  size_t seen = 0;
  first.on_outcome = [&](const TestOutcome&) {
    if (++seen == pairs.size() / 2) stop.request_stop();
  };
  ProverConfig serial = config.prover;
  serial.workers = 1;
  auto partial = schedule(pairs, serial, first);
  ScheduleOptions second;
  second.checkpoint = first.checkpoint;
  auto resumed = schedule(pairs, config.prover, second);
  bool identical = resumed.complete && resumed.outcomes.size() == pairs.size();
  for (size_t i = 0; identical && i < pairs.size(); ++i) {
    const auto& o = resumed.outcomes[i];
    identical = o.cq_id == pairs[i].cq_id && o.classification == oracle[o.cq_id];
  }
  std::string detail = fmt::format(
      "{}/{} prover labels equal the oracle, {} errors; resume reused {} of {} "
      "and reproduced the labels: {}",
      agree, oracle.size(), both.prover_errors, resumed.reused, pairs.size(),
      identical ? "yes" : "no");
  bool ok = !oracle.empty() && agree == oracle.size() &&
            prover.size() == oracle.size() && both.prover_errors == 0 &&
            !partial.complete && resumed.reused == partial.outcomes.size() &&
            resumed.reused > 0 && identical;
  return ok ? pass(detail) : fail(detail);
}

Result ac8_invariants() {
  std::vector<std::pair<std::string, std::vector<std::string>>> suites;
  suites.emplace_back("closure", check_closure_properties(81, 300));
  suites.emplace_back("roundtrip", check_formula_roundtrips(82, 1000));
  suites.emplace_back("determinism", check_generation_determinism());
  suites.emplace_back("identities", check_table_identities(83, 300));
  suites.emplace_back("misalignment", check_misalignment_bounds(84, 300));
  size_t total = 0;
  std::string detail;
  for (const auto& [name, violations] : suites) {
    total += violations.size();
    if (!detail.empty()) detail += ", ";
    detail += fmt::format("{} {}", name, violations.size());
    if (!violations.empty()) detail += " (" + violations.front() + ")";
  }
  detail = fmt::format("{} violations: {}", total, detail);
  return total == 0 ? pass(detail) : fail(detail);
}

}  // namespace
}  // namespace cqbench::acceptance

int main() {
  using namespace cqbench::acceptance;
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"AC1 fixture classification", ac1_fixture_labels},
      {"AC2 oracle soundness", ac2_soundness},
      {"AC3 golden TPTP emission", ac3_golden_emission},
      {"AC4 sampling", ac4_sampling},
      {"AC5 total row", ac5_total_row},
      {"AC6 full-scale counts", ac6_full_scale},
      {"AC7 stub prover and resume", ac7_stub_prover},
      {"AC8 invariant suites", ac8_invariants}};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    std::string_view tag = r.verdict == Verdict::kPass   ? "PASS"
                           : r.verdict == Verdict::kSkip ? "SKIP"
                                                         : "FAIL";
    failures += r.verdict == Verdict::kFail;
    std::cout << fmt::format("[{}] {}: {}", tag, name, r.detail) << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
