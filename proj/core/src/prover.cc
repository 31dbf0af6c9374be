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

#include "cqbench/prover.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>
#include <exception>
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "cqbench/csv.h"

extern char** environ;

namespace cqbench {

void ProverConfig::validate() const {
  if (!(time_limit_s > 0)) {
    throw Error(fmt::format("time limit must be positive, got {}", time_limit_s));
  }
  if (workers < 1) {
    throw Error(fmt::format("worker count must be at least 1, got {}", workers));
  }
  if (memory_limit_mb < 1) {
    throw Error(
        fmt::format("memory limit must be positive, got {}", memory_limit_mb));
  }
  if (grace_period_s < 0) {
    throw Error(fmt::format("grace period must not be negative, got {}",
                            grace_period_s));
  }
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kProved: return "Proved";
    case VerdictStatus::kDisproved: return "Disproved";
    case VerdictStatus::kUnknown: return "Unknown";
    case VerdictStatus::kError: return "Error";
  }
  return "Error";
}

std::optional<VerdictStatus> parse_verdict_status(std::string_view text) {
  for (auto s : {VerdictStatus::kProved, VerdictStatus::kDisproved,
                 VerdictStatus::kUnknown, VerdictStatus::kError}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

VerdictStatus status_from_szs(std::string_view token) {
  if (token == "Theorem") return VerdictStatus::kProved;
  if (token == "CounterSatisfiable" || token == "Satisfiable") {
    return VerdictStatus::kDisproved;
  }
  if (token == "Timeout" || token == "GaveUp" || token == "ResourceOut" ||
      token == "Unknown") {
    return VerdictStatus::kUnknown;
  }
  return VerdictStatus::kError;
}

std::optional<std::string> find_szs_status(std::string_view output) {
  static const std::regex kSzs(R"(SZS status\s+(\w+))");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_search(output.begin(), output.end(), m, kSzs)) {
    return m[1].str();
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> split_command(std::string_view text) {
  std::vector<std::string> words;
  std::string word;
  bool in_word = false;
  char quote = 0;
  for (char c : text) {
    if (quote) {
      if (c == quote) {
        quote = 0;
      } else {
        word += c;
      }
    } else if (c == '\'' || c == '"') {
      quote = c;
      in_word = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_word) words.push_back(std::move(word));
      word.clear();
      in_word = false;
    } else {
      word += c;
      in_word = true;
    }
  }
  if (quote) throw Error(fmt::format("unbalanced quote in command '{}'", text));
  if (in_word) words.push_back(std::move(word));
  return words;
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (size_t p = s.find(from); p != std::string::npos;
       p = s.find(from, p + to.size())) {
    s.replace(p, from.size(), to);
  }
}

std::string excerpt(std::string_view output) {
  constexpr size_t kMax = 400;
  std::string_view tail = trim(output);
  if (tail.size() > kMax) tail = tail.substr(tail.size() - kMax);
  return std::string(tail);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::vector<std::string> expand_command(const ProverConfig& config,
                                        const std::filesystem::path& problem) {
  auto words = split_command(config.command_template);
  if (words.empty()) throw Error("empty prover command");
  const std::string cpu = fmt::format("{}", config.time_limit_s);
  const std::string mem = fmt::format("{}", config.memory_limit_mb);
  for (auto& w : words) {
    replace_all(w, "{problem}", problem.string());
    replace_all(w, "{cpu_limit}", cpu);
    replace_all(w, "{mem_limit}", mem);
  }
  return words;
}

ProverVerdict run_prover(const std::filesystem::path& problem,
                         const ProverConfig& config) {
  ProverVerdict verdict;
  verdict.problem = problem.string();
  std::vector<std::string> argv_words;
  try {
    argv_words = expand_command(config, problem);
  } catch (const Error& e) {
    verdict.detail = e.what();
    return verdict;
  }

  int fds[2];
  if (pipe2(fds, O_CLOEXEC) != 0) {
    verdict.detail = fmt::format("pipe: {}", std::strerror(errno));
    return verdict;
  }
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDERR_FILENO);
  posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, "/dev/null",
                                   O_RDONLY, 0);
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  std::vector<char*> argv;
  for (auto& w : argv_words) argv.push_back(w.data());
  argv.push_back(nullptr);

  const auto start = std::chrono::steady_clock::now();
  pid_t pid = 0;
  int rc = posix_spawnp(&pid, argv[0], &actions, &attr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  close(fds[1]);
  if (rc != 0) {
    close(fds[0]);
    verdict.wall_time_s = seconds_since(start);
    verdict.detail =
        fmt::format("cannot execute '{}': {}", argv_words[0], std::strerror(rc));
    return verdict;
  }

  const auto deadline =
      start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                  std::chrono::duration<double>(config.time_limit_s +
                                                config.grace_period_s));
  std::string output;
  bool killed = false;
  char buffer[4096];
  while (true) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      kill(-pid, SIGKILL);
      killed = true;
      break;
    }
    pollfd pfd{fds[0], POLLIN, 0};
    int ready = poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (ready < 0 && errno != EINTR) break;
    if (ready <= 0) continue;
    ssize_t n = read(fds[0], buffer, sizeof buffer);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    output.append(buffer, static_cast<size_t>(n));
  }
  close(fds[0]);
  int wstatus = 0;
  while (waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {
  }
  // Descendants that kept the pipe open are gone with the group.
  if (!killed) kill(-pid, SIGKILL);
  verdict.wall_time_s = seconds_since(start);

  if (auto token = find_szs_status(output)) {
    verdict.szs = *token;
    verdict.status = status_from_szs(*token);
    if (verdict.status == VerdictStatus::kError) {
      verdict.detail = fmt::format("SZS status {}: {}", *token, excerpt(output));
    }
    return verdict;
  }
  if (killed) {
    verdict.status = VerdictStatus::kUnknown;
    verdict.detail = fmt::format("killed after {:.2f} s", verdict.wall_time_s);
    return verdict;
  }
  std::string how = WIFEXITED(wstatus)
                        ? fmt::format("exit code {}", WEXITSTATUS(wstatus))
                        : fmt::format("signal {}", WTERMSIG(wstatus));
  verdict.detail = fmt::format("no SZS status ({}): {}", how, excerpt(output));
  return verdict;
}

TestOutcome make_outcome(std::string cq_id, ProverVerdict truth,
                         ProverVerdict falsity) {
  TestOutcome out;
  out.cq_id = std::move(cq_id);
  std::vector<std::string> errors;
  if (truth.status == VerdictStatus::kError) {
    errors.push_back("truth: " + truth.detail);
  }
  if (falsity.status == VerdictStatus::kError) {
    errors.push_back("falsity: " + falsity.detail);
  }
  out.classification = errors.empty()
                           ? classify(truth.proved(), falsity.proved())
                           : Classification::kUnknown;
  for (const auto& e : errors) {
    if (!out.error.empty()) out.error += "; ";
    out.error += e;
  }
  out.truth = std::move(truth);
  out.falsity = std::move(falsity);
  return out;
}

TestOutcome evaluate_cq(const ProblemPair& problems, const ProverConfig& config) {
  ProverVerdict truth = run_prover(problems.truth, config);
  ProverVerdict falsity = run_prover(problems.falsity, config);
  return make_outcome(problems.cq_id, std::move(truth), std::move(falsity));
}

namespace {

nlohmann::json verdict_json(const ProverVerdict& v) {
  return {{"status", to_string(v.status)}, {"szs", v.szs},
          {"wall_time_s", v.wall_time_s},  {"problem", v.problem},
          {"detail", v.detail}};
}

ProverVerdict verdict_from(const nlohmann::json& j) {
  ProverVerdict v;
  auto status = parse_verdict_status(j.at("status").get<std::string>());
  if (!status) throw Error("unknown verdict status");
  v.status = *status;
  v.szs = j.at("szs").get<std::string>();
  v.wall_time_s = j.at("wall_time_s").get<double>();
  v.problem = j.at("problem").get<std::string>();
  v.detail = j.at("detail").get<std::string>();
  return v;
}

}  // namespace

std::string outcome_to_json(const TestOutcome& outcome) {
  nlohmann::json j = {{"cq_id", outcome.cq_id},
                      {"classification", to_string(outcome.classification)},
                      {"error", outcome.error},
                      {"truth", verdict_json(outcome.truth)},
                      {"falsity", verdict_json(outcome.falsity)}};
  return j.dump();
}

TestOutcome outcome_from_json(std::string_view line,
                              const SourceLocation& location) {
  try {
    auto j = nlohmann::json::parse(line);
    TestOutcome stored = make_outcome(j.at("cq_id").get<std::string>(),
                                      verdict_from(j.at("truth")),
                                      verdict_from(j.at("falsity")));
    auto recorded = parse_classification(j.at("classification").get<std::string>());
    if (!recorded || *recorded != stored.classification) {
      throw Error("classification does not match the recorded verdicts");
    }
    if (stored.cq_id.empty()) throw Error("empty cq_id");
    return stored;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("corrupt checkpoint line: {}", e.what()),
                     location);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(fmt::format("corrupt checkpoint line: {}", e.what()),
                     location);
  }
}

std::vector<TestOutcome> read_checkpoint(const std::filesystem::path& path) {
  TextSource src = read_text_file(path);
  std::vector<TestOutcome> out;
  std::set<std::string> seen;
  int line_no = 0;
  for (std::string_view line : split_lines(src.content)) {
    ++line_no;
    if (trim(line).empty()) continue;
    SourceLocation at{src.name, line_no, 0};
    TestOutcome o = outcome_from_json(line, at);
    if (!seen.insert(o.cq_id).second) {
      throw ParseError(fmt::format("duplicate checkpoint entry {}", o.cq_id), at);
    }
    out.push_back(std::move(o));
  }
  return out;
}

void write_checkpoint(const std::filesystem::path& path,
                      std::span<const TestOutcome> outcomes) {
  std::string text;
  for (const auto& o : outcomes) {
    text += outcome_to_json(o);
    text += '\n';
  }
  write_file_atomically(path, text);
}

ScheduleResult schedule(std::span<const ProblemPair> problems,
                        const ProverConfig& config,
                        const ScheduleOptions& options) {
  config.validate();
  std::map<std::string, size_t> position;
  for (size_t i = 0; i < problems.size(); ++i) {
    if (!position.emplace(problems[i].cq_id, i).second) {
      throw Error(fmt::format("duplicate question id {}", problems[i].cq_id));
    }
  }

  std::vector<std::optional<TestOutcome>> slots(problems.size());
  ScheduleResult result;
  if (!options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
    for (auto& o : read_checkpoint(options.checkpoint)) {
      auto it = position.find(o.cq_id);
      if (it == position.end()) {
        throw Error(fmt::format("checkpoint {} names unknown question {}",
                                options.checkpoint.string(), o.cq_id));
      }
      // Failed runs are retried.
      if (!o.error.empty()) continue;
      slots[it->second] = std::move(o);
      ++result.reused;
    }
  }

  std::vector<size_t> pending;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) pending.push_back(i);
  }

  Evaluator evaluate = options.evaluator
                           ? options.evaluator
                           : [&config](const ProblemPair& p) {
                               return evaluate_cq(p, config);
                             };

  std::mutex mu;
  std::exception_ptr failure;
  auto last_write = std::chrono::steady_clock::now();
  auto finished = [&] {
    std::vector<TestOutcome> done;
    for (const auto& s : slots) {
      if (s) done.push_back(*s);
    }
    return done;
  };

  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      if (options.stop.stop_requested()) return;
      {
        std::lock_guard lock(mu);
        if (failure) return;
      }
      size_t k = next.fetch_add(1);
      if (k >= pending.size()) return;
      size_t index = pending[k];
      try {
        TestOutcome outcome = evaluate(problems[index]);
        std::lock_guard lock(mu);
        slots[index] = outcome;
        ++result.evaluated;
        if (options.on_outcome) options.on_outcome(outcome);
        if (!options.checkpoint.empty() &&
            seconds_since(last_write) >= options.checkpoint_interval_s) {
          write_checkpoint(options.checkpoint, finished());
          last_write = std::chrono::steady_clock::now();
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  {
    size_t count = std::min<size_t>(static_cast<size_t>(config.workers),
                                    pending.size());
    std::vector<std::jthread> threads;
    threads.reserve(count);
    for (size_t i = 0; i < count; ++i) threads.emplace_back(worker);
  }

  if (!options.checkpoint.empty()) write_checkpoint(options.checkpoint, finished());
  if (failure) std::rethrow_exception(failure);

  result.complete = std::all_of(slots.begin(), slots.end(),
                                [](const auto& s) { return s.has_value(); });
  for (auto& s : slots) {
    if (s) result.outcomes.push_back(std::move(*s));
  }
  return result;
}

ResultRow result_row(const TestOutcome& outcome, std::string qp) {
  return {outcome.cq_id,          std::move(qp),
          outcome.truth.szs,      outcome.falsity.szs,
          outcome.classification, outcome.truth.wall_time_s,
          outcome.falsity.wall_time_s};
}

namespace {

constexpr std::string_view kResultColumns[] = {
    "cq_id",          "qp",           "truth_szs",     "falsity_szs",
    "classification", "truth_wall_s", "falsity_wall_s"};

}  // namespace

std::string format_results(std::span<const ResultRow> rows) {
  std::string out = csv_line(
      std::vector<std::string>(std::begin(kResultColumns), std::end(kResultColumns)));
  for (const auto& r : rows) {
    out += csv_line({r.cq_id, r.qp, r.truth_szs, r.falsity_szs,
                     std::string(to_string(r.classification)),
                     fmt::format("{:.3f}", r.truth_wall_s),
                     fmt::format("{:.3f}", r.falsity_wall_s)});
  }
  return out;
}

std::vector<ResultRow> parse_results(std::string_view csv,
                                     std::string_view source) {
  auto records = parse_csv(csv, source);
  if (records.empty()) return {};
  CsvHeader header(records.front());
  size_t cols[std::size(kResultColumns)];
  for (size_t i = 0; i < std::size(kResultColumns); ++i) {
    cols[i] = header.require(kResultColumns[i], source);
  }
  std::vector<ResultRow> rows;
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    SourceLocation at{std::string(source), records[r].line, 0};
    if (f.size() < std::size(kResultColumns)) {
      throw ParseError("short results row", at);
    }
    auto cls = parse_classification(f[cols[4]]);
    if (!cls) {
      throw ParseError(fmt::format("unknown classification '{}'", f[cols[4]]), at);
    }
    ResultRow row{f[cols[0]], f[cols[1]], f[cols[2]], f[cols[3]], *cls, 0, 0};
    try {
      row.truth_wall_s = std::stod(f[cols[5]]);
      row.falsity_wall_s = std::stod(f[cols[6]]);
    } catch (const std::exception&) {
      throw ParseError("invalid wall time", at);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cqbench
