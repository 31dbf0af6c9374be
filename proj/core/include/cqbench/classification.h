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

#ifndef CQBENCH_CLASSIFICATION_H_
#define CQBENCH_CLASSIFICATION_H_

#include <optional>
#include <string_view>

namespace cqbench {

// Outcome of the dual truth/falsity tests of one question.
enum class Classification { kEntailed, kIncompatible, kUnknown, kConflict };

std::string_view to_string(Classification classification);
std::optional<Classification> parse_classification(std::string_view text);

// Entailed iff only the truth test is proved, Incompatible iff only the
// falsity test is, Conflict iff both are, Unknown otherwise.
constexpr Classification classify(bool truth_proved, bool falsity_proved) {
  if (truth_proved && falsity_proved) return Classification::kConflict;
  if (truth_proved) return Classification::kEntailed;
  if (falsity_proved) return Classification::kIncompatible;
  return Classification::kUnknown;
}

constexpr bool is_solved(Classification c) {
  return c != Classification::kUnknown;
}

}  // namespace cqbench

#endif  // CQBENCH_CLASSIFICATION_H_
