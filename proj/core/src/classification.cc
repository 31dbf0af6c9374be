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

#include "cqbench/classification.h"

namespace cqbench {

std::string_view to_string(Classification classification) {
  switch (classification) {
    case Classification::kEntailed: return "Entailed";
    case Classification::kIncompatible: return "Incompatible";
    case Classification::kUnknown: return "Unknown";
    case Classification::kConflict: return "Conflict";
  }
  return "Unknown";
}

std::optional<Classification> parse_classification(std::string_view text) {
  for (auto c : {Classification::kEntailed, Classification::kIncompatible,
                 Classification::kUnknown, Classification::kConflict}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

}  // namespace cqbench
