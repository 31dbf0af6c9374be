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

#ifndef CQBENCH_BENCHMARKS_SYNTHETIC_H_
#define CQBENCH_BENCHMARKS_SYNTHETIC_H_

#include <cstdio>
#include <string>

namespace cqbench::bench {

// Binary tree of n classes: T<i> is a subclass of T<i/2>, and the two
// subtrees under the root are disjoint.
inline std::string tree_kif(int n) {
  std::string out;
  for (int i = 2; i <= n; ++i) {
    out += "(subclass T" + std::to_string(i) + " T" + std::to_string(i / 2) + ")\n";
  }
  if (n >= 3) out += "(disjoint T2 T3)\n";
  return out;
}

inline std::string offset(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08d", 10000000 + i);
  return buf;
}

// Noun data lines mirroring the tree; `mapped` appends the annotation.
inline std::string tree_wordnet(int n, bool mapped) {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    std::string word = "w" + std::to_string(i);
    std::string line = offset(i) + " 03 n 01 " + word + " 0 ";
    if (i > 1) {
      line += "001 @ " + offset(i / 2) + " n 0000";
    } else {
      line += "000";
    }
    line += " | gloss of " + word;
    if (mapped) line += " &%T" + std::to_string(i) + (i % 3 == 0 ? "+" : "=");
    out += line + "\n";
  }
  return out;
}

}  // namespace cqbench::bench

#endif  // CQBENCH_BENCHMARKS_SYNTHETIC_H_
