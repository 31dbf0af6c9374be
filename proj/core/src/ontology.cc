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

#include "cqbench/ontology.h"

#include <algorithm>
#include <array>
#include <deque>

#include <fmt/format.h>

namespace cqbench {

std::string_view to_string(TermKind kind) {
  switch (kind) {
    case TermKind::kObjectInstance: return "ObjectInstance";
    case TermKind::kClass: return "Class";
    case TermKind::kRelation: return "Relation";
    case TermKind::kAttribute: return "Attribute";
    case TermKind::kUnknown: return "Unknown";
  }
  return "Unknown";
}

char kind_code(TermKind kind) {
  switch (kind) {
    case TermKind::kObjectInstance: return 'o';
    case TermKind::kClass: return 'c';
    case TermKind::kRelation: return 'r';
    case TermKind::kAttribute: return 'a';
    case TermKind::kUnknown: return '?';
  }
  return '?';
}

namespace {

using TermId = OntologyIndex::TermId;

bool sorted_contains(const std::vector<TermId>& v, TermId id) {
  return std::binary_search(v.begin(), v.end(), id);
}

void sort_unique(std::vector<TermId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool is_ground_symbol(const KifExpr& e) {
  return e.is_atom() && !e.is_variable() && !e.is_string();
}

// Evidence slots for term kinds, in resolution priority order.
enum Evidence { kRelationEv, kAttributeEv, kClassEv, kObjectEv, kEvidenceCount };

constexpr std::array<TermKind, kEvidenceCount> kEvidenceKinds = {
    TermKind::kRelation, TermKind::kAttribute, TermKind::kClass,
    TermKind::kObjectInstance};

}  // namespace

class IndexBuilder {
 public:
  OntologyIndex build(std::span<const KifExpr> exprs) {
    for (const auto& e : exprs) collect(e);
    close_hierarchy();
    close_disjointness();
    resolve_kinds();
    find_vacuous_terms();
    return std::move(index_);
  }

 private:
  struct Edge {
    TermId child;
    TermId parent;
    SourceLocation location;
  };

  struct InstanceFact {
    TermId term;
    TermId cls;
    SourceLocation location;
  };

  TermId intern(const std::string& name) {
    auto [it, inserted] = index_.ids_.try_emplace(
        name, static_cast<TermId>(index_.names_.size()));
    if (inserted) {
      index_.names_.push_back(name);
      evidence_.emplace_back();
    }
    return it->second;
  }

  void note_evidence(TermId id, Evidence ev, std::string_view what,
                     const SourceLocation& at) {
    auto& slot = evidence_[id][ev];
    if (slot.empty()) slot = fmt::format("{} at {}", what, at.str());
  }

  void opaque(const KifExpr& e) { index_.opaque_.push_back(e); }

  void note(std::string message, const SourceLocation& at) {
    index_.diagnostics_.push_back({Severity::kNote, std::move(message), at});
  }

  void require_arity(const KifExpr& e, size_t min, size_t max) {
    size_t args = e.size() - 1;
    if (args < min || args > max) {
      std::string expected =
          min == max ? std::to_string(min) : fmt::format("at least {}", min);
      throw ParseError(fmt::format("'{}' expects {} arguments, got {}",
                                   e.head(), expected, args),
                       e.location());
    }
  }

  // True when every argument is a ground symbol; otherwise the expression is
  // kept opaque with a note.
  bool ground_arguments(const KifExpr& e) {
    for (size_t i = 1; i < e.size(); ++i) {
      if (!is_ground_symbol(e[i])) {
        note(fmt::format("'{}' with a non-symbol argument is not indexed",
                         e.head()),
             e.location());
        opaque(e);
        return false;
      }
    }
    return true;
  }

  void collect(const KifExpr& e) {
    std::string_view head = e.head();
    if (head == "subclass" || head == "subAttribute" || head == "subrelation") {
      require_arity(e, 2, 2);
      if (!ground_arguments(e)) return;
      TermId child = intern(e[1].text());
      TermId parent = intern(e[2].text());
      Evidence ev = head == "subclass"       ? kClassEv
                    : head == "subAttribute" ? kAttributeEv
                                             : kRelationEv;
      note_evidence(child, ev, head, e.location());
      note_evidence(parent, ev, head, e.location());
      if (child == parent) {
        note(fmt::format("ignoring reflexive ({} {} {})", head, e[1].text(),
                         e[2].text()),
             e.location());
        return;
      }
      edges_.push_back({child, parent, e.location()});
    } else if (head == "instance") {
      require_arity(e, 2, 2);
      if (!ground_arguments(e)) return;
      TermId term = intern(e[1].text());
      TermId cls = intern(e[2].text());
      note_evidence(cls, kClassEv, "instance target", e.location());
      instances_.push_back({term, cls, e.location()});
    } else if (head == "disjoint") {
      require_arity(e, 2, 2);
      if (!ground_arguments(e)) return;
      add_disjoint_group(e, 1, kClassEv);
    } else if (head == "partition" || head == "disjointDecomposition") {
      require_arity(e, 2, SIZE_MAX);
      if (!ground_arguments(e)) return;
      note_evidence(intern(e[1].text()), kClassEv, head, e.location());
      add_disjoint_group(e, 2, kClassEv);
    } else if (head == "contraryAttribute") {
      require_arity(e, 2, SIZE_MAX);
      if (!ground_arguments(e)) return;
      add_disjoint_group(e, 1, kAttributeEv);
    } else {
      opaque(e);
    }
  }

  void add_disjoint_group(const KifExpr& e, size_t first, Evidence ev) {
    std::vector<TermId> members;
    for (size_t i = first; i < e.size(); ++i) {
      TermId id = intern(e[i].text());
      note_evidence(id, ev, e.head(), e.location());
      members.push_back(id);
    }
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        disjoint_pairs_.emplace_back(members[i], members[j]);
      }
    }
  }

  void close_hierarchy() {
    const size_t n = index_.names_.size();
    index_.parents_.assign(n, {});
    for (const auto& edge : edges_) {
      index_.parents_[edge.child].push_back(edge.parent);
    }
    for (auto& p : index_.parents_) sort_unique(p);

    // Iterative DFS towards the roots. A node's ancestor set is complete when
    // it leaves the stack, since all its parents finished before it.
    enum class Mark : char { kNew, kActive, kDone };
    std::vector<Mark> mark(n, Mark::kNew);
    index_.ancestors_.assign(n, {});
    struct Frame {
      TermId node;
      size_t next;
    };
    std::vector<Frame> stack;
    for (TermId root = 0; root < n; ++root) {
      if (mark[root] != Mark::kNew) continue;
      stack.push_back({root, 0});
      mark[root] = Mark::kActive;
      while (!stack.empty()) {
        Frame& top = stack.back();
        const auto& parents = index_.parents_[top.node];
        if (top.next < parents.size()) {
          TermId p = parents[top.next++];
          if (mark[p] == Mark::kActive) throw_cycle(stack, p);
          if (mark[p] == Mark::kNew) {
            mark[p] = Mark::kActive;
            stack.push_back({p, 0});
          }
          continue;
        }
        auto& anc = index_.ancestors_[top.node];
        anc.push_back(top.node);
        for (TermId p : parents) {
          const auto& up = index_.ancestors_[p];
          anc.insert(anc.end(), up.begin(), up.end());
        }
        sort_unique(anc);
        mark[top.node] = Mark::kDone;
        stack.pop_back();
      }
    }
  }

  template <typename Stack>
  [[noreturn]] void throw_cycle(const Stack& stack, TermId back_to) {
    std::string path;
    bool in_cycle = false;
    for (const auto& frame : stack) {
      if (frame.node == back_to) in_cycle = true;
      if (in_cycle) {
        path += index_.names_[frame.node];
        path += " -> ";
      }
    }
    path += index_.names_[back_to];
    SourceLocation at;
    for (const auto& edge : edges_) {
      if (edge.child == stack.back().node && edge.parent == back_to) {
        at = edge.location;
        break;
      }
    }
    std::string where = at.source.empty() ? "" : at.str() + ": ";
    throw Error(fmt::format("{}taxonomy cycle: {}", where, path));
  }

  void close_disjointness() {
    index_.disjoint_.assign(index_.names_.size(), {});
    for (auto [a, b] : disjoint_pairs_) {
      index_.disjoint_[a].push_back(b);
      index_.disjoint_[b].push_back(a);
    }
    for (auto& d : index_.disjoint_) sort_unique(d);
  }

  void resolve_kinds() {
    const size_t n = index_.names_.size();
    index_.instance_of_.assign(n, {});
    for (const auto& fact : instances_) {
      auto& classes = index_.instance_of_[fact.term];
      if (std::find(classes.begin(), classes.end(), fact.cls) ==
          classes.end()) {
        classes.push_back(fact.cls);
      }
      std::string_view cls = index_.names_[fact.cls];
      Evidence ev = kObjectEv;
      if (index_.is_subclass_of(cls, "Attribute")) {
        ev = kAttributeEv;
      } else if (index_.is_subclass_of(cls, "Relation")) {
        ev = kRelationEv;
      } else if (index_.is_subclass_of(cls, "SetOrClass") || cls == "Class") {
        ev = kClassEv;
      }
      note_evidence(fact.term, ev, fmt::format("instance of {}", cls),
                    fact.location);
    }

    index_.kinds_.assign(n, TermKind::kUnknown);
    for (TermId id = 0; id < n; ++id) {
      const auto& ev = evidence_[id];
      std::vector<int> present;
      for (int k = 0; k < kEvidenceCount; ++k) {
        if (!ev[k].empty()) present.push_back(k);
      }
      if (present.empty()) continue;
      index_.kinds_[id] = kEvidenceKinds[present.front()];
      if (present.size() > 1) {
        std::string sources;
        for (int k : present) {
          if (!sources.empty()) sources += "; ";
          sources += fmt::format("{} ({})", to_string(kEvidenceKinds[k]), ev[k]);
        }
        index_.diagnostics_.push_back(
            {Severity::kWarning,
             fmt::format("conflicting kinds for '{}': {}; using {}",
                         index_.names_[id], sources,
                         to_string(index_.kinds_[id])),
             {}});
      }
    }
  }

  void find_vacuous_terms() {
    const size_t n = index_.names_.size();
    index_.vacuous_.assign(n, false);
    for (TermId id = 0; id < n; ++id) {
      const auto& anc = index_.ancestors_[id];
      for (TermId x : anc) {
        for (TermId y : index_.disjoint_[x]) {
          if (!sorted_contains(anc, y)) continue;
          index_.vacuous_[id] = true;
          index_.diagnostics_.push_back(
              {Severity::kWarning,
               fmt::format("'{}' is below disjoint terms {} and {}; its "
                           "extension is empty",
                           index_.names_[id], index_.names_[x],
                           index_.names_[y]),
               {}});
          break;
        }
        if (index_.vacuous_[id]) break;
      }
    }
  }

  OntologyIndex index_;
  std::vector<std::array<std::string, kEvidenceCount>> evidence_;
  std::vector<Edge> edges_;
  std::vector<InstanceFact> instances_;
  std::vector<std::pair<TermId, TermId>> disjoint_pairs_;
};

OntologyIndex build_index(std::span<const KifExpr> exprs) {
  return IndexBuilder().build(exprs);
}

std::optional<TermId> OntologyIndex::lookup(std::string_view term) const {
  auto it = ids_.find(std::string(term));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool OntologyIndex::contains(std::string_view term) const {
  return lookup(term).has_value();
}

bool OntologyIndex::is_subclass_of(std::string_view a,
                                   std::string_view b) const {
  if (a == b) return true;
  auto ia = lookup(a);
  auto ib = lookup(b);
  if (!ia || !ib || ancestors_.empty()) return false;
  return sorted_contains(ancestors_[*ia], *ib);
}

bool OntologyIndex::are_disjoint(std::string_view a, std::string_view b) const {
  auto ia = lookup(a);
  auto ib = lookup(b);
  if (!ia || !ib) return false;
  const auto& anc_b = ancestors_[*ib];
  for (TermId x : ancestors_[*ia]) {
    for (TermId y : disjoint_[x]) {
      if (sorted_contains(anc_b, y)) return true;
    }
  }
  return false;
}

std::vector<TermId> OntologyIndex::ancestors_by_distance(TermId id) const {
  std::vector<TermId> order{id};
  std::vector<bool> seen(names_.size(), false);
  seen[id] = true;
  for (size_t i = 0; i < order.size(); ++i) {
    for (TermId p : parents_[order[i]]) {
      if (!seen[p]) {
        seen[p] = true;
        order.push_back(p);
      }
    }
  }
  return order;
}

std::optional<OntologyIndex::TermPair> OntologyIndex::disjointness_witness(
    std::string_view a, std::string_view b) const {
  auto ia = lookup(a);
  auto ib = lookup(b);
  if (!ia || !ib) return std::nullopt;
  const auto up_b = ancestors_by_distance(*ib);
  for (TermId x : ancestors_by_distance(*ia)) {
    for (TermId y : up_b) {
      if (sorted_contains(disjoint_[x], y)) {
        return TermPair{names_[x], names_[y]};
      }
    }
  }
  return std::nullopt;
}

bool OntologyIndex::is_vacuous(std::string_view term) const {
  auto id = lookup(term);
  return id && vacuous_[*id];
}

bool OntologyIndex::is_instance_of(std::string_view term,
                                   std::string_view cls) const {
  auto id = lookup(term);
  if (!id) return false;
  for (TermId c : instance_of_[*id]) {
    if (is_subclass_of(names_[c], cls)) return true;
  }
  return false;
}

std::vector<std::string> OntologyIndex::instance_classes(
    std::string_view term) const {
  std::vector<std::string> out;
  if (auto id = lookup(term)) {
    for (TermId c : instance_of_[*id]) out.push_back(names_[c]);
  }
  return out;
}

TermKind OntologyIndex::term_kind(std::string_view term) const {
  auto id = lookup(term);
  return id ? kinds_[*id] : TermKind::kUnknown;
}

std::vector<std::string> OntologyIndex::parents(std::string_view term) const {
  std::vector<std::string> out;
  if (auto id = lookup(term)) {
    for (TermId p : parents_[*id]) out.push_back(names_[p]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> OntologyIndex::declared_disjoint(
    std::string_view term) const {
  std::vector<std::string> out;
  if (auto id = lookup(term)) {
    for (TermId p : disjoint_[*id]) out.push_back(names_[p]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cqbench
