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

#include "cqbench/oracle.h"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "cqbench/csv.h"

namespace cqbench {

Formula BridgeAxiom::as_formula() const {
  return build_conjecture({ConjectureShape::kParticipation,
                           false,
                           {StatementShape::kInstanceOf, participant_class},
                           {StatementShape::kInstanceOf, process_class},
                           role});
}

std::vector<BridgeAxiom> parse_bridge_axioms(std::string_view csv,
                                             std::string_view source) {
  std::vector<BridgeAxiom> out;
  auto rows = parse_csv(csv, source);
  size_t process = 0, role = 1, participant = 2, first = 0;
  if (!rows.empty()) {
    const auto& head = rows.front().fields;
    if (std::find(head.begin(), head.end(), "process_class") != head.end()) {
      CsvHeader header(rows.front());
      process = header.require("process_class", source);
      role = header.require("role", source);
      participant = header.require("participant_class", source);
      first = 1;
    }
  }
  size_t width = std::max({process, role, participant}) + 1;
  for (size_t r = first; r < rows.size(); ++r) {
    const auto& f = rows[r].fields;
    SourceLocation at{std::string(source), rows[r].line, 0};
    if (f.size() < width) {
      throw ParseError(
          fmt::format("expected {} fields, got {}", width, f.size()), at);
    }
    auto parsed_role = parse_role(f[role]);
    if (!parsed_role) {
      throw ParseError(fmt::format("unknown role '{}'", f[role]), at);
    }
    BridgeAxiom axiom{std::string(trim(f[process])), *parsed_role,
                      std::string(trim(f[participant]))};
    if (axiom.process_class.empty() || axiom.participant_class.empty()) {
      throw ParseError("empty class name", at);
    }
    out.push_back(std::move(axiom));
  }
  return out;
}

TaxonomyOracle::TaxonomyOracle(const OntologyIndex& index,
                               std::vector<BridgeAxiom> bridges)
    : index_(&index), bridges_(std::move(bridges)) {
  for (const auto& b : bridges_) {
    for (const auto& term : {b.process_class, b.participant_class}) {
      if (index.term_kind(term) != TermKind::kClass) {
        throw Error(fmt::format("bridge axiom ({}, {}, {}): '{}' is not a "
                                "known class",
                                b.process_class, to_string(b.role),
                                b.participant_class, term));
      }
    }
  }
}

bool TaxonomyOracle::subsumes(const UnaryStatement& narrow,
                              const UnaryStatement& wide) const {
  if (narrow == wide) return true;
  const auto& idx = *index_;
  switch (narrow.shape) {
    case StatementShape::kInstanceOf:
    case StatementShape::kHasAttribute:
      return wide.shape == narrow.shape &&
             idx.is_subclass_of(narrow.term, wide.term);
    case StatementShape::kEqualTo:
      return wide.shape == StatementShape::kInstanceOf &&
             idx.is_instance_of(narrow.term, wide.term);
  }
  return false;
}

bool TaxonomyOracle::disjoint(const UnaryStatement& a,
                              const UnaryStatement& b) const {
  const auto& idx = *index_;
  if (a.shape == StatementShape::kEqualTo &&
      b.shape == StatementShape::kEqualTo) {
    return false;
  }
  if (a.shape == StatementShape::kEqualTo || b.shape == StatementShape::kEqualTo) {
    const auto& object = a.shape == StatementShape::kEqualTo ? a : b;
    const auto& other = a.shape == StatementShape::kEqualTo ? b : a;
    if (other.shape != StatementShape::kInstanceOf) return false;
    for (const auto& cls : idx.instance_classes(object.term)) {
      if (idx.are_disjoint(cls, other.term)) return true;
    }
    return false;
  }
  return a.shape == b.shape && idx.are_disjoint(a.term, b.term);
}

bool TaxonomyOracle::vacuous(const UnaryStatement& s) const {
  return s.shape != StatementShape::kEqualTo && index_->is_vacuous(s.term);
}

bool TaxonomyOracle::bridged(const UnaryStatement& participant,
                             const UnaryStatement& process,
                             SemanticRole role) const {
  for (const auto& b : bridges_) {
    if (b.role != role) continue;
    if (subsumes(participant, {StatementShape::kInstanceOf, b.participant_class}) &&
        subsumes({StatementShape::kInstanceOf, b.process_class}, process)) {
      return true;
    }
  }
  return false;
}

bool TaxonomyOracle::proves(const ConjectureView& v) const {
  const auto& a = v.antecedent;
  const auto& b = v.consequent;
  if (!v.negated) {
    switch (v.shape) {
      case ConjectureShape::kInclusion:
        return vacuous(a) || subsumes(a, b);
      case ConjectureShape::kExclusion:
        return vacuous(a) || vacuous(b) || disjoint(a, b);
      case ConjectureShape::kParticipation:
        return vacuous(a) || bridged(a, b, *v.role);
      case ConjectureShape::kNonParticipation:
        return vacuous(a) || vacuous(b);
    }
    return false;
  }
  // A negated universal needs a witness. Only a named object provides one.
  if (a.shape != StatementShape::kEqualTo) return false;
  switch (v.shape) {
    case ConjectureShape::kInclusion:
      return vacuous(b) || disjoint(a, b);
    case ConjectureShape::kExclusion:
      return subsumes(a, b);
    case ConjectureShape::kParticipation:
      return false;
    case ConjectureShape::kNonParticipation:
      return bridged(a, b, *v.role);
  }
  return false;
}

bool TaxonomyOracle::proves(const Formula& conjecture) const {
  return proves(analyze_conjecture(conjecture));
}

Classification TaxonomyOracle::classify(const Formula& truth,
                                        const Formula& falsity) const {
  return cqbench::classify(proves(truth), proves(falsity));
}

std::optional<std::string> TaxonomyOracle::explain(
    const UnaryStatement& a, const UnaryStatement& b) const {
  auto relation = [](const UnaryStatement& n, const UnaryStatement& w) {
    std::string_view name = n.shape == StatementShape::kEqualTo ? "instance"
                            : n.shape == StatementShape::kHasAttribute
                                ? "subAttribute"
                                : "subclass";
    return fmt::format("{}({}, {})", name, n.term, w.term);
  };
  for (const auto* s : {&a, &b}) {
    if (vacuous(*s)) return fmt::format("vacuous({})", s->term);
  }
  if (a == b) return fmt::format("equal({}, {})", a.term, b.term);
  if (subsumes(a, b)) return relation(a, b);
  if (subsumes(b, a)) return relation(b, a);
  if (disjoint(a, b)) {
    const auto& idx = *index_;
    std::vector<std::string> left{a.term}, right{b.term};
    if (a.shape == StatementShape::kEqualTo) left = idx.instance_classes(a.term);
    if (b.shape == StatementShape::kEqualTo) right = idx.instance_classes(b.term);
    for (const auto& l : left) {
      for (const auto& r : right) {
        if (auto w = idx.disjointness_witness(l, r)) {
          return fmt::format("disjoint({}, {})", w->first, w->second);
        }
      }
    }
  }
  return std::nullopt;
}

Classification oracle_classify(const CompetencyQuestion& cq,
                               const OntologyIndex& index,
                               std::span<const BridgeAxiom> bridges) {
  TaxonomyOracle oracle(index, {bridges.begin(), bridges.end()});
  return oracle.classify(cq.truth, cq.falsity);
}

bool FiniteModel::member(std::string_view term, int element) const {
  auto it = extensions.find(term);
  if (it == extensions.end()) {
    throw Error(fmt::format("model has no extension for '{}'", term));
  }
  return (it->second >> element) & 1u;
}

bool FiniteModel::related(SemanticRole role, int x, int y) const {
  auto it = roles.find(role);
  if (it == roles.end()) {
    throw Error(fmt::format("model does not interpret '{}'", to_string(role)));
  }
  return (it->second >> (x * domain_size + y)) & 1u;
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const FiniteModel& model) : model_(model) {}

  bool eval(const Formula& f) {
    using Kind = Formula::Kind;
    switch (f.kind()) {
      case Kind::kAtom: return atom(f);
      case Kind::kNot: return !eval(f.child());
      case Kind::kAnd: return eval(f.child(0)) && eval(f.child(1));
      case Kind::kImplies: return !eval(f.child(0)) || eval(f.child(1));
      case Kind::kForall:
      case Kind::kExists:
        return quantify(f, 0);
    }
    return false;
  }

 private:
  bool quantify(const Formula& f, size_t i) {
    if (i == f.variables().size()) return eval(f.child());
    const bool universal = f.kind() == Formula::Kind::kForall;
    const std::string& var = f.variables()[i];
    auto saved = env_.find(var);
    std::optional<int> previous;
    if (saved != env_.end()) previous = saved->second;
    bool result = universal;
    for (int e = 0; e < model_.domain_size; ++e) {
      env_[var] = e;
      bool value = quantify(f, i + 1);
      if (value != universal) {
        result = value;
        break;
      }
    }
    if (previous) {
      env_[var] = *previous;
    } else {
      env_.erase(var);
    }
    return result;
  }

  int value(const Term& t) const {
    if (t.is_variable) {
      auto it = env_.find(t.name);
      if (it == env_.end()) throw Error(fmt::format("free variable {}", t.name));
      return it->second;
    }
    auto it = model_.constants.find(t.name);
    if (it == model_.constants.end()) {
      throw Error(fmt::format("model does not interpret constant '{}'", t.name));
    }
    return it->second;
  }

  bool atom(const Formula& f) {
    const auto& args = f.arguments();
    if (auto role = predicate_role(f.predicate())) {
      return model_.related(*role, value(args[0]), value(args[1]));
    }
    if (f.predicate() == Predicate::kEqual) {
      return value(args[0]) == value(args[1]);
    }
    if (args[1].is_variable) {
      throw Error("class argument must be a constant");
    }
    return model_.member(args[1].name, value(args[0]));
  }

  const FiniteModel& model_;
  std::map<std::string, int> env_;
};

}  // namespace

bool brute_force_check(const Formula& formula, const FiniteModel& model) {
  if (!is_closed(formula)) {
    throw Error(fmt::format("formula is not closed: {}", to_kif(formula)));
  }
  return Evaluator(model).eval(formula);
}

void for_each_model(const OntologyIndex& index,
                    std::span<const std::string> terms, int domain_size,
                    std::optional<SemanticRole> role,
                    std::span<const BridgeAxiom> bridges,
                    const std::function<bool(const FiniteModel&)>& visit) {
  if (terms.size() > kMaxEnumeratedTerms) {
    throw Error(fmt::format("model enumeration supports at most {} terms, got {}",
                            kMaxEnumeratedTerms, terms.size()));
  }
  if (domain_size < 1 || domain_size > kMaxEnumeratedDomain) {
    throw Error(fmt::format("model enumeration supports domain sizes 1..{}, "
                            "got {}",
                            kMaxEnumeratedDomain, domain_size));
  }

  std::vector<std::string> unary, objects;
  for (const auto& t : terms) {
    if (std::find(unary.begin(), unary.end(), t) != unary.end() ||
        std::find(objects.begin(), objects.end(), t) != objects.end()) {
      continue;
    }
    (index.term_kind(t) == TermKind::kObjectInstance ? objects : unary)
        .push_back(t);
  }
  const size_t u = unary.size();

  // Element types: the subsets of the unary terms one element may belong to.
  std::vector<std::uint32_t> types;
  for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
    bool ok = true;
    for (size_t i = 0; i < u && ok; ++i) {
      if (!((mask >> i) & 1u)) continue;
      for (size_t j = 0; j < u && ok; ++j) {
        bool has_j = (mask >> j) & 1u;
        if (!has_j && index.is_subclass_of(unary[i], unary[j])) ok = false;
        if (has_j && index.are_disjoint(unary[i], unary[j])) ok = false;
      }
    }
    if (ok) types.push_back(mask);
  }

  // Per object: unary terms it must and must not belong to.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> object_masks;
  for (const auto& o : objects) {
    std::uint32_t must = 0, must_not = 0;
    for (size_t i = 0; i < u; ++i) {
      if (index.is_instance_of(o, unary[i])) must |= 1u << i;
      for (const auto& cls : index.instance_classes(o)) {
        if (index.are_disjoint(cls, unary[i])) must_not |= 1u << i;
      }
    }
    object_masks.emplace_back(must, must_not);
  }

  struct Bridge {
    size_t process;
    size_t participant;
  };
  std::vector<Bridge> active;
  if (role) {
    for (const auto& b : bridges) {
      if (b.role != *role) continue;
      auto p = std::find(unary.begin(), unary.end(), b.process_class);
      auto c = std::find(unary.begin(), unary.end(), b.participant_class);
      if (p != unary.end() && c != unary.end()) {
        active.push_back({static_cast<size_t>(p - unary.begin()),
                          static_cast<size_t>(c - unary.begin())});
      }
    }
  }

  const int d = domain_size;
  const std::uint64_t relation_count =
      role ? (std::uint64_t{1} << (d * d)) : 1;
  std::vector<size_t> type_of(d, 0);
  std::vector<int> object_at(objects.size(), 0);
  FiniteModel model;
  model.domain_size = d;

  auto extension = [&](size_t term) {
    std::uint32_t ext = 0;
    for (int e = 0; e < d; ++e) {
      if ((types[type_of[e]] >> term) & 1u) ext |= 1u << e;
    }
    return ext;
  };

  auto objects_fit = [&] {
    for (size_t k = 0; k < objects.size(); ++k) {
      std::uint32_t type = types[type_of[object_at[k]]];
      auto [must, must_not] = object_masks[k];
      if ((type & must) != must || (type & must_not) != 0) return false;
    }
    return true;
  };

  auto bridges_hold = [&](std::uint64_t rel) {
    for (const auto& b : active) {
      std::uint32_t procs = extension(b.process);
      std::uint32_t parts = extension(b.participant);
      for (int y = 0; y < d; ++y) {
        if (!((parts >> y) & 1u)) continue;
        bool found = false;
        for (int x = 0; x < d && !found; ++x) {
          found = ((procs >> x) & 1u) && ((rel >> (x * d + y)) & 1u);
        }
        if (!found) return false;
      }
    }
    return true;
  };

  // Odometer over element types, then object placements, then relations.
  while (true) {
    for (size_t i = 0; i < u; ++i) model.extensions[unary[i]] = extension(i);
    std::fill(object_at.begin(), object_at.end(), 0);
    while (true) {
      if (objects_fit()) {
        for (size_t k = 0; k < objects.size(); ++k) {
          model.constants[objects[k]] = object_at[k];
        }
        for (std::uint64_t rel = 0; rel < relation_count; ++rel) {
          if (role) {
            if (!bridges_hold(rel)) continue;
            model.roles[*role] = rel;
          }
          if (!visit(model)) return;
        }
      }
      size_t k = 0;
      while (k < objects.size() && ++object_at[k] == d) object_at[k++] = 0;
      if (k == objects.size()) break;
    }
    int e = 0;
    while (e < d && ++type_of[e] == types.size()) type_of[e++] = 0;
    if (e == d) return;
  }
}

std::vector<FiniteModel> enumerate_models(const OntologyIndex& index,
                                          std::span<const std::string> terms,
                                          int domain_size,
                                          std::optional<SemanticRole> role,
                                          std::span<const BridgeAxiom> bridges) {
  std::vector<FiniteModel> out;
  for_each_model(index, terms, domain_size, role, bridges,
                 [&](const FiniteModel& m) {
                   out.push_back(m);
                   return true;
                 });
  return out;
}

}  // namespace cqbench
