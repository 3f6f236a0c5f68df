// Copyright 2026 The asmcheck Authors.
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

// Algorithms as families of states with a one-step transformation, a small
// rule language, and update sets.

#ifndef ASMCHECK_TRANSITION_HPP_
#define ASMCHECK_TRANSITION_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "asmcheck/kernel.hpp"

namespace asmcheck {

// ---------------------------------------------------------------------------
// Updates

struct Update {
  std::string symbol;
  std::vector<ElementId> args;
  ElementId value;

  std::string toString() const;  // (f,(1,2),3)
  auto operator<=>(const Update&) const = default;
};

/// A consistent set of updates: at most one value per location.
class UpdateSet {
 public:
  using const_iterator = std::set<Update>::const_iterator;

  UpdateSet() = default;
  UpdateSet(std::initializer_list<Update> updates);

  /// Throws ClashError if the location already holds a different value.
  void insert(Update u);
  bool contains(const Update& u) const { return updates_.contains(u); }
  std::size_t size() const { return updates_.size(); }
  bool empty() const { return updates_.empty(); }
  const_iterator begin() const { return updates_.begin(); }
  const_iterator end() const { return updates_.end(); }
  std::string toString() const;

  bool operator==(const UpdateSet&) const = default;

 private:
  std::set<Update> updates_;
};

Update liftUpdate(const Renaming& r, const Update& u);
/// Pointwise application of `r`; throws DomainError on unmapped elements.
UpdateSet liftUpdateSet(const Renaming& r, const UpdateSet& updates);

/// The nontrivial updates turning `before` into `after` (same carrier).
UpdateSet diffStates(const State& before, const State& after);
State applyUpdates(const State& x, const UpdateSet& updates);

// ---------------------------------------------------------------------------
// Rules

class Rule {
 public:
  struct Assignment {
    Symbol symbol;
    std::vector<Term> args;
    Term value;
  };
  struct Parallel {
    std::vector<Rule> rules;
  };
  struct Conditional {
    Term guard;
    std::shared_ptr<const Rule> then_rule;
    std::shared_ptr<const Rule> else_rule;
  };

  static Rule assign(const Vocabulary& vocab, std::string_view symbol, std::vector<Term> args,
                     Term value);
  static Rule parallel(std::vector<Rule> rules);
  static Rule conditional(Term guard, Rule then_rule, Rule else_rule);
  static Rule skip() { return parallel({}); }

  const auto& node() const { return node_; }
  /// Every term occurring in the rule, including the assigned locations.
  WitnessSet terms() const;

  bool operator==(const Rule& other) const;

 private:
  explicit Rule(std::variant<Assignment, Parallel, Conditional> node) : node_(std::move(node)) {}
  std::variant<Assignment, Parallel, Conditional> node_;
};

/// The update set the rule produces at `x`, restricted to nontrivial
/// updates. Throws ClashError or GuardError.
UpdateSet applyRule(const State& x, const Rule& rule);

// ---------------------------------------------------------------------------
// Algorithms

struct CanonicalState {
  std::string name;
  State state;
  bool initial = false;
};

/// A finite family of canonical states and a one-step transformation given
/// either by a rule program or by an explicit successor table. The full
/// state space is the closure of the family under renaming.
class Algorithm {
 public:
  static Algorithm withRules(VocabularyPtr vocab, std::vector<CanonicalState> states, Rule program);
  /// `successors[i]` is the index of the successor of state i, if defined.
  static Algorithm withTable(VocabularyPtr vocab, std::vector<CanonicalState> states,
                             std::vector<std::optional<std::size_t>> successors);

  const VocabularyPtr& vocabulary() const { return vocab_; }
  const std::vector<CanonicalState>& states() const { return states_; }
  const State& state(std::size_t i) const { return states_.at(i).state; }
  std::size_t size() const { return states_.size(); }
  bool isRuleBased() const { return program_.has_value(); }
  const Rule* program() const { return program_ ? &*program_ : nullptr; }
  std::optional<std::size_t> successorIndex(std::size_t i) const;
  std::optional<std::size_t> findState(std::string_view name) const;
  std::size_t maxCarrierSize() const;

 private:
  Algorithm() = default;
  VocabularyPtr vocab_;
  std::vector<CanonicalState> states_;
  std::optional<Rule> program_;
  std::vector<std::optional<std::size_t>> successors_;
};

/// A state of the closure together with where it came from.
struct Member {
  std::size_t canonical;
  Renaming renaming;
  State state;
};

Member canonicalMember(const Algorithm& a, std::size_t i);
Member renamedMember(const Algorithm& a, std::size_t i, Renaming r);

/// Every isomorphism from `from` onto `to` (as renamings of `from`'s carrier).
std::vector<Renaming> isomorphisms(const State& from, const State& to);
std::optional<Renaming> findIsomorphism(const State& from, const State& to);

/// First canonical state (in order) that `x` is a renamed copy of.
std::optional<Member> locate(const Algorithm& a, const State& x);

/// One step. Rule programs run directly on `x`; explicit algorithms locate
/// `x` in the family and transport the stored successor. Throws UnknownState.
State step(const Algorithm& a, const State& x);
State step(const Algorithm& a, const Member& x);

/// The update set: the diff between x and its successor.
UpdateSet updateSet(const Algorithm& a, const State& x);
UpdateSet updateSet(const Algorithm& a, const Member& x);

/// Isomorphic canonical states whose stored successors do not correspond,
/// including automorphisms of a single state.
struct Incoherence {
  std::size_t first;
  std::size_t second;
  Renaming isomorphism;
};
std::optional<Incoherence> findIncoherence(const Algorithm& a);

// ---------------------------------------------------------------------------
// Universe

/// The fixed pool of element ids hosting every carrier: ids [0, size).
struct Universe {
  std::size_t size = 0;

  std::size_t nonlogicalCount() const {
    return size > kLogicalElementCount ? size - kLogicalElementCount : 0;
  }
  bool contains(ElementId e) const { return e.value < size; }
};

/// Visits every renaming of `x`'s nonlogical carrier into the universe, in
/// lexicographic order of the image tuple. Returning false stops the walk.
void forEachRenaming(const State& x, const Universe& u,
                     const std::function<bool(const Renaming&)>& visit);
std::size_t countRenamings(std::size_t carrier, const Universe& u);

}  // namespace asmcheck

#endif  // ASMCHECK_TRANSITION_HPP_
