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

#include "asmcheck/transition.hpp"

#include <algorithm>
#include <map>

namespace asmcheck {

// ---------------------------------------------------------------------------
// Updates

std::string Update::toString() const {
  return "(" + symbol + "," + asmcheck::toString(args) + "," + asmcheck::toString(value) + ")";
}

UpdateSet::UpdateSet(std::initializer_list<Update> updates) {
  for (const auto& u : updates) insert(u);
}

void UpdateSet::insert(Update u) {
  // Updates sort by location first, so a clash sits next to the slot of u.
  auto it = updates_.lower_bound(Update{u.symbol, u.args, ElementId{0}});
  if (it != updates_.end() && it->symbol == u.symbol && it->args == u.args) {
    if (it->value != u.value) {
      throw ClashError("clash at " + u.symbol + asmcheck::toString(u.args) + ": " +
                       asmcheck::toString(it->value) + " vs " + asmcheck::toString(u.value));
    }
    return;
  }
  updates_.insert(it, std::move(u));
}

std::string UpdateSet::toString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& u : updates_) {
    if (!first) out += ", ";
    first = false;
    out += u.toString();
  }
  return out + "}";
}

Update liftUpdate(const Renaming& r, const Update& u) {
  Update out{u.symbol, u.args, r(u.value)};
  for (auto& a : out.args) a = r(a);
  return out;
}

UpdateSet liftUpdateSet(const Renaming& r, const UpdateSet& updates) {
  UpdateSet out;
  for (const auto& u : updates) out.insert(liftUpdate(r, u));
  return out;
}

UpdateSet diffStates(const State& before, const State& after) {
  requireSameVocabulary(before, after);
  if (!std::ranges::equal(before.baseSet(), after.baseSet())) {
    throw InvalidState("successor changes the base set");
  }
  const auto& vocab = *before.vocabulary();
  UpdateSet out;
  for (std::size_t s = kLogicalSymbolCount; s < vocab.size(); ++s) {
    const auto& sym = vocab.at(s);
    const auto& x = before.table(s);
    const auto& y = after.table(s);
    std::vector<Interpretation::Key> keys;
    if (x.defaultValue() == y.defaultValue()) {
      for (const auto& [k, v] : x.rawEntries()) keys.push_back(k);
      for (const auto& [k, v] : y.rawEntries()) keys.push_back(k);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    } else {
      const auto base = before.baseSet();
      std::vector<ElementId> tuple(sym.arity);
      std::size_t total = 1;
      for (int i = 0; i < sym.arity; ++i) total *= base.size();
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int i = sym.arity - 1; i >= 0; --i) {
          tuple[i] = base[c % base.size()];
          c /= base.size();
        }
        keys.push_back(Interpretation::pack(tuple));
      }
    }
    for (auto key : keys) {
      auto args = Interpretation::unpack(key, sym.arity);
      const ElementId old_value = x(args);
      const ElementId new_value = y(args);
      if (old_value != new_value) out.insert(Update{sym.name, std::move(args), new_value});
    }
  }
  return out;
}

State applyUpdates(const State& x, const UpdateSet& updates) {
  State out = x;
  for (const auto& u : updates) out.set(u.symbol, u.args, u.value);
  return out;
}

// ---------------------------------------------------------------------------
// Rules

Rule Rule::assign(const Vocabulary& vocab, std::string_view symbol, std::vector<Term> args,
                  Term value) {
  const auto index = vocab.indexOf(symbol);
  const Symbol& sym = vocab.at(index);
  if (sym.isLogical()) {
    throw InvalidRule("assignment to logical symbol '" + sym.name + "'");
  }
  if (static_cast<int>(args.size()) != sym.arity) {
    throw InvalidRule("assignment to '" + sym.name + "' with " + std::to_string(args.size()) +
                      " arguments, expected " + std::to_string(sym.arity));
  }
  return Rule(Assignment{sym, std::move(args), std::move(value)});
}

Rule Rule::parallel(std::vector<Rule> rules) { return Rule(Parallel{std::move(rules)}); }

Rule Rule::conditional(Term guard, Rule then_rule, Rule else_rule) {
  return Rule(Conditional{std::move(guard), std::make_shared<const Rule>(std::move(then_rule)),
                          std::make_shared<const Rule>(std::move(else_rule))});
}

WitnessSet Rule::terms() const {
  WitnessSet out;
  auto collect = [&](auto&& self, const Rule& r) -> void {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Assignment>) {
            for (const auto& a : node.args) out.insert(a);
            out.insert(node.value);
            out.insert(Term(node.symbol, node.args));
          } else if constexpr (std::is_same_v<T, Parallel>) {
            for (const auto& child : node.rules) self(self, child);
          } else {
            out.insert(node.guard);
            self(self, *node.then_rule);
            self(self, *node.else_rule);
          }
        },
        r.node_);
  };
  collect(collect, *this);
  return out;
}

bool Rule::operator==(const Rule& other) const {
  if (node_.index() != other.node_.index()) return false;
  if (const auto* a = std::get_if<Assignment>(&node_)) {
    const auto& b = std::get<Assignment>(other.node_);
    return a->symbol == b.symbol && a->args == b.args && a->value == b.value;
  }
  if (const auto* a = std::get_if<Parallel>(&node_)) {
    return a->rules == std::get<Parallel>(other.node_).rules;
  }
  const auto& a = std::get<Conditional>(node_);
  const auto& b = std::get<Conditional>(other.node_);
  return a.guard == b.guard && *a.then_rule == *b.then_rule && *a.else_rule == *b.else_rule;
}

namespace {

// Collects every update the rule fires, trivial ones included, so that a
// clash is reported even when one side would not change the state.
void fire(const State& x, const Rule& rule, UpdateSet& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Rule::Assignment>) {
          Update u{node.symbol.name, {}, evaluateTerm(x, node.value)};
          for (const auto& a : node.args) u.args.push_back(evaluateTerm(x, a));
          out.insert(std::move(u));
        } else if constexpr (std::is_same_v<T, Rule::Parallel>) {
          for (const auto& child : node.rules) fire(x, child, out);
        } else {
          const ElementId g = evaluateTerm(x, node.guard);
          if (g == kTrue) {
            fire(x, *node.then_rule, out);
          } else if (g == kFalse) {
            fire(x, *node.else_rule, out);
          } else {
            throw GuardError("guard " + node.guard.toString() + " evaluates to " +
                             asmcheck::toString(g));
          }
        }
      },
      rule.node());
}

}  // namespace

UpdateSet applyRule(const State& x, const Rule& rule) {
  UpdateSet fired;
  fire(x, rule, fired);
  UpdateSet out;
  for (const auto& u : fired) {
    if (x.apply(u.symbol, u.args) != u.value) out.insert(u);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algorithms

namespace {

void validateStates(const VocabularyPtr& vocab, const std::vector<CanonicalState>& states) {
  for (const auto& s : states) {
    if (s.state.vocabulary() != vocab && !(*s.state.vocabulary() == *vocab)) {
      throw VocabularyMismatch("state '" + s.name + "' is over a different vocabulary");
    }
  }
}

}  // namespace

Algorithm Algorithm::withRules(VocabularyPtr vocab, std::vector<CanonicalState> states,
                               Rule program) {
  validateStates(vocab, states);
  Algorithm a;
  a.vocab_ = std::move(vocab);
  a.states_ = std::move(states);
  a.program_ = std::move(program);
  return a;
}

Algorithm Algorithm::withTable(VocabularyPtr vocab, std::vector<CanonicalState> states,
                               std::vector<std::optional<std::size_t>> successors) {
  validateStates(vocab, states);
  if (successors.size() != states.size()) {
    throw InvalidState("successor table size differs from the number of states");
  }
  for (std::size_t i = 0; i < successors.size(); ++i) {
    if (!successors[i]) continue;
    if (*successors[i] >= states.size()) throw UnknownState("successor index out of range");
    if (!std::ranges::equal(states[i].state.baseSet(), states[*successors[i]].state.baseSet())) {
      throw InvalidState("base-set violation: successor of '" + states[i].name + "' ('" +
                         states[*successors[i]].name + "') has a different base set");
    }
  }
  Algorithm a;
  a.vocab_ = std::move(vocab);
  a.states_ = std::move(states);
  a.successors_ = std::move(successors);
  return a;
}

std::optional<std::size_t> Algorithm::successorIndex(std::size_t i) const {
  if (isRuleBased()) return std::nullopt;
  return successors_.at(i);
}

std::optional<std::size_t> Algorithm::findState(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Algorithm::maxCarrierSize() const {
  std::size_t m = 0;
  for (const auto& s : states_) m = std::max(m, s.state.nonlogicalElements().size());
  return m;
}

Member canonicalMember(const Algorithm& a, std::size_t i) {
  const State& s = a.state(i);
  return Member{i, Renaming::identityOn(s.baseSet()), s};
}

Member renamedMember(const Algorithm& a, std::size_t i, Renaming r) {
  State s = applyRenaming(a.state(i), r);
  return Member{i, std::move(r), std::move(s)};
}

namespace {

bool isIsomorphism(const State& from, const State& to, const Renaming& r) {
  const auto& vocab = *from.vocabulary();
  for (std::size_t s = kLogicalSymbolCount; s < vocab.size(); ++s) {
    const auto& x = from.table(s);
    const auto& y = to.table(s);
    if (x.entryCount() != y.entryCount() || r(x.defaultValue()) != y.defaultValue()) return false;
    for (const auto& [key, value] : x.rawEntries()) {
      auto args = Interpretation::unpack(key, x.arity());
      for (auto& e : args) e = r(e);
      if (y(args) != r(value)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Renaming> isomorphisms(const State& from, const State& to) {
  requireSameVocabulary(from, to);
  std::vector<Renaming> out;
  auto src = from.nonlogicalElements();
  std::vector<ElementId> dst(to.nonlogicalElements().begin(), to.nonlogicalElements().end());
  if (src.size() != dst.size()) return out;
  const auto& vocab = *from.vocabulary();
  for (std::size_t s = kLogicalSymbolCount; s < vocab.size(); ++s) {
    if (from.table(s).entryCount() != to.table(s).entryCount()) return out;
  }
  do {
    std::vector<Renaming::Pair> pairs;
    for (std::size_t i = 0; i < src.size(); ++i) pairs.emplace_back(src[i], dst[i]);
    Renaming r(std::move(pairs));
    if (isIsomorphism(from, to, r)) out.push_back(std::move(r));
  } while (std::next_permutation(dst.begin(), dst.end()));
  return out;
}

std::optional<Renaming> findIsomorphism(const State& from, const State& to) {
  requireSameVocabulary(from, to);
  auto src = from.nonlogicalElements();
  std::vector<ElementId> dst(to.nonlogicalElements().begin(), to.nonlogicalElements().end());
  if (src.size() != dst.size()) return std::nullopt;
  const auto& vocab = *from.vocabulary();
  for (std::size_t s = kLogicalSymbolCount; s < vocab.size(); ++s) {
    if (from.table(s).entryCount() != to.table(s).entryCount()) return std::nullopt;
  }
  do {
    std::vector<Renaming::Pair> pairs;
    for (std::size_t i = 0; i < src.size(); ++i) pairs.emplace_back(src[i], dst[i]);
    Renaming r(std::move(pairs));
    if (isIsomorphism(from, to, r)) return r;
  } while (std::next_permutation(dst.begin(), dst.end()));
  return std::nullopt;
}

std::optional<Member> locate(const Algorithm& a, const State& x) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto r = findIsomorphism(a.state(i), x)) return Member{i, std::move(*r), x};
  }
  return std::nullopt;
}

State step(const Algorithm& a, const Member& x) {
  if (const Rule* program = a.program()) return applyUpdates(x.state, applyRule(x.state, *program));
  auto succ = a.successorIndex(x.canonical);
  if (!succ) {
    throw UnknownState("no successor defined for state '" + a.states()[x.canonical].name + "'");
  }
  return applyRenaming(a.state(*succ), x.renaming);
}

State step(const Algorithm& a, const State& x) {
  if (const Rule* program = a.program()) return applyUpdates(x, applyRule(x, *program));
  auto m = locate(a, x);
  if (!m) throw UnknownState("state " + x.serialize() + " is not in the algorithm's family");
  return step(a, *m);
}

UpdateSet updateSet(const Algorithm& a, const State& x) { return diffStates(x, step(a, x)); }

UpdateSet updateSet(const Algorithm& a, const Member& x) {
  return diffStates(x.state, step(a, x));
}

std::optional<Incoherence> findIncoherence(const Algorithm& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const State next_i = step(a, canonicalMember(a, i));
    for (std::size_t j = i; j < a.size(); ++j) {
      const auto isos = isomorphisms(a.state(i), a.state(j));
      if (isos.empty()) continue;
      const State next_j = step(a, canonicalMember(a, j));
      for (const auto& p : isos) {
        if (!(applyRenaming(next_i, p) == next_j)) return Incoherence{i, j, p};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Universe

void forEachRenaming(const State& x, const Universe& u,
                     const std::function<bool(const Renaming&)>& visit) {
  const auto carrier = x.nonlogicalElements();
  const std::size_t k = carrier.size();
  const std::size_t n = u.nonlogicalCount();
  if (k > n) return;
  std::vector<bool> used(n, false);
  std::vector<Renaming::Pair> pairs(k);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (stop) return;
    if (pos == k) {
      if (!visit(Renaming(pairs))) stop = true;
      return;
    }
    for (std::size_t c = 0; c < n && !stop; ++c) {
      if (used[c]) continue;
      used[c] = true;
      pairs[pos] = {carrier[pos], ElementId{static_cast<std::uint16_t>(c + kLogicalElementCount)}};
      self(self, pos + 1);
      used[c] = false;
    }
  };
  rec(rec, 0);
}

std::size_t countRenamings(std::size_t carrier, const Universe& u) {
  const std::size_t n = u.nonlogicalCount();
  if (carrier > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 0; i < carrier; ++i) out *= n - i;
  return out;
}

}  // namespace asmcheck
