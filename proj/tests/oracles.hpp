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

// Slow reference implementations used as test oracles. Each one follows the
// definition directly and shares no code path with the library beyond State
// lookups.

#ifndef ASMCHECK_TESTS_ORACLES_HPP_
#define ASMCHECK_TESTS_ORACLES_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "asmcheck/harness.hpp"
#include "asmcheck/postulates.hpp"

namespace oracle {

using namespace asmcheck;

inline void collectSubterms(const Term& t, std::set<Term>& out) {
  out.insert(t);
  for (const auto& a : t.args()) collectSubterms(a, out);
}

inline std::set<Term> subterms(const WitnessSet& w) {
  std::set<Term> out;
  for (const auto& t : w) collectSubterms(t, out);
  return out;
}

inline ElementId eval(const State& x, const Term& t) {
  std::vector<ElementId> args;
  for (const auto& a : t.args()) args.push_back(eval(x, a));
  return x.apply(t.symbol().name, args);
}

inline bool similar(const State& x, const State& y, const WitnessSet& terms) {
  for (const auto& s : terms) {
    for (const auto& t : terms) {
      if ((eval(x, s) == eval(x, t)) != (eval(y, s) == eval(y, t))) return false;
    }
  }
  return true;
}

inline std::map<ElementId, ElementId> sigma(const State& x, const State& y, const WitnessSet& terms) {
  std::map<ElementId, ElementId> out;
  for (const auto& t : terms) out[eval(x, t)] = eval(y, t);
  return out;
}

inline bool isomorphic(const State& x, const State& y) {
  if (x.nonlogicalElements().size() != y.nonlogicalElements().size()) return false;
  std::vector<ElementId> from(x.nonlogicalElements().begin(), x.nonlogicalElements().end());
  std::vector<ElementId> to(y.nonlogicalElements().begin(), y.nonlogicalElements().end());
  do {
    std::vector<Renaming::Pair> pairs;
    for (std::size_t i = 0; i < from.size(); ++i) pairs.emplace_back(from[i], to[i]);
    if (applyRenaming(x, Renaming(pairs)) == y) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

/// Every nontrivial update, found by probing every location of the carrier.
inline std::set<Update> probeDiff(const State& before, const State& after) {
  std::set<Update> out;
  const auto base = before.baseSet();
  const auto& vocab = *before.vocabulary();
  for (std::size_t f = kLogicalSymbolCount; f < vocab.size(); ++f) {
    const int arity = vocab.at(f).arity;
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
      std::vector<ElementId> args;
      for (auto i : idx) args.push_back(base[i]);
      const ElementId v = after.apply(f, args);
      if (v != before.apply(f, args)) out.insert({vocab.at(f).name, args, v});
      int k = arity - 1;
      while (k >= 0 && ++idx[k] == base.size()) idx[k--] = 0;
      if (k < 0) break;
    }
  }
  return out;
}

/// Every member of the closure as a state, with its update set.
struct Member {
  State state;
  std::set<Update> updates;
};

inline std::vector<Member> closure(const Algorithm& a, const Universe& u) {
  std::vector<Member> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    forEachRenaming(a.state(i), u, [&](const Renaming& r) {
      const State x = applyRenaming(a.state(i), r);
      out.push_back({x, probeDiff(x, step(a, x))});
      return true;
    });
  }
  return out;
}

/// Original postulate over every pair of the closure.
inline bool oldBE(const std::vector<Member>& members, const WitnessSet& terms) {
  for (const auto& x : members) {
    for (const auto& y : members) {
      bool coincide = true;
      for (const auto& t : terms) coincide = coincide && eval(x.state, t) == eval(y.state, t);
      if (coincide && x.updates != y.updates) return false;
    }
  }
  return true;
}

inline std::set<ElementId> accessible(const State& x, const WitnessSet& terms) {
  std::set<ElementId> out;
  for (const auto& t : terms) out.insert(eval(x, t));
  return out;
}

inline bool requirementI(const std::vector<Member>& members, const WitnessSet& terms) {
  for (const auto& m : members) {
    const auto acc = accessible(m.state, terms);
    for (const auto& u : m.updates) {
      if (!acc.contains(u.value)) return false;
      for (ElementId e : u.args) {
        if (!acc.contains(e)) return false;
      }
    }
  }
  return true;
}

/// Requirement (ii) over every accessible update: every symbol, every
/// tuple of accessible arguments and every accessible value.
inline bool requirementII(const std::vector<Member>& members, const WitnessSet& terms) {
  // Values of every term in every member, evaluated once.
  std::vector<std::vector<ElementId>> values;
  for (const auto& m : members) {
    std::vector<ElementId> v;
    for (const auto& t : terms) v.push_back(eval(m.state, t));
    values.push_back(std::move(v));
  }
  auto similarValues = [](const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if ((a[i] == a[j]) != (b[i] == b[j])) return false;
      }
    }
    return true;
  };
  for (std::size_t xi = 0; xi < members.size(); ++xi) {
    const auto& x = members[xi];
    const std::set<ElementId> acc(values[xi].begin(), values[xi].end());
    const std::vector<ElementId> acc_x(acc.begin(), acc.end());
    if (acc_x.empty()) continue;
    for (std::size_t yi = 0; yi < members.size(); ++yi) {
      const auto& y = members[yi];
      if (!similarValues(values[xi], values[yi])) continue;
      std::map<ElementId, ElementId> s;
      for (std::size_t i = 0; i < values[xi].size(); ++i) s[values[xi][i]] = values[yi][i];
      const auto& vocab = *x.state.vocabulary();
      for (std::size_t f = kLogicalSymbolCount; f < vocab.size(); ++f) {
        const int arity = vocab.at(f).arity;
        std::vector<std::size_t> idx(arity + 1, 0);
        while (true) {
          Update u{vocab.at(f).name, {}, acc_x[idx[arity]]};
          for (int i = 0; i < arity; ++i) u.args.push_back(acc_x[idx[i]]);
          Update v{u.symbol, {}, s.at(u.value)};
          for (ElementId e : u.args) v.args.push_back(s.at(e));
          if (x.updates.contains(u) != y.updates.contains(v)) return false;
          int k = arity;
          while (k >= 0 && ++idx[k] == acc_x.size()) idx[k--] = 0;
          if (k < 0) break;
        }
      }
    }
  }
  return true;
}

/// A random subterm-closed superset of `terms` drawn from `pool`.
inline WitnessSet extend(const WitnessSet& terms, const WitnessSet& pool, std::mt19937_64& rng) {
  std::vector<Term> candidates(pool.begin(), pool.end());
  WitnessSet out = terms;
  const int n = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int i = 0; i < n && !candidates.empty(); ++i) {
    out.insert(candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)]);
  }
  return subtermClosure(out);
}

}  // namespace oracle

#endif  // ASMCHECK_TESTS_ORACLES_HPP_
