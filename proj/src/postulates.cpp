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

#include "asmcheck/postulates.hpp"

#include <algorithm>
#include <sstream>

namespace asmcheck {

std::string toString(Verdict v) { return v == Verdict::kPass ? "pass" : "fail"; }

std::vector<std::string> CheckReport::lines() const {
  std::vector<std::string> out;
  out.push_back("verdict: " + asmcheck::toString(verdict));
  out.push_back("check: " + check);
  for (const auto& n : notes) out.push_back("note: " + n);
  if (witness) {
    const auto& w = *witness;
    out.push_back("witness.requirement: " + w.requirement);
    out.push_back("witness.description: " + w.description);
    if (w.first) out.push_back("witness.first: " + w.first->serialize());
    if (w.second) out.push_back("witness.second: " + w.second->serialize());
    if (w.update) out.push_back("witness.update: " + w.update->toString());
    if (w.renaming) out.push_back("witness.renaming: " + w.renaming->toString());
    if (w.first_updates) out.push_back("witness.first_updates: " + w.first_updates->toString());
    if (w.second_updates) out.push_back("witness.second_updates: " + w.second_updates->toString());
  }
  return out;
}

std::string CheckReport::toString() const {
  std::ostringstream out;
  for (const auto& l : lines()) out << l << "\n";
  return out.str();
}

int exitCode(const CheckReport& report) { return report.passed() ? kExitPass : kExitFail; }

std::size_t requiredUniverseSize(const Algorithm& a) {
  return 2 * a.maxCarrierSize() + kLogicalElementCount;
}

namespace {

void requireCarriersInside(const Algorithm& a, const Universe& u) {
  for (const auto& s : a.states()) {
    for (ElementId e : s.state.nonlogicalElements()) {
      if (!u.contains(e)) {
        throw PreconditionError("state '" + s.name + "' uses element " + toString(e) +
                                " outside a universe of size " + std::to_string(u.size));
      }
    }
  }
}

CheckReport failWith(std::string check, Counterexample w) {
  CheckReport r;
  r.check = std::move(check);
  r.verdict = Verdict::kFail;
  r.witness = std::move(w);
  return r;
}

}  // namespace

void requireHeadroom(const Algorithm& a, const Universe& u) {
  const std::size_t need = requiredUniverseSize(a);
  if (u.size < need) {
    throw HeadroomError("universe of size " + std::to_string(u.size) +
                        " is too small: two disjoint copies of the largest carrier need " +
                        std::to_string(need));
  }
  requireCarriersInside(a, u);
}

// ---------------------------------------------------------------------------
// Closure scan

ClosureScan::ClosureScan(const Algorithm& a, const WitnessSet& terms, const Universe& u)
    : algorithm_(&a), terms_(terms), universe_(u), evaluator_(*a.vocabulary(), terms) {
  requireHeadroom(a, u);
  auto record = [&](const Member& m) {
    Record r{m.canonical, m.renaming, evaluator_.evaluate(m.state), {}, {}};
    r.pattern = equalityPattern(r.values);
    try {
      r.updates = updateSet(a, m);
    } catch (const UnknownState& e) {
      throw PreconditionError(std::string("one-step transformation is not total: ") + e.what());
    }
    return r;
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    canonical_.push_back(record(canonicalMember(a, i)));
    forEachRenaming(a.state(i), u, [&](const Renaming& r) {
      closure_.push_back(record(renamedMember(a, i, r)));
      return true;
    });
  }
}

State ClosureScan::materialize(const Record& r) const {
  return applyRenaming(algorithm_->state(r.canonical), r.renaming);
}

// ---------------------------------------------------------------------------
// Sequential time

CheckReport checkSequentialTime(const Algorithm& a) {
  const std::string check = "sequential-time";
  if (a.size() == 0) return failWith(check, {"nonempty states", "empty state set", {}, {}, {}, {}, {}, {}});
  if (std::none_of(a.states().begin(), a.states().end(),
                   [](const CanonicalState& s) { return s.initial; })) {
    return failWith(check, {"nonempty initial states", "empty initial state set", {}, {}, {}, {}, {}, {}});
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& name = a.states()[i].name;
    State next = a.state(i);
    try {
      next = step(a, canonicalMember(a, i));
    } catch (const Error& e) {
      return failWith(check, {"total transformation",
                              "step undefined at '" + name + "': " + e.what(), a.state(i),
                              {}, {}, {}, {}, {}});
    }
    if (!locate(a, next)) {
      return failWith(check, {"transformation maps states to states",
                              "successor of '" + name + "' is not in the state family",
                              a.state(i), next, {}, {}, {}, {}});
    }
  }
  CheckReport r;
  r.check = check;
  r.notes.push_back(std::to_string(a.size()) + " canonical states, step total and closed");
  return r;
}

// ---------------------------------------------------------------------------
// Abstract state

CheckReport checkAbstractState(const Algorithm& a, const Universe& u) {
  const std::string check = "abstract-state";
  if (u.size < a.maxCarrierSize() + kLogicalElementCount) {
    throw HeadroomError("universe of size " + std::to_string(u.size) +
                        " cannot host a copy of the largest carrier");
  }
  requireCarriersInside(a, u);
  CheckReport report;
  report.check = check;
  std::size_t renamings = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const State& x = a.state(i);
    State next = x;
    try {
      next = step(a, canonicalMember(a, i));
    } catch (const Error& e) {
      report.notes.push_back("skipped '" + a.states()[i].name + "': " + e.what());
      continue;
    }
    if (!std::ranges::equal(next.baseSet(), x.baseSet())) {
      return failWith(check, {"base set preserved",
                              "successor of '" + a.states()[i].name + "' changes the base set", x,
                              next, {}, {}, {}, {}});
    }
    std::optional<CheckReport> failure;
    forEachRenaming(x, u, [&](const Renaming& r) {
      ++renamings;
      const State copy = applyRenaming(x, r);
      const State expected = applyRenaming(next, r);
      State actual = copy;
      try {
        actual = step(a, copy);
      } catch (const Error& e) {
        failure = failWith(check, {"isomorphism closure", std::string("copy not stepped: ") + e.what(),
                                   x, copy, {}, r, {}, {}});
        return false;
      }
      if (!(actual == expected)) {
        failure = failWith(check, {"isomorphisms commute with the transformation",
                                   "step(r(X)) != r(step(X)) for X = '" + a.states()[i].name + "'",
                                   x, copy, {}, r, diffStates(copy, actual),
                                   diffStates(copy, expected)});
        return false;
      }
      return true;
    });
    if (failure) return *failure;
  }
  report.notes.push_back(std::to_string(renamings) + " renamings checked");
  report.notes.push_back("isomorphism closure holds by construction");
  return report;
}

// ---------------------------------------------------------------------------
// Bounded exploration, original form

CheckReport checkOldBE(const ClosureScan& scan) {
  const std::string check = "old-be";
  std::size_t coinciding = 0;
  for (const auto& x : scan.canonical()) {
    for (const auto& y : scan.closure()) {
      if (x.values != y.values) continue;
      ++coinciding;
      if (!(x.updates == y.updates)) {
        return failWith(check, {"coincidence over T forces equal update sets",
                                "states coincide over T but have different update sets",
                                scan.materialize(x), scan.materialize(y), {}, y.renaming,
                                x.updates, y.updates});
      }
    }
  }
  CheckReport report;
  report.check = check;
  report.notes.push_back(std::to_string(coinciding) + " coinciding pairs");
  return report;
}

CheckReport checkOldBE(const Algorithm& a, const WitnessSet& terms, const Universe& u) {
  return checkOldBE(ClosureScan(a, terms, u));
}

// ---------------------------------------------------------------------------
// Bounded exploration, new form

CheckReport checkNewBERequirementI(const Algorithm& a, const WitnessSet& terms) {
  const std::string check = "new-be (i)";
  const TermEvaluator eval(*a.vocabulary(), terms);
  // Canonical states suffice: accessibility is invariant under renaming.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto values = eval.evaluate(a.state(i));
    const std::set<ElementId> accessible(values.begin(), values.end());
    UpdateSet delta;
    try {
      delta = updateSet(a, canonicalMember(a, i));
    } catch (const UnknownState& e) {
      throw PreconditionError(std::string("one-step transformation is not total: ") + e.what());
    }
    for (const auto& u : delta) {
      if (!isAccessibleUpdate(accessible, u)) {
        return failWith(check, {"(i)", "update " + u.toString() + " of '" + a.states()[i].name +
                                           "' is not T-accessible",
                                a.state(i), {}, u, {}, delta, {}});
      }
    }
  }
  CheckReport report;
  report.check = check;
  return report;
}

namespace {

UpdateSet accessibleUpdates(const UpdateSet& delta, const std::vector<ElementId>& values) {
  const std::set<ElementId> accessible(values.begin(), values.end());
  UpdateSet out;
  for (const auto& u : delta) {
    if (isAccessibleUpdate(accessible, u)) out.insert(u);
  }
  return out;
}

}  // namespace

CheckReport checkNewBERequirementII(const ClosureScan& scan) {
  const std::string check = "new-be (ii)";
  std::size_t similar = 0;
  for (const auto& x : scan.canonical()) {
    const UpdateSet dx = accessibleUpdates(x.updates, x.values);
    for (const auto& y : scan.closure()) {
      if (x.pattern != y.pattern) continue;
      ++similar;
      const auto sigma = SimilarityFunction::fromValues(x.values, y.values);
      // sigma is a bijection between the accessible updates of X and of Y,
      // so the biconditional for every accessible u is equivalent to
      // sigma(accessible part of D(X)) == accessible part of D(Y).
      const UpdateSet dy = accessibleUpdates(y.updates, y.values);
      std::optional<Update> bad;
      for (const auto& u : dx) {
        if (!dy.contains(liftAccessibleUpdate(sigma, u))) {
          bad = u;
          break;
        }
      }
      if (!bad) {
        const auto inv = sigma.inverse();
        for (const auto& v : dy) {
          const Update u = liftAccessibleUpdate(inv, v);
          if (!dx.contains(u)) {
            bad = u;
            break;
          }
        }
      }
      if (bad) {
        const bool in_x = x.updates.contains(*bad);
        return failWith(
            check, {"(ii)",
                    "T-similar states disagree on accessible update " + bad->toString() +
                        (in_x ? " (in D(X), image " : " (not in D(X), image ") +
                        liftAccessibleUpdate(sigma, *bad).toString() +
                        (in_x ? " not in D(Y))" : " in D(Y))"),
                    scan.materialize(x), scan.materialize(y), *bad, y.renaming, x.updates,
                    y.updates});
      }
    }
  }
  CheckReport report;
  report.check = check;
  report.notes.push_back(std::to_string(similar) + " T-similar pairs");
  return report;
}

CheckReport checkNewBE(const ClosureScan& scan) {
  if (!scan.terms().isSubtermClosed()) {
    throw PreconditionError("the new bounded-exploration witness must be closed under subterms");
  }
  CheckReport first = checkNewBERequirementI(scan.algorithm(), scan.terms());
  CheckReport second = checkNewBERequirementII(scan);
  CheckReport report;
  report.check = "new-be";
  report.notes.push_back("requirement (i): " + toString(first.verdict));
  report.notes.push_back("requirement (ii): " + toString(second.verdict));
  for (const auto& n : second.notes) report.notes.push_back(n);
  if (!first.passed()) {
    report.verdict = Verdict::kFail;
    report.witness = first.witness;
  } else if (!second.passed()) {
    report.verdict = Verdict::kFail;
    report.witness = second.witness;
  }
  return report;
}

CheckReport checkNewBE(const Algorithm& a, const WitnessSet& terms, const Universe& u) {
  if (!terms.isSubtermClosed()) {
    throw PreconditionError("the new bounded-exploration witness must be closed under subterms");
  }
  return checkNewBE(ClosureScan(a, terms, u));
}

// ---------------------------------------------------------------------------
// Witness monotonicity

CheckReport witnessMonotonicityCheck(const Algorithm& a, const WitnessSet& smaller,
                                     const WitnessSet& larger, const Universe& u) {
  if (!smaller.isSubsetOf(larger)) throw PreconditionError("T is not a subset of T'");
  const std::string check = "witness-monotonicity";
  CheckReport report;
  report.check = check;

  const ClosureScan small_scan(a, smaller, u);
  const ClosureScan large_scan(a, larger, u);
  const CheckReport old_small = checkOldBE(small_scan);
  if (old_small.passed()) {
    const CheckReport old_large = checkOldBE(large_scan);
    if (!old_large.passed()) {
      auto w = *old_large.witness;
      w.requirement = "old-be monotonicity";
      return failWith(check, w);
    }
    report.notes.push_back("old-be: T and T' both pass");
  } else {
    report.notes.push_back("old-be: T fails, vacuous");
  }

  if (smaller.isSubtermClosed() && larger.isSubtermClosed()) {
    const CheckReport new_small = checkNewBE(small_scan);
    if (new_small.passed()) {
      const CheckReport new_large = checkNewBE(large_scan);
      if (!new_large.passed()) {
        auto w = *new_large.witness;
        w.requirement = "new-be monotonicity";
        return failWith(check, w);
      }
      report.notes.push_back("new-be: T and T' both pass");
    } else {
      report.notes.push_back("new-be: T fails, vacuous");
    }
  } else {
    report.notes.push_back("new-be: skipped, witness sets not closed under subterms");
  }
  return report;
}

}  // namespace asmcheck
