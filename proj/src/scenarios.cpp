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

#include "asmcheck/scenarios.hpp"

#include <algorithm>

namespace asmcheck {

bool ScenarioReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.ok; });
}

std::vector<std::string> ScenarioReport::lines() const {
  std::vector<std::string> out{std::string("verdict: ") + (passed() ? "pass" : "fail"),
                               "scenario: " + name};
  for (const auto& a : assertions) out.push_back((a.ok ? "ok: " : "FAILED: ") + a.text);
  return out;
}

// ---------------------------------------------------------------------------
// Partial isomorphism

RemarkData remarkData(RemarkVariant variant) {
  auto vocab = makeVocabulary({{"a", 0}, {"b", 0}, {"f", 1}});
  const ElementId e1 = nonlogical(1), e2 = nonlogical(2), e3 = nonlogical(3);
  State x(vocab, {e1, e2, e3});
  x.set("f", {e1}, e2);
  x.set("f", {e2}, e3);
  x.set("f", {e3}, e1);
  x.set("a", {}, e1);
  State y = x;
  x.set("b", {}, e2);
  y.set("b", {}, e3);
  if (variant == RemarkVariant::kSameState) y = x;
  WitnessSet terms{makeTerm(*vocab, "a"), makeTerm(*vocab, "b")};
  if (variant == RemarkVariant::kWitnessA) terms = WitnessSet{makeTerm(*vocab, "a")};
  return {vocab, std::move(x), std::move(y), std::move(terms)};
}

ScenarioReport runScenarioRemark(RemarkVariant variant) {
  ScenarioReport report;
  report.name = "remark";
  const RemarkData d = remarkData(variant);
  const ElementId e1 = nonlogical(1), e2 = nonlogical(2), e3 = nonlogical(3);

  const bool similar = tSimilar(d.x, d.y, d.terms);
  report.expect(similar, "X and Y are T-similar for T = " + d.terms.toString());
  if (!similar) return report;

  const auto sigma = similarityFunction(d.x, d.y, d.terms);
  std::map<ElementId, ElementId> expected;
  switch (variant) {
    case RemarkVariant::kOriginal: expected = {{e1, e1}, {e2, e3}}; break;
    case RemarkVariant::kWitnessA: expected = {{e1, e1}}; break;
    case RemarkVariant::kSameState: expected = {{e1, e1}, {e2, e2}}; break;
  }
  report.expect(sigma.pairs() == expected, "sigma = " + sigma.toString());

  const auto lemma = checkLemmaIdentity(d.x, d.y, d.terms);
  report.expect(lemma.holds, "identity holds on every term of T (" + std::to_string(lemma.checked) +
                                 " checked)");

  const auto iso = checkPartialIsomorphism(d.x, d.y, d.terms);
  if (variant == RemarkVariant::kOriginal) {
    report.expect(!iso.holds, "sigma is not a partial isomorphism");
    const auto& v = iso.violation;
    const bool exact = v && v->symbol == "f" && v->args == std::vector<ElementId>{e1} &&
                       v->mapped_value == e3 && v->value_of_mapped == e2;
    report.expect(exact, "sigma(f_X(1)) = 3 while f_Y(sigma(1)) = 2" +
                             (v ? " [found " + v->toString() + "]" : std::string(" [no violation]")));
  } else {
    report.expect(iso.holds, "sigma is a partial isomorphism (" + std::to_string(iso.checked) +
                                 " tuples checked)");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Flip algorithm

Algorithm exampleAlgorithm(bool identity) {
  auto vocab = makeVocabulary({{"f", 0}});
  const ElementId a = nonlogical(1), b = nonlogical(2);
  State x(vocab, {a, b});
  x.set("f", {}, a);
  State x1(vocab, {a, b});
  x1.set("f", {}, b);
  std::vector<CanonicalState> states{{"X", x, true}, {"X1", x1, true}};
  std::vector<std::optional<std::size_t>> successors{identity ? 0 : 1, identity ? 1 : 0};
  return Algorithm::withTable(vocab, std::move(states), std::move(successors));
}

std::vector<WitnessSet> exampleWitnessCandidates(const Vocabulary& vocab) {
  const std::vector<Term> pool{makeTerm(vocab, "true"), makeTerm(vocab, "false"),
                               makeTerm(vocab, "undef"), makeTerm(vocab, "f")};
  std::vector<WitnessSet> out;
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    WitnessSet w;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) w.insert(pool[i]);
    }
    out.push_back(std::move(w));
  }
  return out;
}

ScenarioReport runScenarioExample(const Universe& u, bool identity) {
  ScenarioReport report;
  report.name = identity ? "example (identity)" : "example";
  const Algorithm a = exampleAlgorithm(identity);
  requireHeadroom(a, u);

  report.expect(checkSequentialTime(a).passed(), "sequential time holds, all states initial");
  report.expect(checkAbstractState(a, u).passed(), "abstract state holds");

  const auto candidates = exampleWitnessCandidates(*a.vocabulary());
  std::size_t i_fail = 0, ii_pass = 0, old_fail = 0, closed = 0;
  for (const auto& t : candidates) {
    closed += t.isSubtermClosed();
    const ClosureScan scan(a, t, u);
    i_fail += !checkNewBERequirementI(a, t).passed();
    ii_pass += checkNewBERequirementII(scan).passed();
    old_fail += !checkOldBE(scan).passed();
  }
  const std::size_t n = candidates.size();
  const std::string of = " of " + std::to_string(n);
  report.expect(n == 16 && closed == n, std::to_string(closed) + of + " candidate sets are subterm-closed");
  if (identity) {
    report.expect(i_fail == 0, "requirement (i) passes for " + std::to_string(n - i_fail) + of);
    report.expect(ii_pass == n, "requirement (ii) passes for " + std::to_string(ii_pass) + of);
    report.expect(old_fail == 0, "old-be passes for " + std::to_string(n - old_fail) + of);
    return report;
  }
  report.expect(i_fail == n, "requirement (i) fails for " + std::to_string(i_fail) + of);
  report.expect(ii_pass == n, "requirement (ii) passes for " + std::to_string(ii_pass) + of);
  report.expect(old_fail == n, "old-be fails for " + std::to_string(old_fail) + of);

  // The fresh-element pair: Y replaces b by the smallest unused element c.
  const State& x = a.state(0);
  const ElementId ea = nonlogical(1), eb = nonlogical(2), ec = nonlogical(3);
  const State y = applyRenaming(x, Renaming({{ea, ea}, {eb, ec}}));
  bool coincide = true;
  for (const auto& t : candidates) coincide = coincide && coincidesOver(x, y, t);
  report.expect(coincide, "X and Y coincide over every candidate set");
  const UpdateSet dx = updateSet(a, x);
  const UpdateSet dy = updateSet(a, y);
  report.expect(dx == UpdateSet{{"f", {}, eb}} && dy == UpdateSet{{"f", {}, ec}} && !(dx == dy),
                "D(X) = " + dx.toString() + " differs from D(Y) = " + dy.toString());

  const auto old = checkOldBE(a, WitnessSet{}, u);
  const bool fresh = old.witness && old.witness->first_updates == dx && old.witness->second_updates == dy;
  report.expect(fresh, "old-be counterexample is the fresh-element pair");
  return report;
}

}  // namespace asmcheck
