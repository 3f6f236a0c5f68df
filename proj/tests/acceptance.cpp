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


// Acceptance runner: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "asmcheck/harness.hpp"
#include "asmcheck/scenarios.hpp"
#include "oracles.hpp"

namespace asmcheck {
namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double budget_ms;  // zero means no time bound
  std::function<Outcome()> run;
};

Outcome remark() {
  const ScenarioReport r = runScenarioRemark();
  return {r.passed(), std::to_string(r.assertions.size()) + " assertions"};
}

Outcome example() {
  const ScenarioReport r = runScenarioExample(Universe{7});
  return {r.passed(), std::to_string(r.assertions.size()) + " assertions at |U|=7"};
}

Outcome lemma() {
  const GeneratorConfig cfg;
  std::size_t failures = 0, non_identity = 0;
  const auto pairs = generateSimilarPairs(cfg, 1000);
  for (const auto& p : pairs) {
    if (!p.terms.isSubtermClosed()) ++failures;
    if (!checkLemmaIdentity(p.x, p.y, p.terms).holds) ++failures;
    non_identity += !similarityFunction(p.x, p.y, p.terms).isIdentity();
  }
  return {failures == 0 && pairs.size() == 1000,
          std::to_string(pairs.size()) + " pairs, " + std::to_string(non_identity) + " with non-identity sigma, " +
              std::to_string(failures) + " failures"};
}

Outcome theorem() {
  const SuiteResult r = runEquivalenceSuite(GeneratorConfig{});
  std::size_t old_pass = 0, old_fail = 0;
  for (const auto& l : r.lines) (l.old_be == Verdict::kPass ? old_pass : old_fail)++;
  const bool ok = r.ok() && r.instances == 100 && r.case1_routes > 0 && r.case2_routes > 0;
  return {ok, std::to_string(r.agreeing_instances) + "/" + std::to_string(r.instances) + " instances agree, " +
                  std::to_string(r.lines.size()) + " witnesses (" + std::to_string(old_pass) + " pass, " +
                  std::to_string(old_fail) + " fail), replayed " + std::to_string(r.replay_pairs) +
                  " pairs (case1 " + std::to_string(r.case1_routes) + ", case2 " +
                  std::to_string(r.case2_routes) + "), " + std::to_string(r.replay_failures) +
                  " replay failures"};
}

Outcome naturality() {
  const GeneratorConfig cfg;
  const Universe u{cfg.universeSize()};
  std::size_t violations = 0, renamings = 0;
  for (const auto& inst : generateAlgorithmSuite(cfg)) {
    if (!checkAbstractState(inst.algorithm, u).passed()) ++violations;
    for (const auto& cs : inst.algorithm.states()) {
      const State next = step(inst.algorithm, cs.state);
      forEachRenaming(cs.state, u, [&](const Renaming& r) {
        const State y = applyRenaming(cs.state, r);
        const State y_next = step(inst.algorithm, y);
        if (y_next != applyRenaming(next, r) || !std::ranges::equal(y_next.baseSet(), y.baseSet())) ++violations;
        ++renamings;
        return true;
      });
    }
  }
  return {violations == 0, std::to_string(renamings) + " renamed states, " + std::to_string(violations) +
                               " violations"};
}

Outcome monotonicity() {
  GeneratorConfig cfg;
  std::mt19937_64 rng(2026);
  std::size_t checked = 0, violations = 0;
  while (checked < 50) {
    const Universe u{cfg.universeSize()};
    for (const auto& inst : generateAlgorithmSuite(cfg)) {
      const WitnessSet pool = allGroundTerms(*inst.algorithm.vocabulary(), cfg.max_term_depth);
      for (const auto& w : inst.witnesses) {
        if (checked == 50) break;
        const bool old_ok = checkOldBE(inst.algorithm, w, u).passed();
        const bool new_ok = checkNewBE(inst.algorithm, w, u).passed();
        if (!old_ok && !new_ok) continue;
        const WitnessSet larger = oracle::extend(w, pool, rng);
        if (old_ok && !checkOldBE(inst.algorithm, larger, u).passed()) ++violations;
        if (new_ok && !checkNewBE(inst.algorithm, larger, u).passed()) ++violations;
        if (!witnessMonotonicityCheck(inst.algorithm, w, larger, u).passed()) ++violations;
        ++checked;
      }
    }
    ++cfg.seed;
  }
  return {violations == 0, std::to_string(checked) + " (A, T, T') triples, " + std::to_string(violations) +
                               " violations"};
}

// The rule-derived update set of every member, renamed copies included,
// against the diff of the transported canonical successor.
Outcome deltaCrossCheck() {
  const GeneratorConfig cfg;
  const Universe u{cfg.universeSize()};
  std::size_t states = 0, discrepancies = 0, rule_instances = 0;
  for (const auto& inst : generateAlgorithmSuite(cfg)) {
    const Rule* program = inst.algorithm.program();
    if (!program) continue;
    ++rule_instances;
    for (const auto& cs : inst.algorithm.states()) {
      const State next = step(inst.algorithm, cs.state);
      forEachRenaming(cs.state, u, [&](const Renaming& r) {
        const State y = applyRenaming(cs.state, r);
        if (applyRule(y, *program) != diffStates(y, applyRenaming(next, r))) ++discrepancies;
        ++states;
        return true;
      });
    }
  }
  return {discrepancies == 0 && rule_instances > 0,
          std::to_string(rule_instances) + " rule instances, " + std::to_string(states) + " states, " +
              std::to_string(discrepancies) + " discrepancies"};
}

}  // namespace
}  // namespace asmcheck

int main() {
  using namespace asmcheck;
  const std::vector<Criterion> criteria = {
      {1, "remark-reproduction", 1000, remark},
      {2, "example-reproduction", 5000, example},
      {3, "lemma-property", 60000, lemma},
      {4, "theorem-desk-scale", 300000, theorem},
      {5, "naturality-suite", 0, naturality},
      {6, "witness-monotonicity", 0, monotonicity},
      {7, "delta-cross-validation", 0, deltaCrossCheck},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_ms > 0 && ms > c.budget_ms) {
      out.ok = false;
      out.detail += ", over the " + std::to_string(static_cast<long>(c.budget_ms)) + " ms budget";
    }
    std::printf("[%s] %d %s: %s (%.0f ms)\n", out.ok ? "PASS" : "FAIL", c.number, c.name.c_str(),
                out.detail.c_str(), ms);
    std::fflush(stdout);
    failed += !out.ok;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
