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

#include <gtest/gtest.h>

#include "asmcheck/harness.hpp"
#include "asmcheck/scenarios.hpp"
#include "asmcheck/spec_format.hpp"

namespace asmcheck {
namespace {

const ElementId e1 = nonlogical(1), e2 = nonlogical(2), e3 = nonlogical(3), e4 = nonlogical(4),
                e5 = nonlogical(5), e6 = nonlogical(6);

TEST(DisjointCopyTest, RemarkPair) {
  const RemarkData d = remarkData();
  const auto [copy, eta] = constructDisjointCopy(d.x, d.y, d.terms, Universe{9});
  EXPECT_EQ(eta, Renaming({{e1, e4}, {e2, e5}, {e3, e6}}));
  EXPECT_EQ(copy, applyRenaming(d.x, eta));
  EXPECT_TRUE(tSimilar(copy, d.y, d.terms));
  EXPECT_THROW(constructDisjointCopy(d.x, d.y, d.terms, Universe{8}), HeadroomError);
}

TEST(DisjointCopyTest, KeepsElementsOutsideTarget) {
  auto v = makeVocabulary({{"a", 0}});
  State x(v, {e1, e2});
  x.set("a", {}, e2);
  State y(v, {e2, e3});
  y.set("a", {}, e3);
  const WitnessSet t{makeTerm(*v, "a")};
  const auto [copy, eta] = constructDisjointCopy(x, y, t, Universe{9});
  EXPECT_EQ(eta(e1), e1);
  EXPECT_EQ(eta(e2), e4);
}

TEST(Case1Test, ReplacementCoincidesWithTarget) {
  const RemarkData d = remarkData();
  const State y = applyRenaming(d.y, Renaming({{e1, e4}, {e2, e5}, {e3, e6}}));
  const auto [x_prime, xi] = constructCase1State(d.x, y, d.terms);
  EXPECT_EQ(xi, Renaming({{e1, e4}, {e2, e6}, {e3, e3}}));
  EXPECT_TRUE(coincidesOver(x_prime, y, d.terms));
}

TEST(Case1Test, Hypotheses) {
  const RemarkData d = remarkData();
  EXPECT_THROW(constructCase1State(d.x, d.y, d.terms), CaseHypothesisError);
  auto v = makeVocabulary({{"a", 0}});
  State x(v, {e1});
  x.set("a", {}, kTrue);
  State y(v, {e2});
  y.set("a", {}, e2);
  EXPECT_THROW(constructCase1State(x, y, WitnessSet{makeTerm(*v, "a")}), CaseHypothesisError);
}

TEST(EquivalenceTest, CounterSpecReplays) {
  const SpecDocument doc = loadSpec(ASMCHECK_SPEC_DIR "/counter.spec");
  const auto report = verifyEquivalence(doc.algorithm, doc.witness("T"), Universe{9});
  EXPECT_TRUE(report.agree);
  EXPECT_TRUE(report.old_be.passed());
  EXPECT_TRUE(report.replayed);
  EXPECT_FALSE(report.replay_failure);
  EXPECT_GT(report.replay_updates, 0u);
  EXPECT_GT(report.case1_routes, 0u);
  EXPECT_GT(report.case2_routes, 0u);
  EXPECT_EQ(report.verdict(), Verdict::kPass);
  EXPECT_EQ(report.summary().lines()[0], "verdict: pass");
}

TEST(EquivalenceTest, OpenWitnessIsAPrecondition) {
  const RemarkData d = remarkData();
  const Algorithm a = Algorithm::withTable(d.vocab, {{"X", d.x, true}}, {0});
  EXPECT_THROW(verifyEquivalence(a, WitnessSet{makeTerm(*d.vocab, "f", {makeTerm(*d.vocab, "a")})},
                                 Universe{9}),
               PreconditionError);
}

// Without the logical constants in T, the similarity function may send a
// logical element to a nonlogical one, and the two postulates part ways.
TEST(EquivalenceTest, LogicalConstantsMatter) {
  auto v = makeVocabulary({{"a", 0}, {"b", 0}});
  const Term a = makeTerm(*v, "a"), b = makeTerm(*v, "b");
  State x(v, {e1});
  x.set("a", {}, kTrue);
  x.set("b", {}, e1);
  State x2 = x;
  x2.set("b", {}, kTrue);
  State y(v, {e1, e2});
  y.set("a", {}, e2);
  y.set("b", {}, e1);
  const Rule program = Rule::conditional(makeTerm(*v, "eq", {a, makeTerm(*v, "true")}),
                                         Rule::assign(*v, "b", {}, a), Rule::skip());
  const Algorithm alg = Algorithm::withRules(v, {{"X", x, true}, {"X2", x2, false}, {"Y", y, true}}, program);
  ASSERT_TRUE(checkSequentialTime(alg).passed());

  const auto bare = verifyEquivalence(alg, WitnessSet{a, b}, Universe{7});
  EXPECT_TRUE(bare.old_be.passed());
  EXPECT_FALSE(bare.new_be.passed());
  EXPECT_FALSE(bare.agree);

  const WitnessSet with_constants{a, b, makeTerm(*v, "true"), makeTerm(*v, "false"), makeTerm(*v, "undef")};
  const auto full = verifyEquivalence(alg, with_constants, Universe{7});
  EXPECT_TRUE(full.agree);
  EXPECT_EQ(full.verdict(), Verdict::kPass);
}

TEST(GeneratorConfigTest, Parsing) {
  const GeneratorConfig d = parseGeneratorConfig("default");
  EXPECT_EQ(d.max_canonical_states, 3);
  EXPECT_EQ(d.max_carrier_size, 4);
  EXPECT_EQ(d.instances, 100);
  EXPECT_EQ(d.universeSize(), 11u);
  const GeneratorConfig c = parseGeneratorConfig("states=2,carrier=3,seed=9,instances=5");
  EXPECT_EQ(c.max_canonical_states, 2);
  EXPECT_EQ(c.max_carrier_size, 3);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.toString(), "states=2,carrier=3,symbols=3,arity=2,depth=2,instances=5,seed=9");
  EXPECT_THROW(parseGeneratorConfig("bogus=1"), PreconditionError);
  EXPECT_THROW(parseGeneratorConfig("states"), PreconditionError);
  EXPECT_THROW(parseGeneratorConfig("states=x"), PreconditionError);
  EXPECT_THROW(parseGeneratorConfig("states=0"), PreconditionError);
  EXPECT_THROW(parseGeneratorConfig("arity=9"), PreconditionError);
}

TEST(SuiteTest, DeterministicAndWellFormed) {
  GeneratorConfig cfg;
  cfg.instances = 15;
  cfg.seed = 4;
  const auto first = generateAlgorithmSuite(cfg);
  const auto second = generateAlgorithmSuite(cfg);
  ASSERT_EQ(first.size(), 15u);
  ASSERT_EQ(first.size(), second.size());
  std::set<std::string> kinds;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const auto& inst = first[i];
    kinds.insert(inst.kind);
    EXPECT_EQ(inst.id, i);
    EXPECT_EQ(unparseSpec({inst.algorithm, {}, {}}), unparseSpec({second[i].algorithm, {}, {}}));
    EXPECT_TRUE(inst.witnesses[0].empty());
    for (const auto& w : inst.witnesses) {
      EXPECT_TRUE(w.isSubtermClosed());
      EXPECT_TRUE(w.isSubsetOf(inst.witnesses[1]) || inst.algorithm.isRuleBased());
    }
    EXPECT_TRUE(checkSequentialTime(inst.algorithm).passed());
    EXPECT_LE(inst.algorithm.maxCarrierSize(), 4u);
    EXPECT_FALSE(findIncoherence(inst.algorithm));
  }
  EXPECT_EQ(kinds.size(), 3u);
  cfg.seed = 5;
  EXPECT_NE(unparseSpec({generateAlgorithmSuite(cfg)[0].algorithm, {}, {}}),
            unparseSpec({first[0].algorithm, {}, {}}));
}

TEST(SuiteTest, SmallRunAgrees) {
  const SuiteResult r = runEquivalenceSuite(parseGeneratorConfig("instances=10,seed=8"));
  EXPECT_EQ(r.instances, 10u);
  EXPECT_TRUE(r.ok());
  ASSERT_FALSE(r.lines.empty());
  EXPECT_EQ(r.lines[0].toString().rfind("seed=8 instance=0 witness=0 ", 0), 0u);
}

TEST(SimilarPairsTest, AllSimilar) {
  GeneratorConfig cfg;
  for (const auto& p : generateSimilarPairs(cfg, 50)) {
    EXPECT_TRUE(p.terms.isSubtermClosed());
    EXPECT_TRUE(tSimilar(p.x, p.y, p.terms));
  }
}

}  // namespace
}  // namespace asmcheck
