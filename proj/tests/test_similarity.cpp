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
#include "asmcheck/similarity.hpp"
#include "oracles.hpp"

namespace asmcheck {
namespace {

const ElementId e1 = nonlogical(1), e2 = nonlogical(2), e3 = nonlogical(3);

TEST(SimilarityTest, RemarkPair) {
  const RemarkData d = remarkData();
  EXPECT_TRUE(tSimilar(d.x, d.y, d.terms));
  const auto sigma = similarityFunction(d.x, d.y, d.terms);
  EXPECT_EQ(sigma.toString(), "{1->1, 2->3}");
  EXPECT_EQ(sigma.domain(), (std::set<ElementId>{e1, e2}));
  EXPECT_EQ(sigma.image(), (std::set<ElementId>{e1, e3}));
  EXPECT_EQ(sigma.inverse()(e3), e2);
  EXPECT_FALSE(sigma.isIdentity());
  EXPECT_THROW(sigma(e3), InaccessibleError);

  const auto lemma = checkLemmaIdentity(d.x, d.y, d.terms);
  EXPECT_TRUE(lemma.holds);
  const auto iso = checkPartialIsomorphism(d.x, d.y, d.terms);
  ASSERT_FALSE(iso.holds);
  EXPECT_EQ(iso.violation->symbol, "f");
  EXPECT_EQ(iso.violation->args, std::vector<ElementId>{e1});
  EXPECT_EQ(iso.violation->mapped_value, e3);
  EXPECT_EQ(iso.violation->value_of_mapped, e2);
}

TEST(SimilarityTest, NotSimilar) {
  RemarkData d = remarkData();
  d.y.set("b", {}, e1);  // a_Y = b_Y but a_X != b_X
  EXPECT_FALSE(tSimilar(d.x, d.y, d.terms));
  EXPECT_THROW(similarityFunction(d.x, d.y, d.terms), NotSimilarError);
  EXPECT_THROW(SimilarityFunction::fromValues({e1, e2}, {e1, e1}), NotSimilarError);
  EXPECT_THROW(SimilarityFunction::fromValues({e1}, {e1, e1}), NotSimilarError);
}

TEST(SimilarityTest, LemmaNeedsClosedWitness) {
  const RemarkData d = remarkData();
  const WitnessSet open{makeTerm(*d.vocab, "f", {makeTerm(*d.vocab, "a")})};
  EXPECT_THROW(checkLemmaIdentity(d.x, d.y, open), PreconditionError);
}

TEST(SimilarityTest, PatternsDecideSimilarity) {
  EXPECT_EQ(equalityPattern({e3, e1, e3, kTrue}), (std::vector<std::uint16_t>{0, 1, 0, 2}));
  GeneratorConfig cfg;
  cfg.seed = 3;
  std::size_t similar = 0;
  for (const auto& inst : generateAlgorithmSuite(cfg)) {
    const auto& states = inst.algorithm.states();
    for (const auto& w : inst.witnesses) {
      const TermEvaluator eval(*inst.algorithm.vocabulary(), w);
      for (const auto& x : states) {
        for (const auto& y : states) {
          const bool by_pattern = equalityPattern(eval.evaluate(x.state)) == equalityPattern(eval.evaluate(y.state));
          const bool by_definition = tSimilar(x.state, y.state, w);
          ASSERT_EQ(by_pattern, by_definition);
          ASSERT_EQ(by_definition, oracle::similar(x.state, y.state, w));
          similar += by_definition;
        }
      }
    }
  }
  EXPECT_GT(similar, 0u);
}

TEST(AccessibilityTest, UpdatesAndLifting) {
  const RemarkData d = remarkData();
  EXPECT_EQ(accessibleElements(d.x, d.terms), (std::set<ElementId>{e1, e2}));
  EXPECT_TRUE(isAccessibleUpdate(d.x, d.terms, {"f", {e1}, e2}));
  EXPECT_FALSE(isAccessibleUpdate(d.x, d.terms, {"f", {e1}, e3}));
  EXPECT_FALSE(isAccessibleUpdate(d.x, d.terms, {"f", {e3}, e1}));
  const auto sigma = similarityFunction(d.x, d.y, d.terms);
  EXPECT_EQ(liftAccessibleUpdate(sigma, {"f", {e1}, e2}), (Update{"f", {e1}, e3}));
  EXPECT_THROW(liftAccessibleUpdate(sigma, {"f", {e3}, e1}), InaccessibleError);
}

// Property: the identity of the lemma holds on generated similar pairs, and
// sigma agrees with the oracle.
TEST(LemmaProperty, GeneratedPairs) {
  GeneratorConfig cfg;
  cfg.seed = 21;
  std::size_t non_identity = 0;
  for (const auto& p : generateSimilarPairs(cfg, 300)) {
    ASSERT_TRUE(p.terms.isSubtermClosed());
    ASSERT_TRUE(oracle::similar(p.x, p.y, p.terms));
    const auto sigma = similarityFunction(p.x, p.y, p.terms);
    EXPECT_EQ(sigma.pairs(), oracle::sigma(p.x, p.y, p.terms));
    const auto report = checkLemmaIdentity(p.x, p.y, p.terms);
    EXPECT_TRUE(report.holds) << report.toString();
    non_identity += !sigma.isIdentity();
  }
  EXPECT_GT(non_identity, 50u);
}

TEST(LemmaProperty, PartialIsomorphismImpliesLemma) {
  GeneratorConfig cfg;
  cfg.seed = 22;
  std::size_t strict = 0;
  for (const auto& p : generateSimilarPairs(cfg, 200)) {
    const auto iso = checkPartialIsomorphism(p.x, p.y, p.terms);
    const auto lemma = checkLemmaIdentity(p.x, p.y, p.terms);
    if (iso.holds) EXPECT_TRUE(lemma.holds);
    strict += lemma.holds && !iso.holds;
  }
  // The two notions differ on generated data too, not only on the fixed pair.
  EXPECT_GT(strict, 0u);
}

}  // namespace
}  // namespace asmcheck
