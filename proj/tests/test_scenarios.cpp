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

#include <set>
#include <string>

#include "asmcheck/scenarios.hpp"

namespace asmcheck {
namespace {

TEST(ScenarioTest, RemarkVariantsPass) {
  for (auto v : {RemarkVariant::kOriginal, RemarkVariant::kWitnessA, RemarkVariant::kSameState}) {
    const ScenarioReport r = runScenarioRemark(v);
    EXPECT_TRUE(r.passed());
    ASSERT_GE(r.lines().size(), 3u);
    EXPECT_EQ(r.lines()[0], "verdict: pass");
    for (std::size_t i = 2; i < r.lines().size(); ++i) EXPECT_EQ(r.lines()[i].rfind("ok: ", 0), 0u);
  }
}

TEST(ScenarioTest, RemarkData) {
  const RemarkData same = remarkData(RemarkVariant::kSameState);
  EXPECT_EQ(same.x, same.y);
  EXPECT_EQ(remarkData(RemarkVariant::kWitnessA).terms.size(), 1u);
  EXPECT_EQ(remarkData().terms.size(), 2u);
}

TEST(ScenarioTest, ExamplePasses) {
  const ScenarioReport r = runScenarioExample(Universe{7});
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(runScenarioExample(Universe{7}, true).passed());
  EXPECT_TRUE(runScenarioExample(Universe{12}).passed());
  EXPECT_THROW(runScenarioExample(Universe{6}), HeadroomError);
}

TEST(ScenarioTest, ExampleCandidatesAreAllSubsets) {
  const Algorithm a = exampleAlgorithm();
  const auto candidates = exampleWitnessCandidates(*a.vocabulary());
  EXPECT_EQ(candidates.size(), 16u);
  for (const auto& t : candidates) EXPECT_TRUE(t.isSubtermClosed());
  std::set<std::string> distinct;
  for (const auto& t : candidates) distinct.insert(t.toString());
  EXPECT_EQ(distinct.size(), 16u);
}

TEST(ScenarioTest, FailedAssertionsAreReported) {
  ScenarioReport r{"demo", {}};
  r.expect(true, "first");
  r.expect(false, "second");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.lines(), (std::vector<std::string>{"verdict: fail", "scenario: demo", "ok: first", "FAILED: second"}));
}

TEST(ScenarioTest, Deterministic) {
  EXPECT_EQ(runScenarioExample(Universe{7}).lines(), runScenarioExample(Universe{7}).lines());
  EXPECT_EQ(runScenarioRemark().lines(), runScenarioRemark().lines());
}

}  // namespace
}  // namespace asmcheck
