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

const ElementId e1 = nonlogical(1), e2 = nonlogical(2);

std::string specPath(const char* name) { return std::string(ASMCHECK_SPEC_DIR) + "/" + name; }

void expectError(std::string_view text, std::size_t line, std::size_t column, std::string_view message) {
  try {
    parseSpec(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(e.message().find(message), std::string::npos) << e.what();
  }
}

TEST(SpecFormatTest, ShippedExampleIsTheFlipAlgorithm) {
  const SpecDocument doc = loadSpec(specPath("flip.spec"));
  const Algorithm expected = exampleAlgorithm();
  EXPECT_EQ(*doc.algorithm.vocabulary(), *expected.vocabulary());
  ASSERT_EQ(doc.algorithm.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(doc.algorithm.states()[i].name, expected.states()[i].name);
    EXPECT_EQ(doc.algorithm.state(i), expected.state(i));
    EXPECT_TRUE(doc.algorithm.states()[i].initial);
    EXPECT_EQ(doc.algorithm.successorIndex(i), expected.successorIndex(i));
  }
  EXPECT_EQ(doc.labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(doc.witness("T0").empty());
  EXPECT_EQ(doc.witness("T1").size(), 4u);
  EXPECT_THROW(doc.witness("T9"), PreconditionError);
}

TEST(SpecFormatTest, LabelsAreBoundInOrderOfAppearance) {
  const SpecDocument doc = parseSpec(
      "vocabulary: c/0 g/1\n"
      "state S:\n"
      "  elements q p\n"
      "  c = p\n"
      "  g(q) = TRUE   # logical value\n"
      "  g(*) = FALSE\n"
      "initial: S\n");
  const State& s = doc.algorithm.state(0);
  EXPECT_EQ(doc.labels, (std::vector<std::string>{"q", "p"}));
  EXPECT_EQ(s.apply("c", {}), e2);
  EXPECT_EQ(s.apply("g", std::vector<ElementId>{e1}), kTrue);
  EXPECT_EQ(s.apply("g", std::vector<ElementId>{e2}), kFalse);
  EXPECT_TRUE(doc.algorithm.isRuleBased());
}

TEST(SpecFormatTest, RulesParse) {
  const SpecDocument doc = loadSpec(specPath("counter.spec"));
  const auto& v = *doc.algorithm.vocabulary();
  const Term c = parseTerm(v, "c");
  const Rule expected = Rule::parallel({Rule::conditional(
      parseTerm(v, "not(eq(c,e))"), Rule::assign(v, "c", {}, parseTerm(v, "s(c)")), Rule::skip())});
  EXPECT_EQ(*doc.algorithm.program(), expected);
  EXPECT_EQ(parseTerm(v, " s ( s(c) ) ").toString(), "s(s(c))");
  EXPECT_THROW(parseTerm(v, "s(c) c"), SpecError);
  EXPECT_THROW(parseTerm(v, "s"), SpecError);
}

TEST(SpecFormatTest, Errors) {
  expectError("", 1, 1, "missing vocabulary section");
  expectError("# only a comment\n", 1, 1, "missing vocabulary section");
  expectError("vocabulary: a/0\ntransition:\n  true() := a\n", 3, 3, "assignment to logical symbol");
  expectError("vocabulary: a/0 f/1\ntransition:\n  f := a\n", 3, 3, "arity mismatch");
  expectError("vocabulary: a/0\ntransition:\n  a := zz\n", 3, 8, "unknown symbol 'zz'");
  expectError("vocabulary: a/0\nstate X:\n  a = 1 2\n", 3, 9, "unexpected '2'");
  expectError("vocabulary: a/0\nstate X:\n  elements 1\nstate Y:\n  elements 1 2\n"
              "transition:\n  state X -> Y\n",
              7, 14, "base-set violation");
  expectError("vocabulary: a/0\ntransition:\n  state X -> Y\n", 3, 9, "unknown state 'X'");
  expectError("vocabulary: a/0 a/1\n", 1, 17, "duplicate symbol");
  expectError("vocabulary: par/0\n", 1, 13, "cannot be a symbol name");
  expectError("vocabulary: eq/2\n", 1, 13, "logical symbol");
  expectError("vocabulary: a/9\n", 1, 15, "arity");
  expectError("vocabulary: a/0\nstate X:\n  a = $\n", 3, 7, "unexpected character");
  expectError("a = 1\nvocabulary: a/0\n", 1, 1, "before the first section");
  expectError("vocabulary: a/0\nstate X:\n  eq(1,1) = 1\n", 3, 3, "fixed interpretation");
  expectError("vocabulary: a/0\nstate X:\n  a = 1\n  a = 2\n", 4, 3, "conflicting");
  expectError("vocabulary: a/0\ntransition:\n  if a then a := a\n", 3, 19, "expected 'endif'");
  expectError("vocabulary: a/0\ninitial: Z\n", 2, 10, "unknown state 'Z'");
  expectError("vocabulary: a/0\nwitness T: a\nwitness T: a\n", 3, 1, "duplicate witness");
}

TEST(SpecFormatTest, RoundTripShippedSpecs) {
  for (const char* name : {"flip.spec", "remark.spec", "counter.spec"}) {
    const SpecDocument doc = loadSpec(specPath(name));
    const std::string text = unparseSpec(doc);
    const SpecDocument again = parseSpec(text);
    EXPECT_TRUE(again == doc) << name;
    EXPECT_EQ(unparseSpec(again), text) << name;
  }
}

TEST(SpecFormatTest, RoundTripNestedRules) {
  const std::string text =
      "vocabulary: a/0 b/0 f/1\n"
      "state X:\n  elements 1 2\n  a = 1\n"
      "transition:\n"
      "  par\n"
      "    if eq(a,b) then\n      a := b\n      b := a\n    else\n"
      "      if not(eq(f(a),a)) then\n      endif\n    endif\n"
      "    par\n    endpar\n"
      "  endpar\n"
      "  f(a) := b\n"
      "initial: X\n";
  const SpecDocument doc = parseSpec(text);
  const SpecDocument again = parseSpec(unparseSpec(doc));
  EXPECT_TRUE(again == doc) << unparseSpec(doc);
}

// Property: every generated suite instance survives unparse then parse.
TEST(SpecFormatProperty, RoundTripGeneratedSuite) {
  GeneratorConfig cfg;
  cfg.instances = 40;
  cfg.seed = 12;
  for (const auto& inst : generateAlgorithmSuite(cfg)) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= inst.algorithm.maxCarrierSize(); ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<std::string, WitnessSet>> witnesses;
    for (std::size_t w = 0; w < inst.witnesses.size(); ++w) witnesses.emplace_back("T" + std::to_string(w), inst.witnesses[w]);
    const SpecDocument doc{inst.algorithm, witnesses, labels};
    const std::string text = unparseSpec(doc);
    const SpecDocument again = parseSpec(text);
    EXPECT_TRUE(again == doc) << text;
  }
}

}  // namespace
}  // namespace asmcheck
