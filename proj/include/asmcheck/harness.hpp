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

// Equivalence of the two bounded-exploration postulates, checked instance
// by instance: both verdicts are computed and, when both pass, the
// transport argument (disjoint copy, then value replacement) is replayed
// on every T-similar pair and accessible update.

#ifndef ASMCHECK_HARNESS_HPP_
#define ASMCHECK_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "asmcheck/postulates.hpp"

namespace asmcheck {

/// Replaces Val_X(t) by Val_Y(t) for every t in T. Requires x, y T-similar
/// with disjoint nonlogical value sets, and sigma fixing logical elements.
/// Returns X' together with xi, which is sigma on Val_X(T) and the identity
/// elsewhere. Throws CaseHypothesisError or InvalidRenaming.
std::pair<State, Renaming> constructCase1State(const State& x, const State& y,
                                               const WitnessSet& terms);

/// An isomorphic copy of x whose nonlogical carrier avoids y's carrier.
/// Elements already outside y's carrier stay put; the others move to the
/// smallest unused ids. Throws HeadroomError.
std::pair<State, Renaming> constructDisjointCopy(const State& x, const State& y,
                                                 const WitnessSet& terms, const Universe& u);

struct EquivalenceReport {
  CheckReport old_be;
  CheckReport new_be;
  bool agree = false;
  bool replayed = false;
  std::size_t replay_pairs = 0;
  std::size_t replay_updates = 0;
  std::size_t case1_routes = 0;
  std::size_t case2_routes = 0;
  std::size_t inapplicable = 0;  // sigma moves a logical element
  std::optional<std::string> replay_failure;

  Verdict verdict() const {
    return agree && !replay_failure ? Verdict::kPass : Verdict::kFail;
  }
  CheckReport summary() const;
};

EquivalenceReport verifyEquivalence(const Algorithm& a, const WitnessSet& terms, const Universe& u);

// ---------------------------------------------------------------------------
// Generators

struct GeneratorConfig {
  int max_canonical_states = 3;
  int max_carrier_size = 4;
  int max_nonlogical_symbols = 3;
  int max_arity = 2;
  int max_term_depth = 2;
  int instances = 100;
  std::uint64_t seed = 1;

  std::size_t universeSize() const { return 2 * static_cast<std::size_t>(max_carrier_size) + 3; }
  void validate() const;  // throws PreconditionError
  std::string toString() const;
};

/// `default`, or comma-separated `key=value` with keys states, carrier,
/// symbols, arity, depth, instances, seed.
GeneratorConfig parseGeneratorConfig(const std::string& text);

struct SuiteInstance {
  std::size_t id;
  std::string kind;  // rule, lasso or orbit
  Algorithm algorithm;
  std::vector<WitnessSet> witnesses;  // subterm-closed; the first is {}, the second is full
};

std::vector<SuiteInstance> generateAlgorithmSuite(const GeneratorConfig& cfg);

/// Every ground term of depth at most `depth`.
WitnessSet allGroundTerms(const Vocabulary& vocab, int depth);

struct SimilarPair {
  State x;
  State y;
  WitnessSet terms;  // subterm-closed; x and y are T-similar
};

/// T-similar pairs: y is a relocated and lightly edited copy of x, or an
/// unrelated random state, kept only when similar.
std::vector<SimilarPair> generateSimilarPairs(const GeneratorConfig& cfg, std::size_t count);

struct SuiteLine {
  std::uint64_t seed;
  std::size_t instance;
  std::size_t witness;
  Verdict old_be;
  Verdict new_be;
  bool agree;
  std::string toString() const;
};

struct SuiteResult {
  std::vector<SuiteLine> lines;
  std::size_t instances = 0;
  std::size_t agreeing_instances = 0;
  std::size_t replay_failures = 0;
  std::size_t replay_pairs = 0;
  std::size_t case1_routes = 0;
  std::size_t case2_routes = 0;
  std::size_t inapplicable = 0;
  bool ok() const { return agreeing_instances == instances && replay_failures == 0; }
};

/// verifyEquivalence on every (instance, witness) of the suite. An instance
/// agrees when all of its witnesses do.
SuiteResult runEquivalenceSuite(const GeneratorConfig& cfg);

}  // namespace asmcheck

#endif  // ASMCHECK_HARNESS_HPP_
