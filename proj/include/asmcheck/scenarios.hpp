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

// Built-in scenarios: the partial-isomorphism counterexample and the
// two-element flip algorithm. Each scenario is a list of assertions over
// fixed data and passes only if all of them hold.

#ifndef ASMCHECK_SCENARIOS_HPP_
#define ASMCHECK_SCENARIOS_HPP_

#include <string>
#include <vector>

#include "asmcheck/postulates.hpp"

namespace asmcheck {

struct Assertion {
  bool ok;
  std::string text;
};

struct ScenarioReport {
  std::string name;
  std::vector<Assertion> assertions;

  bool passed() const;
  void expect(bool ok, std::string text) { assertions.push_back({ok, std::move(text)}); }
  /// `verdict: ...`, `scenario: ...`, then `ok: ...` or `FAILED: ...` per assertion.
  std::vector<std::string> lines() const;
};

// ---------------------------------------------------------------------------
// Partial isomorphism

enum class RemarkVariant {
  kOriginal,   // T = {a, b}: similar, but not a partial isomorphism
  kWitnessA,   // T = {a}: the identity holds vacuously
  kSameState,  // Y = X: sigma is the identity
};

struct RemarkData {
  VocabularyPtr vocab;
  State x;
  State y;
  WitnessSet terms;
};

/// Elements 1, 2, 3 (ids 3, 4, 5); f cyclic 1->2->3->1; a = 1; b_X = 2, b_Y = 3.
RemarkData remarkData(RemarkVariant variant = RemarkVariant::kOriginal);
ScenarioReport runScenarioRemark(RemarkVariant variant = RemarkVariant::kOriginal);

// ---------------------------------------------------------------------------
// Flip algorithm

/// One nullary symbol f over two nonlogical elements a, b; f = a steps to
/// f = b. With `identity`, every state is its own successor.
Algorithm exampleAlgorithm(bool identity = false);
/// Every subset of {true, false, undef, f}.
std::vector<WitnessSet> exampleWitnessCandidates(const Vocabulary& vocab);
/// Throws HeadroomError when u is below 7.
ScenarioReport runScenarioExample(const Universe& u, bool identity = false);

}  // namespace asmcheck

#endif  // ASMCHECK_SCENARIOS_HPP_
