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

// T-similarity of states and the similarity function between the values of
// a witness set in two states.

#ifndef ASMCHECK_SIMILARITY_HPP_
#define ASMCHECK_SIMILARITY_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asmcheck/kernel.hpp"
#include "asmcheck/transition.hpp"

namespace asmcheck {

/// Finite bijection from Val_X(T) onto Val_Y(T) with Val_X(t) -> Val_Y(t).
class SimilarityFunction {
 public:
  SimilarityFunction() = default;
  /// Throws NotSimilarError if the pairing is not a bijection.
  static SimilarityFunction fromValues(const std::vector<ElementId>& x_values,
                                       const std::vector<ElementId>& y_values);

  std::set<ElementId> domain() const;
  std::set<ElementId> image() const;
  bool inDomain(ElementId e) const { return map_.contains(e); }
  std::optional<ElementId> tryApply(ElementId e) const;
  ElementId operator()(ElementId e) const;  // throws InaccessibleError
  SimilarityFunction inverse() const;
  bool isIdentity() const;
  bool fixesLogicalElements() const;
  const std::map<ElementId, ElementId>& pairs() const { return map_; }
  std::string toString() const;

  bool operator==(const SimilarityFunction&) const = default;

 private:
  std::map<ElementId, ElementId> map_;
};

/// Val_X(s) = Val_X(t) iff Val_Y(s) = Val_Y(t), for all s, t in T.
bool tSimilar(const State& x, const State& y, const WitnessSet& terms);
/// Throws NotSimilarError when x and y are not T-similar.
SimilarityFunction similarityFunction(const State& x, const State& y, const WitnessSet& terms);

/// Where sigma(f_X(args)) and f_Y(sigma(args)) part ways.
struct HomomorphismViolation {
  std::string symbol;
  std::vector<ElementId> args;  // in X
  ElementId mapped_value;       // sigma(f_X(args))
  ElementId value_of_mapped;    // f_Y(sigma(args))
  std::optional<Term> term;     // the witness term, when the check is term-driven

  std::string toString() const;
};

struct IdentityReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<HomomorphismViolation> violation;

  std::string toString() const;
};

/// For every f(t1..tj) in T: sigma(f_X(x1..xj)) = f_Y(sigma(x1)..sigma(xj)).
/// Requires T subterm-closed and x, y T-similar.
IdentityReport checkLemmaIdentity(const State& x, const State& y, const WitnessSet& terms);

/// The same identity for every tuple over the domain of sigma whose f_X
/// image also lies in the domain, whether or not a term of T names it.
IdentityReport checkPartialIsomorphism(const State& x, const State& y, const WitnessSet& terms);

std::set<ElementId> accessibleElements(const State& x, const WitnessSet& terms);
bool isAccessibleUpdate(const State& x, const WitnessSet& terms, const Update& u);
bool isAccessibleUpdate(const std::set<ElementId>& accessible, const Update& u);
/// Componentwise sigma; throws InaccessibleError off the domain.
Update liftAccessibleUpdate(const SimilarityFunction& sigma, const Update& u);

/// Canonical relabelling of a value vector by first occurrence. Two states
/// are T-similar iff their value vectors over T have equal patterns.
std::vector<std::uint16_t> equalityPattern(const std::vector<ElementId>& values);

}  // namespace asmcheck

#endif  // ASMCHECK_SIMILARITY_HPP_
