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

// Checkers for the sequential-time, abstract-state and both forms of the
// bounded-exploration postulate over a finite algorithm and universe.
//
// "For all states" ranges over every renamed copy of a canonical state that
// fits in the universe. Pair checks are invariant under renaming both states
// of a pair at once, so the first state of a pair is always canonical and
// the second ranges over the whole closure.

#ifndef ASMCHECK_POSTULATES_HPP_
#define ASMCHECK_POSTULATES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "asmcheck/kernel.hpp"
#include "asmcheck/similarity.hpp"
#include "asmcheck/transition.hpp"

namespace asmcheck {

enum class Verdict { kPass, kFail };

std::string toString(Verdict v);

/// Concrete evidence for a failed check. Every populated field can be fed
/// back through the primitive operations to reproduce the failure.
struct Counterexample {
  std::string requirement;
  std::string description;
  std::optional<State> first;
  std::optional<State> second;
  std::optional<Update> update;
  std::optional<Renaming> renaming;
  std::optional<UpdateSet> first_updates;
  std::optional<UpdateSet> second_updates;
};

struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::kPass;
  std::vector<std::string> notes;
  std::optional<Counterexample> witness;

  bool passed() const { return verdict == Verdict::kPass; }
  /// One `key: value` line per fact; the first line is the verdict.
  std::vector<std::string> lines() const;
  std::string toString() const;
};

/// Exit code convention: 0 pass, 1 fail. Precondition errors map to 2.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitPrecondition = 2;
int exitCode(const CheckReport& report);

/// Smallest universe with room for two disjoint copies of every carrier.
std::size_t requiredUniverseSize(const Algorithm& a);
/// Throws HeadroomError / PreconditionError.
void requireHeadroom(const Algorithm& a, const Universe& u);

/// Value vectors and update sets of every member of the closure, computed
/// once and shared by the bounded-exploration checkers.
class ClosureScan {
 public:
  struct Record {
    std::size_t canonical;
    Renaming renaming;
    std::vector<ElementId> values;  // over T, in witness-set order
    std::vector<std::uint16_t> pattern;
    UpdateSet updates;
  };

  ClosureScan(const Algorithm& a, const WitnessSet& terms, const Universe& u);

  const Algorithm& algorithm() const { return *algorithm_; }
  const WitnessSet& terms() const { return terms_; }
  const Universe& universe() const { return universe_; }
  const TermEvaluator& evaluator() const { return evaluator_; }
  const std::vector<Record>& canonical() const { return canonical_; }
  const std::vector<Record>& closure() const { return closure_; }
  State materialize(const Record& r) const;

 private:
  const Algorithm* algorithm_;
  WitnessSet terms_;
  Universe universe_;
  TermEvaluator evaluator_;
  std::vector<Record> canonical_;
  std::vector<Record> closure_;
};

CheckReport checkSequentialTime(const Algorithm& a);
CheckReport checkAbstractState(const Algorithm& a, const Universe& u);

CheckReport checkOldBE(const Algorithm& a, const WitnessSet& terms, const Universe& u);
CheckReport checkOldBE(const ClosureScan& scan);

/// Requirement (i): every update of every canonical state is T-accessible.
CheckReport checkNewBERequirementI(const Algorithm& a, const WitnessSet& terms);
/// Requirement (ii): sigma transports membership of accessible updates.
CheckReport checkNewBERequirementII(const ClosureScan& scan);
CheckReport checkNewBE(const Algorithm& a, const WitnessSet& terms, const Universe& u);
CheckReport checkNewBE(const ClosureScan& scan);

/// If T is a witness then so is every T' containing it, for both forms.
CheckReport witnessMonotonicityCheck(const Algorithm& a, const WitnessSet& smaller,
                                     const WitnessSet& larger, const Universe& u);

}  // namespace asmcheck

#endif  // ASMCHECK_POSTULATES_HPP_
