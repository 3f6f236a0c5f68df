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

// Text format for algorithms and witness sets.
//
//   # comment
//   vocabulary: a/0 b/0 f/1
//   state X:
//     elements 1 2 3
//     a = 1
//     f(1) = 2
//   transition:
//     f(a) := b                 # rule program, or explicit pairs:
//     state X -> Y
//   initial: X
//   witness T1: a b f(a)
//
// Sections may appear in any order except that `vocabulary:` comes first.
// Element labels are bound to ids in order of first appearance in the
// document, so a label denotes the same element in every state. TRUE,
// FALSE and UNDEF name the logical elements. `f(*) = e` sets a default.

#ifndef ASMCHECK_SPEC_FORMAT_HPP_
#define ASMCHECK_SPEC_FORMAT_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asmcheck/errors.hpp"
#include "asmcheck/kernel.hpp"
#include "asmcheck/transition.hpp"

namespace asmcheck {

class SpecError : public Error {
 public:
  SpecError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct SpecDocument {
  Algorithm algorithm;
  std::vector<std::pair<std::string, WitnessSet>> witnesses;
  /// labels[i] names element nonlogical(i + 1).
  std::vector<std::string> labels;

  const WitnessSet& witness(std::string_view name) const;  // throws PreconditionError
  bool operator==(const SpecDocument& other) const;
};

SpecDocument parseSpec(std::string_view text);
SpecDocument loadSpec(const std::string& path);
/// Canonical text; parseSpec(unparseSpec(d)) == d.
std::string unparseSpec(const SpecDocument& doc);

/// A single ground term in prefix form, e.g. `f(g(a),b)`.
Term parseTerm(const Vocabulary& vocab, std::string_view text);

}  // namespace asmcheck

#endif  // ASMCHECK_SPEC_FORMAT_HPP_
