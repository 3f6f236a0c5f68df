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

// Vocabularies, ground terms, finite first-order structures and term
// evaluation. Everything else in the library is built on these types.

#ifndef ASMCHECK_KERNEL_HPP_
#define ASMCHECK_KERNEL_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "asmcheck/errors.hpp"

namespace asmcheck {

// ---------------------------------------------------------------------------
// Elements

/// An element of a carrier. Ids 0, 1, 2 are the logical elements true, false
/// and undef in every state; nonlogical elements start at 3.
struct ElementId {
  std::uint16_t value = 0;

  constexpr auto operator<=>(const ElementId&) const = default;
};

inline constexpr ElementId kTrue{0};
inline constexpr ElementId kFalse{1};
inline constexpr ElementId kUndef{2};
inline constexpr std::uint16_t kLogicalElementCount = 3;
// Tuples are packed one byte per argument.
inline constexpr std::size_t kMaxElementId = 255;

constexpr bool isLogical(ElementId e) { return e.value < kLogicalElementCount; }

/// The nonlogical element with 1-based ordinal `ordinal` (element "1" is id 3).
constexpr ElementId nonlogical(unsigned ordinal) {
  return ElementId{static_cast<std::uint16_t>(ordinal + kLogicalElementCount - 1)};
}

/// TRUE / FALSE / UNDEF for logical elements, the 1-based ordinal otherwise.
std::string toString(ElementId e);
std::string toString(std::span<const ElementId> tuple);

// ---------------------------------------------------------------------------
// Symbols and vocabularies

enum class SymbolKind { kLogical, kNonlogical };

struct Symbol {
  std::string name;
  int arity = 0;
  SymbolKind kind = SymbolKind::kNonlogical;

  bool isLogical() const { return kind == SymbolKind::kLogical; }
  auto operator<=>(const Symbol&) const = default;
};

/// Positions of the built-in logical symbols inside every vocabulary.
enum LogicalSymbol : std::size_t {
  kTrueSymbol = 0,
  kFalseSymbol,
  kUndefSymbol,
  kEqSymbol,
  kNotSymbol,
  kAndSymbol,
  kOrSymbol,
  kLogicalSymbolCount,
};

inline constexpr int kDefaultMaxArity = 3;
inline constexpr int kHardMaxArity = 4;

bool isLogicalSymbolName(std::string_view name);

/// A finite set of function symbols. The logical symbols true, false, undef,
/// eq, not, and, or always occupy the first positions; nonlogical symbols
/// follow in declaration order.
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<Symbol> nonlogical, int max_arity = kDefaultMaxArity);

  std::span<const Symbol> symbols() const { return symbols_; }
  const Symbol& at(std::size_t index) const { return symbols_.at(index); }
  std::size_t size() const { return symbols_.size(); }
  std::size_t nonlogicalCount() const { return symbols_.size() - kLogicalSymbolCount; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t indexOf(std::string_view name) const;  // throws VocabularyMismatch
  int maxArity() const { return max_arity_; }

  bool operator==(const Vocabulary& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
  int max_arity_;
};

using VocabularyPtr = std::shared_ptr<const Vocabulary>;

VocabularyPtr makeVocabulary(std::vector<Symbol> nonlogical, int max_arity = kDefaultMaxArity);

// ---------------------------------------------------------------------------
// Ground terms

class Term {
 public:
  Term(Symbol symbol, std::vector<Term> args);

  const Symbol& symbol() const { return node_->symbol; }
  std::span<const Term> args() const { return node_->args; }
  bool isConstant() const { return node_->args.empty(); }
  int depth() const { return node_->depth; }
  std::string toString() const;

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

 private:
  struct Node {
    Symbol symbol;
    std::vector<Term> args;
    int depth;
  };
  std::shared_ptr<const Node> node_;
};

/// Builds `name(args...)`, checking the symbol and its arity against `vocab`.
Term makeTerm(const Vocabulary& vocab, std::string_view name, std::vector<Term> args = {});

/// A finite set of ground terms.
class WitnessSet {
 public:
  using const_iterator = std::set<Term>::const_iterator;

  WitnessSet() = default;
  WitnessSet(std::initializer_list<Term> terms) : terms_(terms) {}
  explicit WitnessSet(std::set<Term> terms) : terms_(std::move(terms)) {}

  bool contains(const Term& t) const { return terms_.contains(t); }
  void insert(Term t) { terms_.insert(std::move(t)); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const std::set<Term>& terms() const { return terms_; }

  bool isSubtermClosed() const;
  bool isSubsetOf(const WitnessSet& other) const;
  std::string toString() const;

  bool operator==(const WitnessSet&) const = default;

 private:
  std::set<Term> terms_;
};

/// Least superset of `terms` that is closed under subterms.
WitnessSet subtermClosure(const WitnessSet& terms);

// ---------------------------------------------------------------------------
// Structures

class State;
class Renaming;

/// Finite table for one function symbol: explicit entries plus a default.
/// Entries equal to the default are never stored, so equal functions have
/// equal tables.
class Interpretation {
 public:
  using Key = std::uint32_t;

  explicit Interpretation(int arity, ElementId default_value = kUndef);

  int arity() const { return arity_; }
  ElementId defaultValue() const { return default_; }
  ElementId operator()(std::span<const ElementId> args) const;
  void set(std::span<const ElementId> args, ElementId value);
  std::size_t entryCount() const { return entries_.size(); }
  std::span<const std::pair<Key, ElementId>> rawEntries() const { return entries_; }

  static Key pack(std::span<const ElementId> args);
  static std::vector<ElementId> unpack(Key key, int arity);

  auto operator<=>(const Interpretation&) const = default;

 private:
  friend class State;
  friend State applyRenaming(const State&, const Renaming&);
  int arity_;
  ElementId default_;
  std::vector<std::pair<Key, ElementId>> entries_;  // sorted by key
};

/// A finite first-order structure. The base set always contains the three
/// logical elements; logical symbols have fixed built-in interpretations and
/// only nonlogical symbols carry tables.
class State {
 public:
  State(VocabularyPtr vocab, std::vector<ElementId> nonlogical_elements);

  const VocabularyPtr& vocabulary() const { return vocab_; }
  std::span<const ElementId> baseSet() const { return base_; }
  std::span<const ElementId> nonlogicalElements() const {
    return std::span<const ElementId>(base_).subspan(kLogicalElementCount);
  }
  bool contains(ElementId e) const;

  /// f_X(args). Logical symbols use the built-in semantics.
  ElementId apply(std::size_t symbol, std::span<const ElementId> args) const;
  ElementId apply(std::string_view symbol, std::span<const ElementId> args) const;

  const Interpretation& table(std::size_t symbol) const;
  const Interpretation& table(std::string_view symbol) const;
  void set(std::size_t symbol, std::span<const ElementId> args, ElementId value);
  void set(std::string_view symbol, std::span<const ElementId> args, ElementId value);
  void set(std::string_view symbol, std::initializer_list<ElementId> args, ElementId value) {
    set(symbol, std::span<const ElementId>(args.begin(), args.size()), value);
  }
  /// Makes the function constant with the given value.
  void fill(std::size_t symbol, ElementId value);

  /// Canonical one-line text, e.g. `{1,2} f=1 g(1)=2`.
  std::string serialize() const;

  bool operator==(const State& other) const;

 private:
  friend State applyRenaming(const State&, const Renaming&);
  std::size_t tableIndex(std::size_t symbol) const;

  VocabularyPtr vocab_;
  std::vector<ElementId> base_;  // sorted; logical elements first
  std::vector<Interpretation> tables_;
};

/// Built-in semantics of the connectives and equality.
ElementId applyLogical(std::size_t symbol, std::span<const ElementId> args);

// ---------------------------------------------------------------------------
// Renamings (isomorphisms between carriers)

/// Injective finite map on element ids. Logical elements are always fixed.
class Renaming {
 public:
  using Pair = std::pair<ElementId, ElementId>;

  Renaming() = default;
  explicit Renaming(std::vector<Pair> pairs);

  static Renaming identityOn(std::span<const ElementId> elements);

  bool definedOn(ElementId e) const;
  std::optional<ElementId> tryApply(ElementId e) const;
  ElementId operator()(ElementId e) const;  // throws DomainError
  std::span<const Pair> pairs() const { return pairs_; }

  Renaming inverse() const;
  /// (*this) after `inner`: x -> (*this)(inner(x)).
  Renaming after(const Renaming& inner) const;
  std::string toString() const;

  bool operator==(const Renaming&) const = default;

 private:
  std::vector<Pair> pairs_;  // sorted by source
};

// ---------------------------------------------------------------------------
// Evaluation

ElementId evaluateTerm(const State& x, const Term& t);
std::set<ElementId> evaluateSet(const State& x, const WitnessSet& terms);
bool coincidesOver(const State& x, const State& y, const WitnessSet& terms);
State applyRenaming(const State& x, const Renaming& r);

/// A witness set compiled against a vocabulary: shared subterms are
/// evaluated once and results come back in witness-set order.
class TermEvaluator {
 public:
  TermEvaluator(const Vocabulary& vocab, const WitnessSet& terms);

  std::vector<ElementId> evaluate(const State& x) const;
  const std::vector<Term>& terms() const { return terms_; }

 private:
  struct Node {
    std::size_t symbol;
    std::vector<std::size_t> children;
  };
  std::vector<Term> terms_;
  std::vector<Node> nodes_;  // children before parents
  std::vector<std::size_t> roots_;
};

void requireSameVocabulary(const State& x, const State& y);

}  // namespace asmcheck

#endif  // ASMCHECK_KERNEL_HPP_
