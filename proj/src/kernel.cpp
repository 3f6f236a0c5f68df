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

#include "asmcheck/kernel.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace asmcheck {

namespace {

const std::array<Symbol, kLogicalSymbolCount> kLogicalSymbols = {{
    {"true", 0, SymbolKind::kLogical},
    {"false", 0, SymbolKind::kLogical},
    {"undef", 0, SymbolKind::kLogical},
    {"eq", 2, SymbolKind::kLogical},
    {"not", 1, SymbolKind::kLogical},
    {"and", 2, SymbolKind::kLogical},
    {"or", 2, SymbolKind::kLogical},
}};

bool isBoolean(ElementId e) { return e == kTrue || e == kFalse; }

ElementId fromBool(bool b) { return b ? kTrue : kFalse; }

}  // namespace

std::string toString(ElementId e) {
  switch (e.value) {
    case 0:
      return "TRUE";
    case 1:
      return "FALSE";
    case 2:
      return "UNDEF";
    default:
      return std::to_string(e.value - kLogicalElementCount + 1);
  }
}

std::string toString(std::span<const ElementId> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += toString(tuple[i]);
  }
  return out + ")";
}

bool isLogicalSymbolName(std::string_view name) {
  return std::any_of(kLogicalSymbols.begin(), kLogicalSymbols.end(),
                     [&](const Symbol& s) { return s.name == name; });
}

// ---------------------------------------------------------------------------
// Vocabulary

Vocabulary::Vocabulary(std::vector<Symbol> nonlogical, int max_arity) : max_arity_(max_arity) {
  if (max_arity < 0 || max_arity > kHardMaxArity) {
    throw VocabularyMismatch("arity limit must lie in [0, " + std::to_string(kHardMaxArity) + "]");
  }
  symbols_.assign(kLogicalSymbols.begin(), kLogicalSymbols.end());
  for (auto& s : nonlogical) {
    if (isLogicalSymbolName(s.name)) {
      throw VocabularyMismatch("'" + s.name + "' is a logical symbol");
    }
    if (s.arity < 0 || s.arity > max_arity) {
      throw VocabularyMismatch("symbol '" + s.name + "' has arity " + std::to_string(s.arity) +
                               " outside [0, " + std::to_string(max_arity) + "]");
    }
    s.kind = SymbolKind::kNonlogical;
    symbols_.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!index_.emplace(symbols_[i].name, i).second) {
      throw VocabularyMismatch("duplicate symbol '" + symbols_[i].name + "'");
    }
  }
}

std::optional<std::size_t> Vocabulary::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Vocabulary::indexOf(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw VocabularyMismatch("unknown symbol '" + std::string(name) + "'");
}

VocabularyPtr makeVocabulary(std::vector<Symbol> nonlogical, int max_arity) {
  return std::make_shared<const Vocabulary>(std::move(nonlogical), max_arity);
}

// ---------------------------------------------------------------------------
// Terms

Term::Term(Symbol symbol, std::vector<Term> args) {
  if (static_cast<int>(args.size()) != symbol.arity) {
    throw VocabularyMismatch("symbol '" + symbol.name + "' expects " +
                             std::to_string(symbol.arity) + " arguments, got " +
                             std::to_string(args.size()));
  }
  int depth = 0;
  for (const auto& a : args) depth = std::max(depth, a.depth());
  node_ = std::make_shared<const Node>(Node{std::move(symbol), std::move(args), depth + 1});
}

std::string Term::toString() const {
  std::string out = symbol().name;
  if (!isConstant()) {
    out += "(";
    for (std::size_t i = 0; i < args().size(); ++i) {
      if (i) out += ",";
      out += args()[i].toString();
    }
    out += ")";
  }
  return out;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.depth() <=> b.depth(); c != 0) return c;
  if (auto c = a.symbol().name <=> b.symbol().name; c != 0) return c;
  if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Term makeTerm(const Vocabulary& vocab, std::string_view name, std::vector<Term> args) {
  return Term(vocab.at(vocab.indexOf(name)), std::move(args));
}

// ---------------------------------------------------------------------------
// Witness sets

bool WitnessSet::isSubtermClosed() const {
  for (const auto& t : terms_) {
    for (const auto& a : t.args()) {
      if (!terms_.contains(a)) return false;
    }
  }
  return true;
}

bool WitnessSet::isSubsetOf(const WitnessSet& other) const {
  return std::includes(other.terms_.begin(), other.terms_.end(), terms_.begin(), terms_.end());
}

std::string WitnessSet::toString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out += ", ";
    first = false;
    out += t.toString();
  }
  return out + "}";
}

WitnessSet subtermClosure(const WitnessSet& terms) {
  std::set<Term> closed;
  std::vector<Term> pending(terms.begin(), terms.end());
  while (!pending.empty()) {
    Term t = std::move(pending.back());
    pending.pop_back();
    for (const auto& a : t.args()) pending.push_back(a);
    closed.insert(std::move(t));
  }
  return WitnessSet(std::move(closed));
}

// ---------------------------------------------------------------------------
// Interpretations

Interpretation::Interpretation(int arity, ElementId default_value)
    : arity_(arity), default_(default_value) {}

Interpretation::Key Interpretation::pack(std::span<const ElementId> args) {
  Key key = 0;
  for (ElementId e : args) key = (key << 8) | e.value;
  return key;
}

std::vector<ElementId> Interpretation::unpack(Key key, int arity) {
  std::vector<ElementId> args(arity);
  for (int i = arity - 1; i >= 0; --i) {
    args[i] = ElementId{static_cast<std::uint16_t>(key & 0xff)};
    key >>= 8;
  }
  return args;
}

ElementId Interpretation::operator()(std::span<const ElementId> args) const {
  const Key key = pack(args);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const auto& entry, Key k) { return entry.first < k; });
  if (it != entries_.end() && it->first == key) return it->second;
  return default_;
}

void Interpretation::set(std::span<const ElementId> args, ElementId value) {
  const Key key = pack(args);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const auto& entry, Key k) { return entry.first < k; });
  const bool present = it != entries_.end() && it->first == key;
  if (value == default_) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    entries_.insert(it, {key, value});
  }
}

// ---------------------------------------------------------------------------
// States

ElementId applyLogical(std::size_t symbol, std::span<const ElementId> args) {
  switch (symbol) {
    case kTrueSymbol:
      return kTrue;
    case kFalseSymbol:
      return kFalse;
    case kUndefSymbol:
      return kUndef;
    case kEqSymbol:
      return fromBool(args[0] == args[1]);
    case kNotSymbol:
      if (!isBoolean(args[0])) return kUndef;
      return fromBool(args[0] == kFalse);
    case kAndSymbol:
      if (!isBoolean(args[0]) || !isBoolean(args[1])) return kUndef;
      return fromBool(args[0] == kTrue && args[1] == kTrue);
    case kOrSymbol:
      if (!isBoolean(args[0]) || !isBoolean(args[1])) return kUndef;
      return fromBool(args[0] == kTrue || args[1] == kTrue);
    default:
      throw VocabularyMismatch("not a logical symbol index: " + std::to_string(symbol));
  }
}

State::State(VocabularyPtr vocab, std::vector<ElementId> nonlogical_elements)
    : vocab_(std::move(vocab)) {
  if (!vocab_) throw InvalidState("state without vocabulary");
  std::sort(nonlogical_elements.begin(), nonlogical_elements.end());
  if (std::adjacent_find(nonlogical_elements.begin(), nonlogical_elements.end()) !=
      nonlogical_elements.end()) {
    throw InvalidState("duplicate element in base set");
  }
  base_ = {kTrue, kFalse, kUndef};
  for (ElementId e : nonlogical_elements) {
    if (isLogical(e)) throw InvalidState("logical element listed as nonlogical");
    if (e.value > kMaxElementId) {
      throw InvalidState("element id " + std::to_string(e.value) + " exceeds the id limit");
    }
    base_.push_back(e);
  }
  tables_.reserve(vocab_->nonlogicalCount());
  for (std::size_t i = kLogicalSymbolCount; i < vocab_->size(); ++i) {
    tables_.emplace_back(vocab_->at(i).arity);
  }
}

bool State::contains(ElementId e) const {
  return std::binary_search(base_.begin(), base_.end(), e);
}

std::size_t State::tableIndex(std::size_t symbol) const {
  if (symbol < kLogicalSymbolCount) {
    throw VocabularyMismatch("logical symbol '" + vocab_->at(symbol).name +
                             "' has a built-in interpretation");
  }
  if (symbol >= vocab_->size()) throw VocabularyMismatch("symbol index out of range");
  return symbol - kLogicalSymbolCount;
}

ElementId State::apply(std::size_t symbol, std::span<const ElementId> args) const {
  if (symbol < kLogicalSymbolCount) return applyLogical(symbol, args);
  return tables_[tableIndex(symbol)](args);
}

ElementId State::apply(std::string_view symbol, std::span<const ElementId> args) const {
  return apply(vocab_->indexOf(symbol), args);
}

const Interpretation& State::table(std::size_t symbol) const {
  return tables_[tableIndex(symbol)];
}

const Interpretation& State::table(std::string_view symbol) const {
  return table(vocab_->indexOf(symbol));
}

void State::set(std::size_t symbol, std::span<const ElementId> args, ElementId value) {
  auto& table = tables_[tableIndex(symbol)];
  if (static_cast<int>(args.size()) != table.arity()) {
    throw VocabularyMismatch("symbol '" + vocab_->at(symbol).name + "' expects " +
                             std::to_string(table.arity()) + " arguments");
  }
  for (ElementId a : args) {
    if (!contains(a)) throw InvalidState("argument " + toString(a) + " is outside the base set");
  }
  if (!contains(value)) throw InvalidState("value " + toString(value) + " is outside the base set");
  table.set(args, value);
}

void State::set(std::string_view symbol, std::span<const ElementId> args, ElementId value) {
  set(vocab_->indexOf(symbol), args, value);
}

void State::fill(std::size_t symbol, ElementId value) {
  auto& table = tables_[tableIndex(symbol)];
  if (!contains(value)) throw InvalidState("value " + toString(value) + " is outside the base set");
  // The stored default stays undef, so every tuple gets an explicit entry.
  const int arity = table.arity();
  Interpretation filled(arity);
  std::vector<ElementId> tuple(arity, kTrue);
  const std::size_t n = base_.size();
  std::size_t total = 1;
  for (int i = 0; i < arity; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = arity - 1; i >= 0; --i) {
      tuple[i] = base_[c % n];
      c /= n;
    }
    filled.set(tuple, value);
  }
  table = std::move(filled);
}

std::string State::serialize() const {
  std::ostringstream out;
  out << "{";
  auto elems = nonlogicalElements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out << ",";
    out << toString(elems[i]);
  }
  out << "}";
  for (std::size_t s = kLogicalSymbolCount; s < vocab_->size(); ++s) {
    const auto& sym = vocab_->at(s);
    const auto& table = tables_[s - kLogicalSymbolCount];
    if (table.defaultValue() != kUndef) {
      out << " " << sym.name << (sym.arity ? "(*)" : "") << "=" << toString(table.defaultValue());
    }
    for (const auto& [key, value] : table.rawEntries()) {
      out << " " << sym.name;
      if (sym.arity) out << toString(Interpretation::unpack(key, sym.arity));
      out << "=" << toString(value);
    }
  }
  return out.str();
}

bool State::operator==(const State& other) const {
  return (vocab_ == other.vocab_ || *vocab_ == *other.vocab_) && base_ == other.base_ &&
         tables_ == other.tables_;
}

void requireSameVocabulary(const State& x, const State& y) {
  if (x.vocabulary() != y.vocabulary() && !(*x.vocabulary() == *y.vocabulary())) {
    throw VocabularyMismatch("states are over different vocabularies");
  }
}

// ---------------------------------------------------------------------------
// Renamings

Renaming::Renaming(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  std::set<ElementId> images;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& [from, to] = pairs_[i];
    if (i > 0 && pairs_[i - 1].first == from) {
      throw InvalidRenaming("element " + asmcheck::toString(from) + " has two images");
    }
    if (isLogical(from) != isLogical(to) || (isLogical(from) && from != to)) {
      throw InvalidRenaming("renaming must fix logical elements (" + asmcheck::toString(from) +
                            " -> " + asmcheck::toString(to) + ")");
    }
    if (!images.insert(to).second) {
      throw InvalidRenaming("renaming is not injective at " + asmcheck::toString(to));
    }
  }
}

Renaming Renaming::identityOn(std::span<const ElementId> elements) {
  std::vector<Pair> pairs;
  for (ElementId e : elements) {
    if (!isLogical(e)) pairs.emplace_back(e, e);
  }
  return Renaming(std::move(pairs));
}

std::optional<ElementId> Renaming::tryApply(ElementId e) const {
  if (isLogical(e)) return e;
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), e,
                             [](const Pair& p, ElementId k) { return p.first < k; });
  if (it != pairs_.end() && it->first == e) return it->second;
  return std::nullopt;
}

bool Renaming::definedOn(ElementId e) const { return tryApply(e).has_value(); }

ElementId Renaming::operator()(ElementId e) const {
  if (auto v = tryApply(e)) return *v;
  throw DomainError("element " + asmcheck::toString(e) + " is outside the renaming's domain");
}

Renaming Renaming::inverse() const {
  std::vector<Pair> inv;
  inv.reserve(pairs_.size());
  for (const auto& [a, b] : pairs_) inv.emplace_back(b, a);
  return Renaming(std::move(inv));
}

Renaming Renaming::after(const Renaming& inner) const {
  std::vector<Pair> composed;
  composed.reserve(inner.pairs_.size());
  for (const auto& [a, b] : inner.pairs_) composed.emplace_back(a, (*this)(b));
  return Renaming(std::move(composed));
}

std::string Renaming::toString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out += ", ";
    out += asmcheck::toString(pairs_[i].first) + "->" + asmcheck::toString(pairs_[i].second);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Evaluation

ElementId evaluateTerm(const State& x, const Term& t) {
  const auto& vocab = *x.vocabulary();
  const std::size_t symbol = vocab.indexOf(t.symbol().name);
  if (vocab.at(symbol).arity != t.symbol().arity) {
    throw VocabularyMismatch("arity of '" + t.symbol().name + "' differs from the vocabulary");
  }
  std::array<ElementId, kHardMaxArity> args{};
  for (std::size_t i = 0; i < t.args().size(); ++i) args[i] = evaluateTerm(x, t.args()[i]);
  return x.apply(symbol, std::span<const ElementId>(args.data(), t.args().size()));
}

std::set<ElementId> evaluateSet(const State& x, const WitnessSet& terms) {
  std::set<ElementId> out;
  for (const auto& t : terms) out.insert(evaluateTerm(x, t));
  return out;
}

bool coincidesOver(const State& x, const State& y, const WitnessSet& terms) {
  requireSameVocabulary(x, y);
  return std::all_of(terms.begin(), terms.end(),
                     [&](const Term& t) { return evaluateTerm(x, t) == evaluateTerm(y, t); });
}

State applyRenaming(const State& x, const Renaming& r) {
  std::vector<ElementId> image;
  image.reserve(x.nonlogicalElements().size());
  for (ElementId e : x.nonlogicalElements()) {
    auto v = r.tryApply(e);
    if (!v) throw InvalidRenaming("renaming is undefined on element " + toString(e));
    image.push_back(*v);
  }
  State out(x.vocabulary(), std::move(image));
  for (std::size_t i = 0; i < x.tables_.size(); ++i) {
    const auto& src = x.tables_[i];
    auto& dst = out.tables_[i];
    dst.default_ = r(src.default_);
    dst.entries_.reserve(src.entries_.size());
    for (const auto& [key, value] : src.entries_) {
      auto args = Interpretation::unpack(key, src.arity_);
      for (auto& a : args) a = r(a);
      dst.entries_.emplace_back(Interpretation::pack(args), r(value));
    }
    std::sort(dst.entries_.begin(), dst.entries_.end());
  }
  return out;
}

TermEvaluator::TermEvaluator(const Vocabulary& vocab, const WitnessSet& terms)
    : terms_(terms.begin(), terms.end()) {
  std::map<Term, std::size_t> ids;
  // Post-order insertion keeps children ahead of parents.
  auto intern = [&](auto&& self, const Term& t) -> std::size_t {
    if (auto it = ids.find(t); it != ids.end()) return it->second;
    Node node{vocab.indexOf(t.symbol().name), {}};
    if (vocab.at(node.symbol).arity != t.symbol().arity) {
      throw VocabularyMismatch("arity of '" + t.symbol().name + "' differs from the vocabulary");
    }
    for (const auto& a : t.args()) node.children.push_back(self(self, a));
    nodes_.push_back(std::move(node));
    ids.emplace(t, nodes_.size() - 1);
    return nodes_.size() - 1;
  };
  for (const auto& t : terms_) roots_.push_back(intern(intern, t));
}

std::vector<ElementId> TermEvaluator::evaluate(const State& x) const {
  std::vector<ElementId> values(nodes_.size());
  std::array<ElementId, kHardMaxArity> args{};
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& node = nodes_[i];
    for (std::size_t k = 0; k < node.children.size(); ++k) args[k] = values[node.children[k]];
    values[i] = x.apply(node.symbol, std::span<const ElementId>(args.data(), node.children.size()));
  }
  std::vector<ElementId> out;
  out.reserve(roots_.size());
  for (std::size_t r : roots_) out.push_back(values[r]);
  return out;
}

}  // namespace asmcheck
