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

#include "asmcheck/spec_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace asmcheck {

namespace {

enum class TokenKind { kWord, kPunct, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;

  bool is(std::string_view s) const { return kind != TokenKind::kEnd && text == s; }
};

bool isWordChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenizeLine(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = i + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (isWordChar(c)) {
      std::size_t j = i;
      while (j < line.size() && isWordChar(line[j])) ++j;
      out.push_back({TokenKind::kWord, std::string(line.substr(i, j - i)), line_no, col});
      i = j;
      continue;
    }
    if (line.substr(i, 2) == ":=" || line.substr(i, 2) == "->") {
      out.push_back({TokenKind::kPunct, std::string(line.substr(i, 2)), line_no, col});
      i += 2;
      continue;
    }
    if (std::string_view("(),=/*:").find(c) != std::string_view::npos) {
      out.push_back({TokenKind::kPunct, std::string(1, c), line_no, col});
      ++i;
      continue;
    }
    throw SpecError(line_no, col, std::string("unexpected character '") + c + "'");
  }
  return out;
}

const std::set<std::string, std::less<>> kKeywords = {"par",   "endpar", "if",    "then",
                                                     "else",  "endif",  "state", "elements"};

bool isIdentifier(std::string_view s) {
  return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_');
}

struct Section {
  std::string kind;
  std::string name;
  Token header;
  std::vector<std::vector<Token>> lines;
};

/// Reads tokens across the lines of one section.
class Cursor {
 public:
  Cursor(const Section& section) : header_(section.header) {
    for (const auto& l : section.lines) tokens_.insert(tokens_.end(), l.begin(), l.end());
  }
  explicit Cursor(std::vector<Token> tokens, Token anchor)
      : header_(std::move(anchor)), tokens_(std::move(tokens)) {}

  bool atEnd() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return atEnd() ? endToken() : tokens_[pos_]; }
  Token next() {
    if (atEnd()) throw error(peek(), "unexpected end of section");
    return tokens_[pos_++];
  }
  bool accept(std::string_view s) {
    if (peek().is(s)) {
      ++pos_;
      return true;
    }
    return false;
  }
  Token expect(std::string_view s) {
    if (!peek().is(s)) {
      throw error(peek(), "expected '" + std::string(s) + "'" + found(peek()));
    }
    return next();
  }
  Token word(const char* what) {
    if (peek().kind != TokenKind::kWord) throw error(peek(), std::string("expected ") + what + found(peek()));
    return next();
  }

  SpecError error(const Token& at, const std::string& message) const {
    return SpecError(at.line, at.column, message);
  }

 private:
  static std::string found(const Token& t) {
    return t.kind == TokenKind::kEnd ? ", found end of section" : ", found '" + t.text + "'";
  }
  const Token& endToken() const {
    static thread_local Token end;
    const Token& last = tokens_.empty() ? header_ : tokens_.back();
    end = {TokenKind::kEnd, "", last.line, last.column + last.text.size()};
    return end;
  }

  Token header_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Term parseTermAt(Cursor& in, const Vocabulary& vocab) {
  const Token name = in.word("a term");
  const auto index = vocab.find(name.text);
  if (!index) throw in.error(name, "unknown symbol '" + name.text + "'");
  const Symbol& sym = vocab.at(*index);
  std::vector<Term> args;
  if (in.accept("(")) {
    if (!in.peek().is(")")) {
      args.push_back(parseTermAt(in, vocab));
      while (in.accept(",")) args.push_back(parseTermAt(in, vocab));
    }
    in.expect(")");
  }
  if (static_cast<int>(args.size()) != sym.arity) {
    throw in.error(name, "arity mismatch: '" + sym.name + "' takes " + std::to_string(sym.arity) +
                             " arguments, got " + std::to_string(args.size()));
  }
  return Term(sym, std::move(args));
}

bool startsRuleEnd(const Token& t) {
  return t.is("endpar") || t.is("else") || t.is("endif") || t.kind == TokenKind::kEnd;
}

Rule parseRule(Cursor& in, const Vocabulary& vocab);

std::vector<Rule> parseRuleSequence(Cursor& in, const Vocabulary& vocab) {
  std::vector<Rule> rules;
  while (!startsRuleEnd(in.peek())) rules.push_back(parseRule(in, vocab));
  return rules;
}

Rule asBranch(std::vector<Rule> rules) {
  if (rules.size() == 1) return std::move(rules.front());
  return Rule::parallel(std::move(rules));
}

Rule parseRule(Cursor& in, const Vocabulary& vocab) {
  const Token first = in.peek();
  if (in.accept("par")) {
    auto rules = parseRuleSequence(in, vocab);
    in.expect("endpar");
    return Rule::parallel(std::move(rules));
  }
  if (in.accept("if")) {
    Term guard = parseTermAt(in, vocab);
    in.expect("then");
    Rule then_rule = asBranch(parseRuleSequence(in, vocab));
    Rule else_rule = Rule::skip();
    if (in.accept("else")) else_rule = asBranch(parseRuleSequence(in, vocab));
    in.expect("endif");
    return Rule::conditional(std::move(guard), std::move(then_rule), std::move(else_rule));
  }
  if (first.kind != TokenKind::kWord || kKeywords.contains(first.text)) {
    throw in.error(first, "expected a rule, found '" + first.text + "'");
  }
  Term lhs = parseTermAt(in, vocab);
  if (lhs.symbol().isLogical()) throw in.error(first, "assignment to logical symbol '" + lhs.symbol().name + "'");
  in.expect(":=");
  Term rhs = parseTermAt(in, vocab);
  std::vector<Term> args(lhs.args().begin(), lhs.args().end());
  return Rule::assign(vocab, lhs.symbol().name, std::move(args), std::move(rhs));
}

struct Labels {
  std::map<std::string, ElementId, std::less<>> ids;
  std::vector<std::string> names;

  ElementId resolve(const Token& t) {
    if (t.text == "TRUE") return kTrue;
    if (t.text == "FALSE") return kFalse;
    if (t.text == "UNDEF") return kUndef;
    if (auto it = ids.find(t.text); it != ids.end()) return it->second;
    if (names.size() + kLogicalElementCount > kMaxElementId) {
      throw SpecError(t.line, t.column, "too many elements");
    }
    const ElementId id = nonlogical(static_cast<unsigned>(names.size() + 1));
    ids.emplace(t.text, id);
    names.push_back(t.text);
    return id;
  }
};

struct StateEntry {
  Token at;
  std::size_t symbol;
  bool is_default;
  std::vector<ElementId> args;
  ElementId value;
};

State parseState(const Section& section, const VocabularyPtr& vocab, Labels& labels) {
  std::set<ElementId> carrier;
  std::vector<StateEntry> entries;
  auto note = [&](ElementId e) {
    if (!isLogical(e)) carrier.insert(e);
    return e;
  };
  for (const auto& line : section.lines) {
    Cursor in(line, section.header);
    if (in.accept("elements")) {
      while (!in.atEnd()) note(labels.resolve(in.word("an element label")));
      continue;
    }
    const Token name = in.word("a symbol");
    const auto index = vocab->find(name.text);
    if (!index) throw in.error(name, "unknown symbol '" + name.text + "'");
    const Symbol& sym = vocab->at(*index);
    if (sym.isLogical()) throw in.error(name, "logical symbol '" + sym.name + "' has a fixed interpretation");
    StateEntry entry{name, *index, false, {}, kUndef};
    if (in.accept("(")) {
      if (in.accept("*")) {
        entry.is_default = true;
      } else if (!in.peek().is(")")) {
        entry.args.push_back(note(labels.resolve(in.word("an element label"))));
        while (in.accept(",")) entry.args.push_back(note(labels.resolve(in.word("an element label"))));
      }
      in.expect(")");
    }
    if (!entry.is_default && static_cast<int>(entry.args.size()) != sym.arity) {
      throw in.error(name, "arity mismatch: '" + sym.name + "' takes " + std::to_string(sym.arity) +
                               " arguments, got " + std::to_string(entry.args.size()));
    }
    in.expect("=");
    entry.value = note(labels.resolve(in.word("an element label")));
    if (!in.atEnd()) throw in.error(in.peek(), "unexpected '" + in.peek().text + "' after entry");
    entries.push_back(std::move(entry));
  }
  State state(vocab, std::vector<ElementId>(carrier.begin(), carrier.end()));
  for (const auto& e : entries) {
    if (e.is_default) state.fill(e.symbol, e.value);
  }
  std::map<std::pair<std::size_t, std::vector<ElementId>>, ElementId> seen;
  for (const auto& e : entries) {
    if (e.is_default) continue;
    auto [it, fresh] = seen.emplace(std::make_pair(e.symbol, e.args), e.value);
    if (!fresh && it->second != e.value) {
      throw SpecError(e.at.line, e.at.column, "conflicting entries for " + vocab->at(e.symbol).name + toString(e.args));
    }
    state.set(e.symbol, e.args, e.value);
  }
  return state;
}

std::vector<Section> splitSections(std::string_view text) {
  std::vector<Section> sections;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    auto tokens = tokenizeLine(line, line_no);
    start = end + 1;
    if (tokens.empty()) continue;

    const Token& head = tokens[0];
    std::size_t body_from = 0;
    if (head.kind == TokenKind::kWord) {
      if ((head.text == "vocabulary" || head.text == "transition" || head.text == "initial") &&
          tokens.size() >= 2 && tokens[1].is(":")) {
        sections.push_back({head.text, "", head, {}});
        body_from = 2;
      } else if ((head.text == "state" || head.text == "witness") && tokens.size() >= 3 &&
                 tokens[1].kind == TokenKind::kWord && tokens[2].is(":")) {
        sections.push_back({head.text, tokens[1].text, head, {}});
        body_from = 3;
      }
    }
    if (sections.empty()) throw SpecError(head.line, head.column, "content before the first section");
    if (body_from < tokens.size()) {
      sections.back().lines.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(body_from), tokens.end());
    }
    if (end == text.size()) break;
  }
  return sections;
}

VocabularyPtr parseVocabulary(const Section& section) {
  Cursor in(section);
  std::vector<Symbol> symbols;
  std::set<std::string> names;
  while (!in.atEnd()) {
    const Token name = in.word("a symbol name");
    if (!isIdentifier(name.text) || kKeywords.contains(name.text)) {
      throw in.error(name, "'" + name.text + "' cannot be a symbol name");
    }
    if (isLogicalSymbolName(name.text)) throw in.error(name, "'" + name.text + "' is a logical symbol");
    if (!names.insert(name.text).second) throw in.error(name, "duplicate symbol '" + name.text + "'");
    in.expect("/");
    const Token arity = in.word("an arity");
    int value = -1;
    try {
      value = std::stoi(arity.text);
    } catch (const std::exception&) {
    }
    if (value < 0 || value > kDefaultMaxArity) {
      throw in.error(arity, "arity must be an integer in [0, " + std::to_string(kDefaultMaxArity) + "]");
    }
    symbols.push_back({name.text, value, SymbolKind::kNonlogical});
    in.accept(",");
  }
  return makeVocabulary(std::move(symbols));
}

}  // namespace

const WitnessSet& SpecDocument::witness(std::string_view name) const {
  for (const auto& [n, w] : witnesses) {
    if (n == name) return w;
  }
  throw PreconditionError("no witness set named '" + std::string(name) + "'");
}

bool SpecDocument::operator==(const SpecDocument& other) const {
  const Algorithm& a = algorithm;
  const Algorithm& b = other.algorithm;
  if (!(*a.vocabulary() == *b.vocabulary()) || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.states()[i];
    const auto& y = b.states()[i];
    if (x.name != y.name || x.initial != y.initial || !(x.state == y.state)) return false;
  }
  if (a.isRuleBased() != b.isRuleBased()) return false;
  if (a.isRuleBased()) {
    if (!(*a.program() == *b.program())) return false;
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.successorIndex(i) != b.successorIndex(i)) return false;
    }
  }
  return witnesses == other.witnesses && labels == other.labels;
}

SpecDocument parseSpec(std::string_view text) {
  const auto sections = splitSections(text);
  const Section* vocab_section = nullptr;
  for (const auto& s : sections) {
    if (s.kind != "vocabulary") continue;
    if (vocab_section) throw SpecError(s.header.line, s.header.column, "duplicate vocabulary section");
    vocab_section = &s;
  }
  if (!vocab_section) throw SpecError(1, 1, "missing vocabulary section");
  const VocabularyPtr vocab = parseVocabulary(*vocab_section);

  Labels labels;
  std::vector<CanonicalState> states;
  std::map<std::string, std::size_t, std::less<>> state_index;
  for (const auto& s : sections) {
    if (s.kind != "state") continue;
    if (!state_index.emplace(s.name, states.size()).second) {
      throw SpecError(s.header.line, s.header.column, "duplicate state '" + s.name + "'");
    }
    states.push_back({s.name, parseState(s, vocab, labels), false});
  }

  auto lookupState = [&](const Token& t) {
    auto it = state_index.find(t.text);
    if (it == state_index.end()) throw SpecError(t.line, t.column, "unknown state '" + t.text + "'");
    return it->second;
  };

  for (const auto& s : sections) {
    if (s.kind != "initial") continue;
    Cursor in(s);
    while (!in.atEnd()) {
      states[lookupState(in.word("a state name"))].initial = true;
      in.accept(",");
    }
  }

  std::vector<std::pair<std::string, WitnessSet>> witnesses;
  for (const auto& s : sections) {
    if (s.kind != "witness") continue;
    for (const auto& [n, w] : witnesses) {
      if (n == s.name) throw SpecError(s.header.line, s.header.column, "duplicate witness '" + s.name + "'");
    }
    Cursor in(s);
    WitnessSet w;
    while (!in.atEnd()) {
      w.insert(parseTermAt(in, *vocab));
      in.accept(",");
    }
    witnesses.emplace_back(s.name, std::move(w));
  }

  const Section* transition = nullptr;
  for (const auto& s : sections) {
    if (s.kind != "transition") continue;
    if (transition) throw SpecError(s.header.line, s.header.column, "duplicate transition section");
    transition = &s;
  }

  std::optional<Algorithm> algorithm;
  Cursor in = transition ? Cursor(*transition) : Cursor({}, Token{TokenKind::kEnd, "", 1, 1});
  if (in.peek().is("state")) {
    std::vector<std::optional<std::size_t>> successors(states.size());
    while (!in.atEnd()) {
      const Token kw = in.expect("state");
      const std::size_t from = lookupState(in.word("a state name"));
      in.expect("->");
      const Token to_token = in.word("a state name");
      const std::size_t to = lookupState(to_token);
      if (successors[from] && *successors[from] != to) {
        throw in.error(kw, "state '" + states[from].name + "' has two successors");
      }
      if (!std::ranges::equal(states[from].state.baseSet(), states[to].state.baseSet())) {
        throw in.error(to_token, "base-set violation: '" + states[to].name +
                                     "' does not have the base set of '" + states[from].name + "'");
      }
      successors[from] = to;
    }
    algorithm = Algorithm::withTable(vocab, std::move(states), std::move(successors));
  } else {
    auto rules = parseRuleSequence(in, *vocab);
    if (!in.atEnd()) throw in.error(in.peek(), "unexpected '" + in.peek().text + "'");
    algorithm = Algorithm::withRules(vocab, std::move(states), Rule::parallel(std::move(rules)));
  }
  return SpecDocument{std::move(*algorithm), std::move(witnesses), std::move(labels.names)};
}

SpecDocument loadSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseSpec(buf.str());
}

Term parseTerm(const Vocabulary& vocab, std::string_view text) {
  auto tokens = tokenizeLine(text, 1);
  Cursor in(tokens, Token{TokenKind::kEnd, "", 1, 1});
  Term t = parseTermAt(in, vocab);
  if (!in.atEnd()) throw in.error(in.peek(), "trailing input after term");
  return t;
}

namespace {

void unparseRule(std::ostream& out, const Rule& rule, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Rule::Assignment>) {
          out << pad << Term(node.symbol, node.args).toString() << " := " << node.value.toString() << "\n";
        } else if constexpr (std::is_same_v<T, Rule::Parallel>) {
          out << pad << "par\n";
          for (const auto& r : node.rules) unparseRule(out, r, indent + 1);
          out << pad << "endpar\n";
        } else {
          auto branch = [&](const Rule& r) {
            const auto* p = std::get_if<Rule::Parallel>(&r.node());
            if (p && p->rules.empty()) return;
            unparseRule(out, r, indent + 1);
          };
          out << pad << "if " << node.guard.toString() << " then\n";
          branch(*node.then_rule);
          const auto* e = std::get_if<Rule::Parallel>(&node.else_rule->node());
          if (!(e && e->rules.empty())) {
            out << pad << "else\n";
            branch(*node.else_rule);
          }
          out << pad << "endif\n";
        }
      },
      rule.node());
}

}  // namespace

std::string unparseSpec(const SpecDocument& doc) {
  const Algorithm& a = doc.algorithm;
  const Vocabulary& vocab = *a.vocabulary();
  auto label = [&](ElementId e) -> std::string {
    if (isLogical(e)) return toString(e);
    const std::size_t i = e.value - kLogicalElementCount;
    return i < doc.labels.size() ? doc.labels[i] : toString(e);
  };

  std::ostringstream out;
  out << "vocabulary:";
  for (std::size_t s = kLogicalSymbolCount; s < vocab.size(); ++s) {
    out << " " << vocab.at(s).name << "/" << vocab.at(s).arity;
  }
  out << "\n";

  for (const auto& cs : a.states()) {
    out << "state " << cs.name << ":\n  elements";
    for (ElementId e : cs.state.nonlogicalElements()) out << " " << label(e);
    out << "\n";
    for (std::size_t s = kLogicalSymbolCount; s < vocab.size(); ++s) {
      const Symbol& sym = vocab.at(s);
      const auto& table = cs.state.table(s);
      for (const auto& [key, value] : table.rawEntries()) {
        out << "  " << sym.name;
        if (sym.arity > 0) {
          const auto args = Interpretation::unpack(key, sym.arity);
          out << "(";
          for (std::size_t i = 0; i < args.size(); ++i) out << (i ? "," : "") << label(args[i]);
          out << ")";
        }
        out << " = " << label(value) << "\n";
      }
    }
  }

  out << "transition:\n";
  if (const Rule* program = a.program()) {
    const auto* top = std::get_if<Rule::Parallel>(&program->node());
    if (top) {
      for (const auto& r : top->rules) unparseRule(out, r, 1);
    } else {
      unparseRule(out, *program, 1);
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (auto s = a.successorIndex(i)) {
        out << "  state " << a.states()[i].name << " -> " << a.states()[*s].name << "\n";
      }
    }
  }

  out << "initial:";
  for (const auto& cs : a.states()) {
    if (cs.initial) out << " " << cs.name;
  }
  out << "\n";

  for (const auto& [name, w] : doc.witnesses) {
    out << "witness " << name << ":";
    for (const auto& t : w) out << " " << t.toString();
    out << "\n";
  }
  return out.str();
}

}  // namespace asmcheck
