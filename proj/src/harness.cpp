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

#include "asmcheck/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace asmcheck {

// ---------------------------------------------------------------------------
// Proof constructions

std::pair<State, Renaming> constructCase1State(const State& x, const State& y,
                                               const WitnessSet& terms) {
  const SimilarityFunction sigma = similarityFunction(x, y, terms);
  const auto image = sigma.image();
  for (ElementId e : sigma.domain()) {
    if (!isLogical(e) && image.contains(e)) {
      throw CaseHypothesisError("value sets of T overlap at element " + toString(e));
    }
  }
  if (!sigma.fixesLogicalElements()) {
    throw CaseHypothesisError("similarity function " + sigma.toString() +
                              " does not fix the logical elements");
  }
  std::vector<Renaming::Pair> pairs;
  for (ElementId e : x.nonlogicalElements()) pairs.emplace_back(e, sigma.tryApply(e).value_or(e));
  Renaming xi(std::move(pairs));  // throws InvalidRenaming if not injective
  State replaced = applyRenaming(x, xi);
  if (!coincidesOver(replaced, y, terms)) {
    throw Error("value replacement does not coincide with the target over T");
  }
  return {std::move(replaced), std::move(xi)};
}

std::pair<State, Renaming> constructDisjointCopy(const State& x, const State& y,
                                                 const WitnessSet& terms, const Universe& u) {
  std::set<ElementId> taken(y.nonlogicalElements().begin(), y.nonlogicalElements().end());
  const std::set<ElementId> target(taken);
  for (ElementId e : x.nonlogicalElements()) {
    if (!target.contains(e)) taken.insert(e);
  }
  std::vector<Renaming::Pair> pairs;
  std::uint16_t next = kLogicalElementCount;
  for (ElementId e : x.nonlogicalElements()) {
    if (!target.contains(e)) {
      pairs.emplace_back(e, e);
      continue;
    }
    while (next < u.size && taken.contains(ElementId{next})) ++next;
    if (next >= u.size) {
      throw HeadroomError("no fresh element left in a universe of size " + std::to_string(u.size));
    }
    taken.insert(ElementId{next});
    pairs.emplace_back(e, ElementId{next});
  }
  Renaming eta(std::move(pairs));
  State copy = applyRenaming(x, eta);
  for (ElementId e : evaluateSet(copy, terms)) {
    if (!isLogical(e) && target.contains(e)) {
      throw Error("disjoint copy still shares value " + toString(e));
    }
  }
  return {std::move(copy), std::move(eta)};
}

// ---------------------------------------------------------------------------
// Equivalence

CheckReport EquivalenceReport::summary() const {
  CheckReport r;
  r.check = "equivalence";
  r.verdict = verdict();
  r.notes.push_back("old-be: " + toString(old_be.verdict));
  r.notes.push_back("new-be: " + toString(new_be.verdict));
  r.notes.push_back(std::string("verdicts agree: ") + (agree ? "yes" : "no"));
  if (replayed) {
    r.notes.push_back("replayed " + std::to_string(replay_updates) + " updates over " +
                      std::to_string(replay_pairs) + " T-similar pairs (case 1: " +
                      std::to_string(case1_routes) + ", case 2: " + std::to_string(case2_routes) +
                      ", inapplicable: " + std::to_string(inapplicable) + ")");
  }
  if (replay_failure) r.notes.push_back("replay failure: " + *replay_failure);
  if (!agree) r.witness = !old_be.passed() ? old_be.witness : new_be.witness;
  return r;
}

namespace {

// Transports every update of D(X) to D(Y) the way the proof does and checks
// each intermediate claim. Returns a failure message or nothing.
std::optional<std::string> replayPair(const ClosureScan& scan, const ClosureScan::Record& xr,
                                      const ClosureScan::Record& yr, EquivalenceReport& report) {
  const Algorithm& a = scan.algorithm();
  const WitnessSet& terms = scan.terms();
  const auto sigma = SimilarityFunction::fromValues(xr.values, yr.values);
  for (const auto& [from, to] : sigma.pairs()) {
    if (isLogical(from) != isLogical(to) || (isLogical(from) && from != to)) {
      ++report.inapplicable;
      return std::nullopt;
    }
  }
  const State x = scan.materialize(xr);
  const State y = scan.materialize(yr);

  // Logical values are shared by every pair and fixed by sigma, so only the
  // nonlogical values decide the case.
  bool overlap = false;
  for (ElementId e : xr.values) {
    if (!isLogical(e) && std::find(yr.values.begin(), yr.values.end(), e) != yr.values.end()) overlap = true;
  }

  State moved = x;
  Renaming eta = xr.renaming;
  std::optional<std::pair<State, Renaming>> replaced;
  if (!overlap) {
    try {
      replaced = constructCase1State(x, y, terms);
      ++report.case1_routes;
    } catch (const InvalidRenaming&) {
      // Inaccessible elements of X collide with values of Y; take the
      // disjoint copy first.
    }
  }
  if (!replaced) {
    ++report.case2_routes;
    auto [copy, step_eta] = constructDisjointCopy(x, y, terms, scan.universe());
    const Member copy_member{xr.canonical, step_eta.after(xr.renaming), copy};
    if (!tSimilar(copy, y, terms)) return "disjoint copy is not T-similar to Y";
    if (!(updateSet(a, copy_member) == liftUpdateSet(step_eta, xr.updates))) {
      return "update set of the disjoint copy is not the lifted update set";
    }
    moved = std::move(copy);
    eta = copy_member.renaming;
    replaced = constructCase1State(moved, y, terms);
  }

  const auto& [x_prime, xi] = *replaced;
  const Member prime_member{xr.canonical, xi.after(eta), x_prime};
  const UpdateSet prime_updates = updateSet(a, prime_member);
  if (!(prime_updates == yr.updates)) {
    return "X' coincides with Y over T but D(X') != D(Y)";
  }
  const Renaming to_prime = xi.after(eta).after(xr.renaming.inverse());
  ++report.replay_pairs;
  for (const auto& u : xr.updates) {
    ++report.replay_updates;
    const Update transported = liftUpdate(to_prime, u);
    if (!prime_updates.contains(transported)) {
      return "transported update " + transported.toString() + " is not in D(X')";
    }
    const Update lifted = liftAccessibleUpdate(sigma, u);
    if (!(transported == lifted)) {
      return "transport " + transported.toString() + " differs from sigma(u) = " + lifted.toString();
    }
    if (!yr.updates.contains(lifted)) return "sigma(u) = " + lifted.toString() + " is not in D(Y)";
  }
  return std::nullopt;
}

}  // namespace

EquivalenceReport verifyEquivalence(const Algorithm& a, const WitnessSet& terms, const Universe& u) {
  if (!terms.isSubtermClosed()) {
    throw PreconditionError("equivalence is checked for witness sets closed under subterms");
  }
  const ClosureScan scan(a, terms, u);
  EquivalenceReport report;
  report.old_be = checkOldBE(scan);
  report.new_be = checkNewBE(scan);
  report.agree = report.old_be.verdict == report.new_be.verdict;
  if (!report.agree || !report.old_be.passed()) return report;

  report.replayed = true;
  for (const auto& xr : scan.canonical()) {
    if (xr.updates.empty()) continue;
    for (const auto& yr : scan.closure()) {
      if (xr.pattern != yr.pattern) continue;
      if (auto failure = replayPair(scan, xr, yr, report)) {
        report.replay_failure = *failure + " (X = " + scan.materialize(xr).serialize() +
                                ", Y = " + scan.materialize(yr).serialize() + ")";
        return report;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generator configuration

void GeneratorConfig::validate() const {
  if (max_canonical_states < 1 || max_carrier_size < 1 || max_nonlogical_symbols < 1 ||
      max_term_depth < 1 || instances < 1) {
    throw PreconditionError("generator bounds must be positive");
  }
  if (max_arity < 0 || max_arity > kHardMaxArity) {
    throw PreconditionError("generator arity bound must lie in [0, " +
                            std::to_string(kHardMaxArity) + "]");
  }
  if (universeSize() > kMaxElementId + 1) throw PreconditionError("carrier bound too large");
}

std::string GeneratorConfig::toString() const {
  std::ostringstream out;
  out << "states=" << max_canonical_states << ",carrier=" << max_carrier_size
      << ",symbols=" << max_nonlogical_symbols << ",arity=" << max_arity
      << ",depth=" << max_term_depth << ",instances=" << instances << ",seed=" << seed;
  return out.str();
}

GeneratorConfig parseGeneratorConfig(const std::string& text) {
  GeneratorConfig cfg;
  if (text.empty() || text == "default") return cfg;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("expected key=value in '" + item + "'");
    const std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw PreconditionError("bad number in '" + item + "'");
    }
    if (key == "states") {
      cfg.max_canonical_states = static_cast<int>(value);
    } else if (key == "carrier") {
      cfg.max_carrier_size = static_cast<int>(value);
    } else if (key == "symbols") {
      cfg.max_nonlogical_symbols = static_cast<int>(value);
    } else if (key == "arity") {
      cfg.max_arity = static_cast<int>(value);
    } else if (key == "depth") {
      cfg.max_term_depth = static_cast<int>(value);
    } else if (key == "instances") {
      cfg.instances = static_cast<int>(value);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(value);
    } else {
      throw PreconditionError("unknown suite key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

// ---------------------------------------------------------------------------
// Term enumeration

WitnessSet allGroundTerms(const Vocabulary& vocab, int depth) {
  std::set<Term> level;
  for (const auto& s : vocab.symbols()) {
    if (s.arity == 0) level.insert(Term(s, {}));
  }
  for (int d = 2; d <= depth; ++d) {
    const std::vector<Term> prev(level.begin(), level.end());
    std::set<Term> next = level;
    for (const auto& s : vocab.symbols()) {
      if (s.arity == 0) continue;
      std::vector<std::size_t> idx(s.arity, 0);
      while (true) {
        std::vector<Term> args;
        for (auto i : idx) args.push_back(prev[i]);
        next.insert(Term(s, std::move(args)));
        int k = s.arity - 1;
        while (k >= 0 && ++idx[k] == prev.size()) idx[k--] = 0;
        if (k < 0) break;
      }
    }
    level = std::move(next);
  }
  return WitnessSet(std::move(level));
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

class InstanceGenerator {
 public:
  InstanceGenerator(const GeneratorConfig& cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {}

  std::optional<SuiteInstance> attempt(std::size_t id) {
    vocab_ = randomVocabulary();
    const int roll = uniform(0, 3);
    std::optional<Algorithm> a;
    std::string kind;
    if (roll <= 1) {
      kind = "rule";
      a = ruleAlgorithm();
    } else if (roll == 2) {
      kind = "lasso";
      a = lassoAlgorithm();
    } else {
      kind = "orbit";
      a = orbitAlgorithm();
    }
    if (!a) return std::nullopt;
    SuiteInstance inst{id, kind, std::move(*a), {}};
    inst.witnesses.push_back(WitnessSet{});
    const WitnessSet full = allGroundTerms(*vocab_, cfg_.max_term_depth);
    inst.witnesses.push_back(full);
    if (const Rule* program = inst.algorithm.program()) {
      WitnessSet w = program->terms();
      addLogicalConstants(w);
      inst.witnesses.push_back(subtermClosure(w));
    }
    inst.witnesses.push_back(randomWitness(full));
    return inst;
  }

  std::optional<SimilarPair> similarPair(const Universe& u, int tries) {
    vocab_ = randomVocabulary();
    const State x = randomState(uniform(1, cfg_.max_carrier_size));
    const WitnessSet full = allGroundTerms(*vocab_, cfg_.max_term_depth);
    WitnessSet terms = randomWitness(full);
    if (chance(0.3)) {
      WitnessSet bare;
      for (const auto& t : terms) {
        if (!t.isConstant() || !t.symbol().isLogical()) bare.insert(t);
      }
      terms = subtermClosure(bare);
    }
    for (int i = 0; i < tries; ++i) {
      State y = chance(0.25) ? randomState(uniform(1, cfg_.max_carrier_size)) : x;
      // Move the carrier somewhere else in the universe, then disturb a few
      // entries.
      std::vector<ElementId> pool;
      for (std::size_t e = kLogicalElementCount; e < u.size; ++e) {
        pool.push_back(ElementId{static_cast<std::uint16_t>(e)});
      }
      std::shuffle(pool.begin(), pool.end(), rng_);
      std::vector<Renaming::Pair> pairs;
      for (std::size_t j = 0; j < y.nonlogicalElements().size(); ++j) {
        pairs.emplace_back(y.nonlogicalElements()[j], pool[j]);
      }
      y = applyRenaming(y, Renaming(std::move(pairs)));
      const int edits = uniform(0, 3);
      for (int e = 0; e < edits; ++e) {
        const auto f = static_cast<std::size_t>(
            uniform(kLogicalSymbolCount, static_cast<int>(vocab_->size()) - 1));
        std::vector<ElementId> args;
        for (int j = 0; j < vocab_->at(f).arity; ++j) args.push_back(randomElement(y));
        y.set(f, args, randomElement(y));
      }
      if (tSimilar(x, y, terms)) return SimilarPair{x, std::move(y), terms};
    }
    return std::nullopt;
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  VocabularyPtr randomVocabulary() {
    const int n = uniform(1, cfg_.max_nonlogical_symbols);
    std::vector<Symbol> symbols;
    static const char* kNames[] = {"f", "g", "h", "k", "m", "n", "p", "q"};
    for (int i = 0; i < n; ++i) {
      const std::string name = i < 8 ? kNames[i] : "s" + std::to_string(i);
      symbols.push_back({name, uniform(0, cfg_.max_arity), SymbolKind::kNonlogical});
    }
    return makeVocabulary(std::move(symbols), std::max(cfg_.max_arity, 0));
  }

  std::vector<ElementId> carrier(int k) {
    std::vector<ElementId> out;
    for (int i = 1; i <= k; ++i) out.push_back(nonlogical(i));
    return out;
  }

  ElementId randomElement(const State& s) {
    // Bias toward nonlogical elements so that tables are not mostly logical.
    auto nl = s.nonlogicalElements();
    if (!nl.empty() && chance(0.75)) return nl[uniform(0, static_cast<int>(nl.size()) - 1)];
    return ElementId{static_cast<std::uint16_t>(uniform(0, kLogicalElementCount - 1))};
  }

  State randomState(int k) {
    State s(vocab_, carrier(k));
    const auto base = s.baseSet();
    for (std::size_t f = kLogicalSymbolCount; f < vocab_->size(); ++f) {
      const int arity = vocab_->at(f).arity;
      const double density = arity == 0 ? 0.85 : 0.3;
      std::size_t total = 1;
      for (int i = 0; i < arity; ++i) total *= base.size();
      std::vector<ElementId> tuple(arity);
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int i = arity - 1; i >= 0; --i) {
          tuple[i] = base[c % base.size()];
          c /= base.size();
        }
        // Arguments are mostly nonlogical; keep logical-argument rows sparse.
        const bool logical_row =
            std::any_of(tuple.begin(), tuple.end(), [](ElementId e) { return isLogical(e); });
        if (chance(logical_row ? density / 4 : density)) s.set(f, tuple, randomElement(s));
      }
    }
    return s;
  }

  Term randomTerm(int max_depth) {
    std::vector<std::size_t> choices;
    for (std::size_t i = 0; i < vocab_->size(); ++i) {
      if (vocab_->at(i).arity == 0 || max_depth > 1) choices.push_back(i);
    }
    // Prefer nonlogical symbols; logical constants stay available.
    std::size_t pick = choices[uniform(0, static_cast<int>(choices.size()) - 1)];
    if (vocab_->at(pick).isLogical() && chance(0.6)) {
      std::vector<std::size_t> nl;
      for (auto c : choices) {
        if (!vocab_->at(c).isLogical()) nl.push_back(c);
      }
      if (!nl.empty()) pick = nl[uniform(0, static_cast<int>(nl.size()) - 1)];
    }
    const Symbol& s = vocab_->at(pick);
    std::vector<Term> args;
    for (int i = 0; i < s.arity; ++i) args.push_back(randomTerm(max_depth - 1));
    return Term(s, std::move(args));
  }

  Rule randomAssignment() {
    const auto f = static_cast<std::size_t>(
        uniform(kLogicalSymbolCount, static_cast<int>(vocab_->size()) - 1));
    const Symbol& s = vocab_->at(f);
    std::vector<Term> args;
    const int arg_depth = std::max(1, cfg_.max_term_depth - 1);
    for (int i = 0; i < s.arity; ++i) args.push_back(randomTerm(arg_depth));
    return Rule::assign(*vocab_, s.name, std::move(args), randomTerm(cfg_.max_term_depth));
  }

  Rule randomRule(int budget) {
    if (budget > 0 && chance(0.3)) {
      const int sub = std::max(1, cfg_.max_term_depth - 1);
      Term guard = makeTerm(*vocab_, "eq", {randomTerm(sub), randomTerm(sub)});
      Rule then_rule = randomRule(budget - 1);
      Rule else_rule = chance(0.5) ? randomRule(budget - 1) : Rule::skip();
      return Rule::conditional(std::move(guard), std::move(then_rule), std::move(else_rule));
    }
    return randomAssignment();
  }

  std::vector<CanonicalState> seedStates() {
    std::vector<CanonicalState> out;
    const int n = uniform(1, cfg_.max_canonical_states);
    for (int i = 0; i < n; ++i) {
      out.push_back({"S" + std::to_string(i), randomState(uniform(1, cfg_.max_carrier_size)), true});
    }
    return out;
  }

  // Rule programs: the family is the closure of the seeds under the step.
  std::optional<Algorithm> ruleAlgorithm() {
    std::vector<Rule> rules;
    const int n = uniform(1, 3);
    for (int i = 0; i < n; ++i) rules.push_back(randomRule(1));
    Rule program = Rule::parallel(std::move(rules));
    auto states = seedStates();
    const std::size_t cap = 4 * static_cast<std::size_t>(cfg_.max_canonical_states);
    try {
      for (std::size_t i = 0; i < states.size(); ++i) {
        State next = applyUpdates(states[i].state, applyRule(states[i].state, program));
        const bool known = std::any_of(states.begin(), states.end(), [&](const CanonicalState& s) {
          return findIsomorphism(s.state, next).has_value();
        });
        if (known) continue;
        if (states.size() >= cap) return std::nullopt;
        states.push_back({"S" + std::to_string(states.size()), std::move(next), false});
      }
    } catch (const ClashError&) {
      return std::nullopt;
    } catch (const GuardError&) {
      return std::nullopt;
    }
    return Algorithm::withRules(vocab_, std::move(states), std::move(program));
  }

  // Explicit: a chain of random states over one carrier that loops back.
  std::optional<Algorithm> lassoAlgorithm() {
    const int k = uniform(1, cfg_.max_carrier_size);
    const int length = uniform(1, cfg_.max_canonical_states + 1);
    std::vector<CanonicalState> states;
    std::vector<std::optional<std::size_t>> succ;
    for (int i = 0; i < length; ++i) {
      states.push_back({"S" + std::to_string(i), randomState(k), i == 0});
      succ.push_back(i + 1 < length ? std::optional<std::size_t>(i + 1)
                                    : std::optional<std::size_t>(uniform(0, length - 1)));
    }
    Algorithm a = Algorithm::withTable(vocab_, std::move(states), std::move(succ));
    if (findIncoherence(a)) return std::nullopt;
    return a;
  }

  // Explicit: the step permutes the carrier, which no ground-term program
  // can express.
  std::optional<Algorithm> orbitAlgorithm() {
    const int k = uniform(std::min(2, cfg_.max_carrier_size), cfg_.max_carrier_size);
    State s = randomState(k);
    std::vector<ElementId> image(s.nonlogicalElements().begin(), s.nonlogicalElements().end());
    std::shuffle(image.begin(), image.end(), rng_);
    std::vector<Renaming::Pair> pairs;
    for (std::size_t i = 0; i < image.size(); ++i) pairs.emplace_back(s.nonlogicalElements()[i], image[i]);
    const Renaming pi(std::move(pairs));
    std::vector<CanonicalState> states;
    State current = s;
    do {
      states.push_back({"S" + std::to_string(states.size()), current, states.empty()});
      current = applyRenaming(current, pi);
    } while (!(current == s));
    std::vector<std::optional<std::size_t>> succ;
    for (std::size_t i = 0; i < states.size(); ++i) succ.push_back((i + 1) % states.size());
    Algorithm a = Algorithm::withTable(vocab_, std::move(states), std::move(succ));
    if (findIncoherence(a)) return std::nullopt;
    return a;
  }

  void addLogicalConstants(WitnessSet& w) {
    for (std::size_t i : {kTrueSymbol, kFalseSymbol, kUndefSymbol}) w.insert(Term(vocab_->at(i), {}));
  }

  WitnessSet randomWitness(const WitnessSet& full) {
    WitnessSet w;
    addLogicalConstants(w);
    const std::vector<Term> pool(full.begin(), full.end());
    const int n = uniform(1, 5);
    for (int i = 0; i < n; ++i) w.insert(pool[uniform(0, static_cast<int>(pool.size()) - 1)]);
    return subtermClosure(w);
  }

  const GeneratorConfig& cfg_;
  std::mt19937_64 rng_;
  VocabularyPtr vocab_;
};

constexpr int kAttemptsPerInstance = 500;

}  // namespace

std::vector<SuiteInstance> generateAlgorithmSuite(const GeneratorConfig& cfg) {
  cfg.validate();
  std::vector<SuiteInstance> out;
  for (int id = 0; id < cfg.instances; ++id) {
    InstanceGenerator gen(cfg, cfg.seed * 1000003ULL + static_cast<std::uint64_t>(id));
    for (int attempt = 0; attempt < kAttemptsPerInstance; ++attempt) {
      if (auto inst = gen.attempt(static_cast<std::size_t>(id))) {
        out.push_back(std::move(*inst));
        break;
      }
    }
  }
  if (out.empty()) throw PreconditionError("generator bounds produce no instances");
  return out;
}

std::vector<SimilarPair> generateSimilarPairs(const GeneratorConfig& cfg, std::size_t count) {
  cfg.validate();
  const Universe u{cfg.universeSize()};
  std::vector<SimilarPair> out;
  for (std::uint64_t id = 0; out.size() < count; ++id) {
    InstanceGenerator gen(cfg, cfg.seed * 1000003ULL + 7777777ULL + id);
    if (auto pair = gen.similarPair(u, 50)) out.push_back(std::move(*pair));
    if (id > 100 * count + 1000) throw PreconditionError("generator bounds produce no similar pairs");
  }
  return out;
}

std::string SuiteLine::toString() const {
  std::ostringstream out;
  out << "seed=" << seed << " instance=" << instance << " witness=" << witness
      << " old-be=" << asmcheck::toString(old_be) << " new-be=" << asmcheck::toString(new_be)
      << " agree=" << (agree ? "yes" : "no");
  return out.str();
}

SuiteResult runEquivalenceSuite(const GeneratorConfig& cfg) {
  const auto suite = generateAlgorithmSuite(cfg);
  const Universe u{cfg.universeSize()};
  SuiteResult result;
  for (const auto& inst : suite) {
    bool all_agree = true;
    for (std::size_t w = 0; w < inst.witnesses.size(); ++w) {
      const auto report = verifyEquivalence(inst.algorithm, inst.witnesses[w], u);
      result.lines.push_back({cfg.seed, inst.id, w, report.old_be.verdict, report.new_be.verdict,
                              report.agree});
      if (report.replay_failure) ++result.replay_failures;
      result.replay_pairs += report.replay_pairs;
      result.case1_routes += report.case1_routes;
      result.case2_routes += report.case2_routes;
      result.inapplicable += report.inapplicable;
      all_agree = all_agree && report.verdict() == Verdict::kPass;
    }
    ++result.instances;
    if (all_agree) ++result.agreeing_instances;
  }
  return result;
}

}  // namespace asmcheck
