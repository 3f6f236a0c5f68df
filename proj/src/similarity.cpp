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

#include "asmcheck/similarity.hpp"

#include <array>

namespace asmcheck {

SimilarityFunction SimilarityFunction::fromValues(const std::vector<ElementId>& x_values,
                                                  const std::vector<ElementId>& y_values) {
  if (x_values.size() != y_values.size()) {
    throw NotSimilarError("value vectors have different lengths");
  }
  SimilarityFunction sigma;
  std::map<ElementId, ElementId> back;
  for (std::size_t i = 0; i < x_values.size(); ++i) {
    auto [fwd, fresh] = sigma.map_.emplace(x_values[i], y_values[i]);
    if (!fresh && fwd->second != y_values[i]) {
      throw NotSimilarError("not T-similar: " + asmcheck::toString(x_values[i]) + " would map to both " +
                            asmcheck::toString(fwd->second) + " and " + asmcheck::toString(y_values[i]));
    }
    auto [bwd, fresh_back] = back.emplace(y_values[i], x_values[i]);
    if (!fresh_back && bwd->second != x_values[i]) {
      throw NotSimilarError("not T-similar: " + asmcheck::toString(y_values[i]) + " is the image of both " +
                            asmcheck::toString(bwd->second) + " and " + asmcheck::toString(x_values[i]));
    }
  }
  return sigma;
}

std::set<ElementId> SimilarityFunction::domain() const {
  std::set<ElementId> out;
  for (const auto& [a, b] : map_) out.insert(a);
  return out;
}

std::set<ElementId> SimilarityFunction::image() const {
  std::set<ElementId> out;
  for (const auto& [a, b] : map_) out.insert(b);
  return out;
}

std::optional<ElementId> SimilarityFunction::tryApply(ElementId e) const {
  auto it = map_.find(e);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

ElementId SimilarityFunction::operator()(ElementId e) const {
  if (auto v = tryApply(e)) return *v;
  throw InaccessibleError("element " + asmcheck::toString(e) + " is not T-accessible");
}

SimilarityFunction SimilarityFunction::inverse() const {
  SimilarityFunction out;
  for (const auto& [a, b] : map_) out.map_.emplace(b, a);
  return out;
}

bool SimilarityFunction::isIdentity() const {
  for (const auto& [a, b] : map_) {
    if (a != b) return false;
  }
  return true;
}

bool SimilarityFunction::fixesLogicalElements() const {
  for (const auto& [a, b] : map_) {
    if ((isLogical(a) || isLogical(b)) && a != b) return false;
  }
  return true;
}

std::string SimilarityFunction::toString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : map_) {
    if (!first) out += ", ";
    first = false;
    out += asmcheck::toString(a) + "->" + asmcheck::toString(b);
  }
  return out + "}";
}

bool tSimilar(const State& x, const State& y, const WitnessSet& terms) {
  requireSameVocabulary(x, y);
  std::vector<ElementId> vx, vy;
  for (const auto& t : terms) {
    vx.push_back(evaluateTerm(x, t));
    vy.push_back(evaluateTerm(y, t));
  }
  // Straight from the definition: every pair of terms.
  for (std::size_t i = 0; i < vx.size(); ++i) {
    for (std::size_t j = i + 1; j < vx.size(); ++j) {
      if ((vx[i] == vx[j]) != (vy[i] == vy[j])) return false;
    }
  }
  return true;
}

SimilarityFunction similarityFunction(const State& x, const State& y, const WitnessSet& terms) {
  requireSameVocabulary(x, y);
  std::vector<ElementId> vx, vy;
  for (const auto& t : terms) {
    vx.push_back(evaluateTerm(x, t));
    vy.push_back(evaluateTerm(y, t));
  }
  return SimilarityFunction::fromValues(vx, vy);
}

std::string HomomorphismViolation::toString() const {
  std::string where = symbol + asmcheck::toString(args);
  std::string out = "sigma(" + where + "_X) = " + asmcheck::toString(mapped_value) + " but " +
                    symbol + "_Y(sigma" + asmcheck::toString(args) +
                    ") = " + asmcheck::toString(value_of_mapped);
  if (term) out += " [term " + term->toString() + "]";
  return out;
}

std::string IdentityReport::toString() const {
  if (holds) return "pass (" + std::to_string(checked) + " instances)";
  return "fail: " + violation->toString();
}

IdentityReport checkLemmaIdentity(const State& x, const State& y, const WitnessSet& terms) {
  if (!terms.isSubtermClosed()) throw PreconditionError("witness set is not closed under subterms");
  const SimilarityFunction sigma = similarityFunction(x, y, terms);
  const auto& vocab = *x.vocabulary();
  IdentityReport report;
  for (const auto& t : terms) {
    const std::size_t f = vocab.indexOf(t.symbol().name);
    std::array<ElementId, kHardMaxArity> xs{}, ys{};
    const std::size_t j = t.args().size();
    for (std::size_t i = 0; i < j; ++i) {
      xs[i] = evaluateTerm(x, t.args()[i]);
      ys[i] = sigma(xs[i]);
    }
    const ElementId fx = x.apply(f, std::span<const ElementId>(xs.data(), j));
    const ElementId lhs = sigma(fx);
    const ElementId rhs = y.apply(f, std::span<const ElementId>(ys.data(), j));
    ++report.checked;
    if (lhs != rhs) {
      report.holds = false;
      report.violation = HomomorphismViolation{t.symbol().name, {xs.begin(), xs.begin() + j},
                                               lhs, rhs, t};
      return report;
    }
  }
  return report;
}

IdentityReport checkPartialIsomorphism(const State& x, const State& y, const WitnessSet& terms) {
  const SimilarityFunction sigma = similarityFunction(x, y, terms);
  const std::set<ElementId> dom = sigma.domain();
  const std::vector<ElementId> domain(dom.begin(), dom.end());
  const auto& vocab = *x.vocabulary();
  IdentityReport report;
  for (std::size_t f = 0; f < vocab.size(); ++f) {
    const int arity = vocab.at(f).arity;
    std::size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= domain.size();
    std::vector<ElementId> xs(arity), ys(arity);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (int i = arity - 1; i >= 0; --i) {
        xs[i] = domain[c % domain.size()];
        ys[i] = sigma(xs[i]);
        c /= domain.size();
      }
      const auto lhs = sigma.tryApply(x.apply(f, xs));
      if (!lhs) continue;
      const ElementId rhs = y.apply(f, ys);
      ++report.checked;
      if (*lhs != rhs) {
        report.holds = false;
        report.violation = HomomorphismViolation{vocab.at(f).name, xs, *lhs, rhs, std::nullopt};
        return report;
      }
    }
  }
  return report;
}

std::set<ElementId> accessibleElements(const State& x, const WitnessSet& terms) {
  return evaluateSet(x, terms);
}

bool isAccessibleUpdate(const std::set<ElementId>& accessible, const Update& u) {
  if (!accessible.contains(u.value)) return false;
  for (ElementId a : u.args) {
    if (!accessible.contains(a)) return false;
  }
  return true;
}

bool isAccessibleUpdate(const State& x, const WitnessSet& terms, const Update& u) {
  return isAccessibleUpdate(accessibleElements(x, terms), u);
}

Update liftAccessibleUpdate(const SimilarityFunction& sigma, const Update& u) {
  Update out{u.symbol, u.args, sigma(u.value)};
  for (auto& a : out.args) a = sigma(a);
  return out;
}

std::vector<std::uint16_t> equalityPattern(const std::vector<ElementId>& values) {
  std::vector<std::uint16_t> out;
  out.reserve(values.size());
  std::array<std::uint16_t, kMaxElementId + 1> label{};
  label.fill(0xffff);
  std::uint16_t next = 0;
  for (ElementId v : values) {
    auto& l = label[v.value];
    if (l == 0xffff) l = next++;
    out.push_back(l);
  }
  return out;
}

}  // namespace asmcheck
