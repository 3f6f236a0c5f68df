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


// Python bindings: specs, postulate checks, the equivalence harness and the
// built-in scenarios.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "asmcheck/harness.hpp"
#include "asmcheck/postulates.hpp"
#include "asmcheck/scenarios.hpp"
#include "asmcheck/similarity.hpp"
#include "asmcheck/spec_format.hpp"

namespace py = pybind11;
using namespace asmcheck;

namespace {

Universe resolveUniverse(const SpecDocument& doc, std::optional<std::size_t> size) {
  return Universe{size.value_or(requiredUniverseSize(doc.algorithm))};
}

const State& namedState(const SpecDocument& doc, const std::string& name) {
  const auto index = doc.algorithm.findState(name);
  if (!index) throw PreconditionError("unknown state '" + name + "'");
  return doc.algorithm.state(*index);
}

std::vector<std::string> stateNames(const SpecDocument& doc) {
  std::vector<std::string> out;
  for (const auto& cs : doc.algorithm.states()) out.push_back(cs.name);
  return out;
}

std::vector<std::string> witnessNames(const SpecDocument& doc) {
  std::vector<std::string> out;
  for (const auto& [name, terms] : doc.witnesses) out.push_back(name);
  return out;
}

}  // namespace

PYBIND11_MODULE(_asmcheck, m) {
  m.doc() = "Executable checks for bounded exploration of sequential algorithms.";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<SpecError>(m, "SpecError", error);
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<HeadroomError>(m, "HeadroomError", precondition);

  py::class_<CheckReport>(m, "Report")
      .def_readonly("check", &CheckReport::check)
      .def_property_readonly("passed", &CheckReport::passed)
      .def_property_readonly("verdict", [](const CheckReport& r) { return toString(r.verdict); })
      .def_readonly("notes", &CheckReport::notes)
      .def_property_readonly("lines", &CheckReport::lines)
      .def_property_readonly("exit_code", [](const CheckReport& r) { return exitCode(r); })
      .def("__str__", &CheckReport::toString)
      .def("__repr__", [](const CheckReport& r) { return "<Report " + r.check + ": " + toString(r.verdict) + ">"; });

  py::class_<ScenarioReport>(m, "ScenarioReport")
      .def_readonly("name", &ScenarioReport::name)
      .def_property_readonly("passed", &ScenarioReport::passed)
      .def_property_readonly("lines", &ScenarioReport::lines);

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_property_readonly("old_be", [](const EquivalenceReport& r) { return r.old_be; })
      .def_property_readonly("new_be", [](const EquivalenceReport& r) { return r.new_be; })
      .def_readonly("agree", &EquivalenceReport::agree)
      .def_readonly("replayed", &EquivalenceReport::replayed)
      .def_readonly("replay_pairs", &EquivalenceReport::replay_pairs)
      .def_readonly("case1_routes", &EquivalenceReport::case1_routes)
      .def_readonly("case2_routes", &EquivalenceReport::case2_routes)
      .def_readonly("replay_failure", &EquivalenceReport::replay_failure)
      .def_property_readonly("passed", [](const EquivalenceReport& r) { return r.verdict() == Verdict::kPass; })
      .def_property_readonly("lines", [](const EquivalenceReport& r) { return r.summary().lines(); });

  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("instances", &SuiteResult::instances)
      .def_readonly("agreeing_instances", &SuiteResult::agreeing_instances)
      .def_readonly("replay_failures", &SuiteResult::replay_failures)
      .def_readonly("replay_pairs", &SuiteResult::replay_pairs)
      .def_property_readonly("passed", &SuiteResult::ok)
      .def_property_readonly("lines", [](const SuiteResult& r) {
        std::vector<std::string> out;
        for (const auto& l : r.lines) out.push_back(l.toString());
        return out;
      });

  py::class_<SpecDocument>(m, "Spec")
      .def_property_readonly("states", &stateNames)
      .def_property_readonly("witnesses", &witnessNames)
      .def_readonly("labels", &SpecDocument::labels)
      .def_property_readonly("required_universe",
                             [](const SpecDocument& d) { return requiredUniverseSize(d.algorithm); })
      .def("unparse", &unparseSpec)
      .def("witness_terms",
           [](const SpecDocument& d, const std::string& name) {
             std::vector<std::string> out;
             for (const auto& t : d.witness(name)) out.push_back(t.toString());
             return out;
           })
      .def("state", [](const SpecDocument& d, const std::string& name) { return namedState(d, name).serialize(); })
      .def("__eq__", &SpecDocument::operator==);

  m.def("parse_spec", [](const std::string& text) { return parseSpec(text); }, py::arg("text"));
  m.def("load_spec", &loadSpec, py::arg("path"));

  m.def("check_sequential_time", [](const SpecDocument& d) { return checkSequentialTime(d.algorithm); },
        py::arg("spec"));
  m.def(
      "check_abstract_state",
      [](const SpecDocument& d, std::optional<std::size_t> universe) {
        return checkAbstractState(d.algorithm, resolveUniverse(d, universe));
      },
      py::arg("spec"), py::arg("universe") = py::none());
  m.def(
      "check_old_be",
      [](const SpecDocument& d, const std::string& witness, std::optional<std::size_t> universe) {
        return checkOldBE(d.algorithm, d.witness(witness), resolveUniverse(d, universe));
      },
      py::arg("spec"), py::arg("witness"), py::arg("universe") = py::none());
  m.def(
      "check_new_be",
      [](const SpecDocument& d, const std::string& witness, std::optional<std::size_t> universe) {
        return checkNewBE(d.algorithm, d.witness(witness), resolveUniverse(d, universe));
      },
      py::arg("spec"), py::arg("witness"), py::arg("universe") = py::none());
  m.def(
      "verify_equivalence",
      [](const SpecDocument& d, const std::string& witness, std::optional<std::size_t> universe) {
        return verifyEquivalence(d.algorithm, d.witness(witness), resolveUniverse(d, universe));
      },
      py::arg("spec"), py::arg("witness"), py::arg("universe") = py::none());
  m.def(
      "run_suite", [](const std::string& config) { return runEquivalenceSuite(parseGeneratorConfig(config)); },
      py::arg("config") = "default");

  m.def(
      "similarity",
      [](const SpecDocument& d, const std::string& x, const std::string& y,
         const std::string& witness) -> std::optional<std::map<std::string, std::string>> {
        const WitnessSet& terms = d.witness(witness);
        const State& sx = namedState(d, x);
        const State& sy = namedState(d, y);
        if (!tSimilar(sx, sy, terms)) return std::nullopt;
        std::map<std::string, std::string> out;
        const SimilarityFunction sigma = similarityFunction(sx, sy, terms);
        for (const auto& [from, to] : sigma.pairs()) {
          out[toString(from)] = toString(to);
        }
        return out;
      },
      py::arg("spec"), py::arg("x"), py::arg("y"), py::arg("witness"));
  m.def(
      "lemma_identity",
      [](const SpecDocument& d, const std::string& x, const std::string& y, const std::string& witness) {
        return checkLemmaIdentity(namedState(d, x), namedState(d, y), d.witness(witness)).holds;
      },
      py::arg("spec"), py::arg("x"), py::arg("y"), py::arg("witness"));
  m.def(
      "partial_isomorphism",
      [](const SpecDocument& d, const std::string& x, const std::string& y, const std::string& witness) {
        return checkPartialIsomorphism(namedState(d, x), namedState(d, y), d.witness(witness)).holds;
      },
      py::arg("spec"), py::arg("x"), py::arg("y"), py::arg("witness"));

  m.def(
      "scenario_remark",
      [](const std::string& variant) {
        if (variant == "original") return runScenarioRemark(RemarkVariant::kOriginal);
        if (variant == "witness-a") return runScenarioRemark(RemarkVariant::kWitnessA);
        if (variant == "same-state") return runScenarioRemark(RemarkVariant::kSameState);
        throw PreconditionError("unknown variant '" + variant + "'");
      },
      py::arg("variant") = "original");
  m.def(
      "scenario_example",
      [](std::size_t universe, bool identity) { return runScenarioExample(Universe{universe}, identity); },
      py::arg("universe") = 7, py::arg("identity") = false);
}
