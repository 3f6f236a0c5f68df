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

// asmcheck: postulate checkers over finite algorithms.
//
//   asmcheck check sequential-time|abstract-state SPEC [--universe N]
//   asmcheck check old-be|new-be|equivalence SPEC --witness NAME [--universe N]
//   asmcheck check equivalence --suite default|k=v,...
//   asmcheck scenario remark [--variant original|witness-a|same-state]
//   asmcheck scenario example [--universe N] [--identity]
//   asmcheck parse SPEC
//
// Exit codes: 0 pass, 1 fail, 2 usage or precondition error. ASMCHECK_UNIVERSE
// sets the default universe size.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "asmcheck/harness.hpp"
#include "asmcheck/scenarios.hpp"
#include "asmcheck/spec_format.hpp"

namespace {

using namespace asmcheck;

enum class Format { kText, kLines };

struct Options {
  std::string kind;
  std::string spec;
  std::string witness;
  std::optional<std::size_t> universe;
  std::string suite;
  Format format = Format::kText;
  std::string variant = "original";
  bool identity = false;
};

void print(const std::vector<std::string>& lines, Format format) {
  if (format == Format::kLines) {
    for (const auto& l : lines) std::cout << l << "\n";
    return;
  }
  // The verdict line comes first; details are indented under it.
  for (std::size_t i = 0; i < lines.size(); ++i) std::cout << (i ? "  " : "") << lines[i] << "\n";
}

Universe resolveUniverse(const Options& opt, std::size_t fallback) {
  if (opt.universe) return Universe{*opt.universe};
  if (const char* env = std::getenv("ASMCHECK_UNIVERSE"); env && *env) {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(env, &pos);
      if (env[pos] == '\0') return Universe{v};
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("ASMCHECK_UNIVERSE is not a size: '") + env + "'");
  }
  return Universe{fallback};
}

const WitnessSet& resolveWitness(const SpecDocument& doc, const std::string& name) {
  if (!name.empty()) return doc.witness(name);
  if (doc.witnesses.size() == 1) return doc.witnesses.front().second;
  throw PreconditionError("--witness is required: the document declares " +
                          std::to_string(doc.witnesses.size()) + " witness sets");
}

int runSuite(const Options& opt) {
  const GeneratorConfig cfg = parseGeneratorConfig(opt.suite);
  const SuiteResult result = runEquivalenceSuite(cfg);
  for (const auto& l : result.lines) std::cout << l.toString() << "\n";
  std::cout << "instances: " << result.instances << "\n"
            << "agreements: " << result.agreeing_instances << "/" << result.instances << "\n"
            << "replay-pairs: " << result.replay_pairs << " (case1 " << result.case1_routes << ", case2 "
            << result.case2_routes << ")\n"
            << "replay-failures: " << result.replay_failures << "\n"
            << "verdict: " << (result.ok() ? "pass" : "fail") << "\n";
  return result.ok() ? kExitPass : kExitFail;
}

int runCheck(const Options& opt) {
  if (opt.kind == "equivalence" && !opt.suite.empty()) {
    if (!opt.spec.empty()) throw PreconditionError("give either a spec file or --suite, not both");
    return runSuite(opt);
  }
  if (!opt.suite.empty()) throw PreconditionError("--suite only applies to `check equivalence`");
  if (opt.spec.empty()) throw PreconditionError("a spec file is required");
  const SpecDocument doc = loadSpec(opt.spec);
  const Algorithm& a = doc.algorithm;

  CheckReport report;
  if (opt.kind == "sequential-time") {
    report = checkSequentialTime(a);
  } else if (opt.kind == "abstract-state") {
    report = checkAbstractState(a, resolveUniverse(opt, requiredUniverseSize(a)));
  } else {
    const WitnessSet& t = resolveWitness(doc, opt.witness);
    const Universe u = resolveUniverse(opt, requiredUniverseSize(a));
    if (opt.kind == "old-be") {
      report = checkOldBE(a, t, u);
    } else if (opt.kind == "new-be") {
      report = checkNewBE(a, t, u);
    } else {
      report = verifyEquivalence(a, t, u).summary();
    }
  }
  print(report.lines(), opt.format);
  return exitCode(report);
}

int runScenario(const Options& opt) {
  ScenarioReport report;
  if (opt.kind == "remark") {
    static const std::map<std::string, RemarkVariant> variants{
        {"original", RemarkVariant::kOriginal},
        {"witness-a", RemarkVariant::kWitnessA},
        {"same-state", RemarkVariant::kSameState}};
    report = runScenarioRemark(variants.at(opt.variant));
  } else {
    report = runScenarioExample(resolveUniverse(opt, 7), opt.identity);
  }
  print(report.lines(), opt.format);
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Postulate checkers for finite sequential algorithms"};
  app.require_subcommand(1);
  Options opt;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"lines", Format::kLines}};

  auto* check = app.add_subcommand("check", "Check a postulate or the equivalence of the two BE forms");
  check->add_option("kind", opt.kind, "Which check")
      ->required()
      ->check(CLI::IsMember({"sequential-time", "abstract-state", "old-be", "new-be", "equivalence"}));
  check->add_option("spec", opt.spec, "Spec file")->check(CLI::ExistingFile);
  check->add_option("--witness,-w", opt.witness, "Witness set name");
  check->add_option("--universe,-u", opt.universe, "Universe size")->check(CLI::Range(3, 256));
  check->add_option("--suite", opt.suite, "Generated suite: default or k=v,...");
  check->add_option("--format", opt.format, "text or lines")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* scenario = app.add_subcommand("scenario", "Run a built-in scenario");
  scenario->add_option("name", opt.kind, "Scenario")->required()->check(CLI::IsMember({"remark", "example"}));
  scenario->add_option("--variant", opt.variant, "Remark variant")
      ->check(CLI::IsMember({"original", "witness-a", "same-state"}));
  scenario->add_option("--universe,-u", opt.universe, "Universe size")->check(CLI::Range(3, 256));
  scenario->add_flag("--identity", opt.identity, "Use the identity transformation");
  scenario->add_option("--format", opt.format, "text or lines")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* parse = app.add_subcommand("parse", "Parse a spec and print its canonical form");
  parse->add_option("spec", opt.spec, "Spec file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitPrecondition;
  }

  try {
    if (*check) return runCheck(opt);
    if (*scenario) return runScenario(opt);
    std::cout << unparseSpec(loadSpec(opt.spec));
    return kExitPass;
  } catch (const SpecError& e) {
    std::cerr << opt.spec << ":" << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitPrecondition;
}
