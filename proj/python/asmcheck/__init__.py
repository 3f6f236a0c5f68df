# Copyright 2026 The asmcheck Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Executable checks for bounded exploration of sequential algorithms."""

from ._asmcheck import (
    EquivalenceReport,
    Error,
    HeadroomError,
    PreconditionError,
    Report,
    ScenarioReport,
    Spec,
    SpecError,
    SuiteResult,
    check_abstract_state,
    check_new_be,
    check_old_be,
    check_sequential_time,
    lemma_identity,
    load_spec,
    parse_spec,
    partial_isomorphism,
    run_suite,
    scenario_example,
    scenario_remark,
    similarity,
    verify_equivalence,
)

__all__ = [
    "EquivalenceReport",
    "Error",
    "HeadroomError",
    "PreconditionError",
    "Report",
    "ScenarioReport",
    "Spec",
    "SpecError",
    "SuiteResult",
    "check_abstract_state",
    "check_new_be",
    "check_old_be",
    "check_sequential_time",
    "lemma_identity",
    "load_spec",
    "parse_spec",
    "partial_isomorphism",
    "run_suite",
    "scenario_example",
    "scenario_remark",
    "similarity",
    "verify_equivalence",
]
