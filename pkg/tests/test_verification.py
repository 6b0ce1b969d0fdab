#
# Copyright 2024 ABSA Group Limited
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
#


import random

import pytest

from gkm_workbench.serialization import serialize
from gkm_workbench.shift_algebras import RelationReport
from gkm_workbench.verification import (
    CHECKS,
    CheckResult,
    VerificationReport,
    check_blowup,
    check_coulomb_3d,
    check_gkm_graphs,
    check_kostant,
    check_witt,
    report_rows,
    verify_all,
)


@pytest.fixture
def report():
    return VerificationReport(
        1,
        2,
        (
            CheckResult("kostant", "b", "verified", "b", "b"),
            CheckResult("witt", "ghost", "verified", "p", "p"),
            CheckResult("witt", "inverse", "mismatch", "1/2", "2/2"),
        ),
    )


# VerificationReport

def test_summary_table(report):
    expected = "\n".join(
        [
            "case    | verified | mismatch",
            "--------+----------+---------",
            "kostant |        1 |        0",
            "witt    |        1 |        1",
        ]
    )

    assert expected == report.summary_table()


def test_passed_and_mismatches(report):
    assert not report.passed
    assert ["inverse"] == [r.relation for r in report.mismatches]
    assert ["kostant", "witt"] == report.cases()


def test_empty_report_passes():
    assert VerificationReport(0, 0, ()).passed


def test_report_rows():
    reports = [RelationReport("T^2 = 0", True, "0", "0"), RelationReport("braid", False, "a", "b")]

    rows = report_rows("nil-hecke", reports)

    assert ["verified", "mismatch"] == [row.status for row in rows]
    assert {"nil-hecke"} == {row.case for row in rows}


# checks

def test_check_kostant():
    results = check_kostant(random.Random(0), 1)

    assert 4 == len(results)
    assert all(r.verified for r in results)


def test_check_witt():
    results = check_witt(random.Random(0), 3)

    assert all(r.verified for r in results), [r.relation for r in results if not r.verified]


def test_check_coulomb_3d():
    assert all(r.verified for r in check_coulomb_3d(random.Random(0), 1))


@pytest.mark.parametrize("name, check", CHECKS)
def test_every_check_verifies(name, check):
    results = check(random.Random(f"20240601/{name}"), 2)

    assert results
    assert [] == [r.relation for r in results if not r.verified]


def test_check_gkm_graphs_refuses_shell_terms():
    results = check_gkm_graphs(random.Random(0), 2)

    shell_rows = [r for r in results if r.relation == "decompose refuses psi terms on the boundary shell"]
    assert ["gkm-sl2-affine-flag", "gkm-sl2-affine-gr"] == [r.case for r in shell_rows]
    assert ["2/2", "1/1"] == [r.lhs_normal_form for r in shell_rows]


def test_check_blowup_compares_generators():
    results = check_blowup(random.Random(0), 2)

    generators = [r for r in results if r.relation.endswith(": generator")]
    assert 40 == len(results)
    assert [
        "SL2 additive: generator",
        "SL2 multiplicative: generator",
        "PGL2 additive: generator",
        "PGL2 multiplicative: generator",
    ] == [r.relation for r in generators]
    assert all(r.verified for r in generators)


def test_verify_all_passes_and_depends_only_on_the_seed():
    first = verify_all(seed=20240601, trials=2)
    second = verify_all(seed=20240601, trials=2)

    assert first.passed, [(r.case, r.relation) for r in first.mismatches]
    assert serialize(first, "json") == serialize(second, "json")
    assert serialize(first, "text") == serialize(second, "text")


def test_verify_all_logs_mismatches(mocker, caplog):
    failing = [CheckResult("fake", "relation", "mismatch", "1", "2")]
    mocker.patch("gkm_workbench.verification.CHECKS", (("fake", lambda rng, trials: failing),))

    report = verify_all(seed=3, trials=1)

    assert not report.passed
    assert 3 == report.seed
    assert "Mismatch in fake: relation (1 != 2)." in caplog.text
