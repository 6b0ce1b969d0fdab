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


import json
from fractions import Fraction

import pytest

from gkm_workbench.coulomb import coulomb_4d
from gkm_workbench.exact_algebra import LaurentRing
from gkm_workbench.gkm_engine import psi_basis, structure_constants
from gkm_workbench.group_law import GroupLaw, GroupLawKind
from gkm_workbench.kostant import kostant_centralizer_solve
from gkm_workbench.serialization import UnknownFormatError, from_payload, parse, serialize, to_payload
from gkm_workbench.shift_algebras import f_de_rham
from gkm_workbench.verification import CheckResult, VerificationReport
from gkm_workbench.witt import WittVector


@pytest.fixture
def polynomial():
    x, q = LaurentRing(("x", "q")).gens()
    return x * x * 3 - q**-1 * Fraction(1, 2)


@pytest.fixture
def report():
    return VerificationReport(
        7,
        3,
        (
            CheckResult("witt", "inverse", "verified", "3/3", "3/3"),
            CheckResult("gkm", "psi", "mismatch", "x", "0"),
        ),
    )


# serialize

def test_json_is_sorted_and_tagged(polynomial):
    payload = json.loads(serialize(polynomial))

    assert "gkm-workbench/laurent-poly/v1" == payload["schema"]
    assert sorted(payload) == list(payload)


def test_text_header(polynomial):
    lines = serialize(polynomial, "text").decode("utf-8").splitlines()

    assert "# gkm-workbench/laurent-poly/v1" == lines[0]
    assert all(": " in line for line in lines[1:])


def test_serialization_is_deterministic(sl2_rotation_graph):
    assert serialize(sl2_rotation_graph) == serialize(sl2_rotation_graph)


def test_unknown_format(polynomial):
    with pytest.raises(UnknownFormatError):
        serialize(polynomial, "yaml")


def test_unregistered_type():
    with pytest.raises(UnknownFormatError):
        to_payload(object())


# parse

@pytest.mark.parametrize("fmt", ["json", "text"])
def test_polynomial_round_trip(polynomial, fmt):
    assert polynomial == parse(serialize(polynomial, fmt), fmt)


@pytest.mark.parametrize("fmt", ["json", "text"])
def test_report_round_trip(report, fmt):
    assert report == parse(serialize(report, fmt), fmt)


def test_graph_round_trip(sl2_rotation_graph):
    assert sl2_rotation_graph == parse(serialize(sl2_rotation_graph))


def test_psi_round_trip(sl2_rotation_graph):
    psi = psi_basis(sl2_rotation_graph, (0, 1))

    assert psi == parse(serialize(psi, "text"), "text")


def test_decomposition_round_trip(sl2_finite_graph):
    decomposition = structure_constants(sl2_finite_graph, [(1,), (1,)])

    assert decomposition == parse(serialize(decomposition))


def test_presentation_round_trip():
    presentation = coulomb_4d()

    assert presentation == parse(serialize(presentation))


def test_formal_law_round_trip():
    law = GroupLaw.random(4, order=5)

    assert law == parse(serialize(law, "text"), "text")


def test_de_rham_round_trip():
    table = f_de_rham(GroupLaw.multiplicative(), 3)

    assert table == parse(serialize(table))


def test_centralizer_round_trip():
    solution = kostant_centralizer_solve("PGL2", GroupLawKind.ADDITIVE)
    decoded = parse(serialize(solution))

    assert solution.constraint == decoded.constraint
    assert decoded.is_exact()


def test_witt_round_trip():
    vector = WittVector.of([1, -2, 3])

    assert vector == parse(serialize(vector, "text"), "text")


def test_parse_accepts_text_input(polynomial):
    assert polynomial == parse(serialize(polynomial).decode("utf-8"))


def test_missing_header(polynomial):
    body = serialize(polynomial, "text").decode("utf-8").split("\n", 1)[1]

    with pytest.raises(ValueError):
        parse(body, "text")


def test_unknown_schema():
    with pytest.raises(UnknownFormatError):
        from_payload({"schema": "gkm-workbench/unknown/v1"})
