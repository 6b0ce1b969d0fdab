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


import pytest

from gkm_workbench.coulomb import (
    CoulombRelation,
    build_presentation,
    classical_limit,
    coulomb_3d,
    coulomb_4d,
)


# presentations

@pytest.mark.parametrize("dimension", [3, 4])
def test_relations_hold(dimension):
    reports = build_presentation(dimension).verify()

    assert 4 == len(reports)
    assert all(report.verdict for report in reports), [r.relation for r in reports if not r.verdict]


def test_unsupported_dimension():
    with pytest.raises(ValueError):
        build_presentation(5)


@pytest.mark.parametrize("factory", [coulomb_3d, coulomb_4d])
def test_unsupported_group(factory):
    with pytest.raises(ValueError):
        factory("PGL2")


def test_3d_commutator_matches_relation():
    presentation = coulomb_3d()
    expected = presentation.evaluate(presentation.parse("hbar*V**2"))

    assert expected == presentation.commutator("U", "V")


def test_4d_bracket_orientation():
    presentation = coulomb_4d()
    (holding,) = [r for r in presentation.relations if r.name == "[W,Z]"]
    reversed_relation = CoulombRelation("[Z,W]", "Z*W - W*Z", holding.rhs, ("Z", "W"))

    lhs = presentation.evaluate(presentation.parse(reversed_relation.lhs))
    rhs = presentation.evaluate(presentation.parse(reversed_relation.rhs))

    assert lhs != rhs
    assert -lhs == rhs


def test_failing_relation_is_logged(caplog):
    presentation = coulomb_3d()
    presentation.relations = (CoulombRelation("broken", "U*V", "V*U"),)

    (report,) = presentation.verify()

    assert not report.verdict
    assert "Coulomb 3d relation broken fails" in caplog.text


def test_evaluate_expands_powers():
    presentation = coulomb_3d()

    assert presentation.generators["U"] * presentation.generators["U"] == presentation.evaluate(
        presentation.parse("U**2")
    )


@pytest.mark.parametrize("dimension", [3, 4])
def test_generators_are_invariant(dimension):
    fixed = build_presentation(dimension).fixed_generators()

    assert all(fixed.values())


def test_presentations_compare_equal():
    assert coulomb_4d() == coulomb_4d()
    assert coulomb_3d() != coulomb_4d()


# classical limit

def test_3d_classical_quartic():
    limit = classical_limit(coulomb_3d())
    phi, u, v = limit.generators

    assert 0 == (limit.quartic - (u**2 - 4 - phi * v**2)).expand()
    assert 2 * u == limit.generator_bracket(phi, v)
    assert -(v**2) == limit.generator_bracket(v, u)


@pytest.mark.parametrize("dimension", [3, 4])
def test_classical_bracket_is_poisson(dimension):
    limit = classical_limit(build_presentation(dimension))

    assert 0 == limit.jacobi()
    assert all(0 == defect for defect in limit.casimir_defects().values())


def test_4d_classical_quartic():
    limit = classical_limit(coulomb_4d())
    psi, w, z = limit.generators

    assert 0 == (limit.quartic - (w**2 - 4 - (psi**2 - 4) * z**2)).expand()
