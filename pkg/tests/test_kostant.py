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
import sympy

from gkm_workbench.group_law import GroupLawKind
from gkm_workbench.kostant import A, X, kostant_centralizer_solve, slice_element


@pytest.mark.parametrize(
    "group, law, expected",
    [
        ("SL2", GroupLawKind.ADDITIVE, (A - 1 / A) / (2 * X)),
        ("PGL2", GroupLawKind.ADDITIVE, (A - 1) / X),
        ("SL2", GroupLawKind.MULTIPLICATIVE, (A - 1 / A) / (X**2 - 1)),
        ("PGL2", GroupLawKind.MULTIPLICATIVE, (A - 1) / (X - 1)),
    ],
)
def test_centralizer_constraint(group, law, expected):
    solution = kostant_centralizer_solve(group, law)

    assert 0 == sympy.simplify(solution.expression() - expected)
    assert solution.is_exact()


@pytest.mark.parametrize("group", ["SL2", "PGL2"])
@pytest.mark.parametrize("law", [GroupLawKind.ADDITIVE, GroupLawKind.MULTIPLICATIVE])
def test_degeneration_is_regular(group, law):
    assert 1 == kostant_centralizer_solve(group, law).degeneration()


def test_group_label_is_case_insensitive():
    assert "SL2" == kostant_centralizer_solve("sl2", GroupLawKind.ADDITIVE).group


def test_ring_generators():
    generators = kostant_centralizer_solve("PGL2", GroupLawKind.MULTIPLICATIVE).ring_generators()

    assert ("x^{±1}", "a^{±1}") == generators[:2]
    assert generators[2].startswith("b = ")


def test_unsupported_group():
    with pytest.raises(ValueError):
        kostant_centralizer_solve("GL2", GroupLawKind.ADDITIVE)


def test_formal_law():
    with pytest.raises(ValueError):
        kostant_centralizer_solve("SL2", GroupLawKind.FORMAL)


def test_slice_element_is_regular():
    # the additive SL2 slice element is traceless
    assert 0 == slice_element("SL2", GroupLawKind.ADDITIVE).trace()


def test_solution_is_logged(caplog):
    caplog.set_level("INFO")

    kostant_centralizer_solve("SL2", GroupLawKind.ADDITIVE)

    assert "Centralizer of the SL2 Kostant slice (additive)" in caplog.text
