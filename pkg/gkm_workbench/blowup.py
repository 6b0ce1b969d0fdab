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

"""
This module contains the rank-one affine blowup checks: the telescoping identity for (e^{nα∨} − 1)/c_α and the
degeneration of the presentations k[x, y^{±1}, (e^{α∨} − 1)/c_α] at the equivariant parameter.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from gkm_workbench.exact_algebra import LaurentPoly, LaurentRing, RatFunc, simplify
from gkm_workbench.gkm_engine import blowup_generator, build_moment_graph, is_integral_homology
from gkm_workbench.group_law import GroupLaw, GroupLawKind, coordinate_names, coordinate_ring, euler_class
from gkm_workbench.root_system import RootDatum

logger = logging.getLogger(__name__)

COWEIGHT_VARIABLE = "y"
GENERATOR_VARIABLE = "w"
TELESCOPING_RANGE = range(2, 9)


@dataclass(frozen=True)
class BlowupPresentation:
    """k[x, y^{±1}, w]/(e^{α∨} − 1 − c_α·w) and its quotient at x = 0 (additive) or x = 1 (multiplicative)."""

    family: str
    law: GroupLawKind
    generator: RatFunc
    relation: LaurentPoly
    degenerate_relation: LaurentPoly
    expected_quotient: LaurentPoly

    @property
    def matches(self) -> bool:
        return self.degenerate_relation == self.expected_quotient


@dataclass(frozen=True)
class BlowupReport:
    family: str
    law: GroupLawKind
    telescoping: dict[int, bool]
    presentation: BlowupPresentation
    integral_in_homology: bool
    details: dict = field(default_factory=dict, compare=False)

    @property
    def verdict(self) -> bool:
        return all(self.telescoping.values()) and self.presentation.matches and self.integral_in_homology


def _check_datum(datum: RootDatum, law: GroupLaw) -> None:
    if datum.rank != 1 or datum.semisimple_rank != 1:
        raise ValueError(f"The blowup identity is checked on rank-one data, not {datum.family}.")
    if law.kind is GroupLawKind.FORMAL:
        raise ValueError("The blowup identity is checked for the additive and multiplicative laws.")


def blowup_ring(law: GroupLaw, datum: RootDatum) -> LaurentRing:
    """Coordinates of ℳ_{T,0}, the unit y = e^{ϖ∨} on Ť and the blowup generator w."""
    base = coordinate_ring(law, datum)
    return base.extend(COWEIGHT_VARIABLE, GENERATOR_VARIABLE, polynomial=(GENERATOR_VARIABLE,))


def _pieces(datum: RootDatum, law: GroupLaw, ring: LaurentRing) -> tuple[LaurentPoly, LaurentPoly]:
    alpha = datum.simple[0]
    c = euler_class(law, datum, alpha.vector, coordinate_ring(law, datum)).value
    assert isinstance(c, LaurentPoly)
    c_alpha = ring.embed(c)
    assert isinstance(c_alpha, LaurentPoly)
    coroot = ring.gen(COWEIGHT_VARIABLE) ** alpha.coroot[0]
    return c_alpha, coroot


def coroot_multiple(datum: RootDatum) -> int:
    """
    The k with α∨ = k·γ for the generator γ of Λ∨, read off from ⟨α, γ⟩ and ⟨α, α∨⟩ = 2.

    @param datum: A rank-one root datum.
    @return: 1 for SL2, 2 for PGL2.
    """
    k = Fraction(2) / datum.pair(datum.simple_roots[0], (1,))
    if k.denominator != 1:
        raise ValueError(f"α∨ is not a multiple of the generator of Λ∨ for {datum.family}.")
    return int(k)


def telescoping_identity(datum: RootDatum, law: GroupLaw, n: int) -> bool:
    """
    (e^{nα∨}−1)/c = (e^{α∨}−1)/c + (e^{(n−1)α∨}−1)/c + c·(e^{α∨}−1)/c·(e^{(n−1)α∨}−1)/c
    as rational functions.

    @param datum: A rank-one root datum.
    @param law: Additive or multiplicative.
    @param n: The multiple of α∨.
    @return: Whether the identity holds exactly.
    """
    ring = blowup_ring(law, datum)
    c, e = _pieces(datum, law, ring)

    def fraction(power: int) -> RatFunc:
        return (e**power - 1) / c

    lhs = fraction(n)
    rhs = fraction(1) + fraction(n - 1) + fraction(1) * fraction(n - 1) * c
    return simplify(lhs - rhs, ring).is_zero()


def blowup_presentation(datum: RootDatum, law: GroupLaw) -> BlowupPresentation:
    """
    The relation e^{α∨} − 1 = c_α·w and its degeneration.

    @param datum: SL2 or PGL2 (≅ SO(3)).
    @param law: Additive or multiplicative.
    @return: The presentation with the expected quotient y^k − 1 for α∨ = k·γ.
    """
    ring = blowup_ring(law, datum)
    c, e = _pieces(datum, law, ring)
    w = ring.gen(GENERATOR_VARIABLE)
    relation = e - 1 - c * w
    point = 0 if law.kind is GroupLawKind.ADDITIVE else 1
    degenerate = relation.substitute({name: point for name in coordinate_names(datum)}, ring)
    assert isinstance(degenerate, LaurentPoly)
    expected = ring.gen(COWEIGHT_VARIABLE) ** coroot_multiple(datum) - 1
    generator = (e - 1) / c
    return BlowupPresentation(datum.family, law.kind, generator, relation, degenerate, expected)


def blowup_identity_check(datum: RootDatum, law: GroupLaw, bound: int = 2) -> BlowupReport:
    """
    Verify the telescoping identity for n = 2..8, the degenerate presentation, and that (e^{α∨} − 1)/c_α pairs
    integrally with the ψ basis of the affine Grassmannian graph.

    @param datum: A rank-one root datum.
    @param law: Additive or multiplicative.
    @param bound: Length bound of the Grassmannian graph.
    @return: The report.
    """
    _check_datum(datum, law)
    telescoping = {n: telescoping_identity(datum, law, n) for n in TELESCOPING_RANGE}
    presentation = blowup_presentation(datum, law)
    graph = build_moment_graph(datum, None, law, bound)
    integral = is_integral_homology(blowup_generator(graph, datum.simple[0].vector), graph)
    report = BlowupReport(datum.family, law.kind, telescoping, presentation, integral)
    logger.info(
        "Blowup check for %s (%s): %s.", datum.family, law.kind.value, "verified" if report.verdict else "mismatch"
    )
    return report
