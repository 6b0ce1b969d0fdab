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
This module contains the Kostant-slice centralizer computations for SL2 and PGL2: the Borel elements g with
Ad_g(M) = M for the slice element M over a torus point, solved for the off-diagonal Borel parameter.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import sympy

from gkm_workbench.exact_algebra import LaurentRing, RatFunc
from gkm_workbench.group_law import GroupLawKind

logger = logging.getLogger(__name__)

X, A, B = sympy.symbols("x a b")

SUPPORTED_GROUPS = ("SL2", "PGL2")


@dataclass(frozen=True)
class CentralizerSolution:
    """The constraint b = b(x, a) cutting the centralizer out of the Borel subgroup."""

    group: str
    law: GroupLawKind
    free_params: tuple[str, ...]
    constraint: RatFunc
    slice_element: sympy.Matrix
    borel_element: sympy.Matrix

    def expression(self) -> sympy.Expr:
        return self.constraint.to_sympy()

    def residual(self) -> sympy.Matrix:
        """Ad_g(M) − M with b replaced by the constraint; zero for a valid solution."""
        g = self.borel_element.subs(B, self.expression())
        return sympy.simplify(g * self.slice_element * g.inv() - self.slice_element)

    def is_exact(self) -> bool:
        return self.residual().is_zero_matrix is True

    def ring_generators(self) -> tuple[str, ...]:
        """Generators of the fiber-product coordinate ring k[x, a^{±1}, b]/(b − constraint)."""
        x_generator = "x" if self.law is GroupLawKind.ADDITIVE else "x^{±1}"
        return (x_generator, "a^{±1}", f"b = {self.constraint}")

    def degeneration(self) -> Optional[sympy.Expr]:
        """
        The derivative-type limit of b at the degenerate torus point (x = 0, resp. x = 1) along a = 1.

        @return: (∂num/∂a)/(∂den/∂x) at the point when numerator and denominator both vanish there, else None.
        """
        point = 0 if self.law is GroupLawKind.ADDITIVE else 1
        numerator, denominator = sympy.fraction(sympy.together(self.expression()))
        at_point = {X: point, A: 1}
        if numerator.subs(at_point) != 0 or denominator.subs(at_point) != 0:
            return None
        return sympy.simplify(sympy.diff(numerator, A).subs(at_point) / sympy.diff(denominator, X).subs(at_point))


def slice_element(group: str, law: GroupLawKind) -> sympy.Matrix:
    """
    The element of the Kostant slice over the torus point x.

    @param group: SL2 or PGL2.
    @param law: Additive (Lie algebra, x + f) or multiplicative (group, x·f).
    @return: The 2×2 matrix.
    """
    if law is GroupLawKind.ADDITIVE:
        if group == "SL2":
            return sympy.Matrix([[X, 0], [1, -X]])
        return sympy.Matrix([[X, 0], [1, 0]])
    if group == "SL2":
        return sympy.Matrix([[X, 0], [1 / X, 1 / X]])
    return sympy.Matrix([[X, 0], [1, 1]])


def borel_element(group: str) -> sympy.Matrix:
    """A generic element of the lower Borel subgroup: diag(a, a^{-1}) for SL2 and diag(a, 1) for PGL2."""
    if group == "SL2":
        return sympy.Matrix([[A, 0], [B, 1 / A]])
    return sympy.Matrix([[A, 0], [B, 1]])


def kostant_centralizer_solve(group: str, law: GroupLawKind) -> CentralizerSolution:
    """
    Solve Ad_g(M) − M = 0 for the off-diagonal Borel parameter b.

    @param group: SL2 or PGL2.
    @param law: Additive or multiplicative.
    @return: The centralizer solution.
    """
    group = group.upper()
    if group not in SUPPORTED_GROUPS:
        raise ValueError(f"Kostant slice computations cover {', '.join(SUPPORTED_GROUPS)}, not {group}.")
    if law is GroupLawKind.FORMAL:
        raise ValueError("Kostant slice computations cover the additive and multiplicative laws.")

    m = slice_element(group, law)
    g = borel_element(group)
    difference = sympy.simplify(g * m * g.inv() - m)
    equations = [entry for entry in difference if sympy.simplify(entry) != 0]
    logger.debug("Ad_g(M) - M for %s (%s): %s", group, law.value, difference.tolist())

    solutions = sympy.solve(equations, B, dict=True)
    if len(solutions) != 1:
        raise ArithmeticError(f"Expected a unique centralizer constraint for {group}, got {solutions}.")
    value = sympy.factor(sympy.together(solutions[0][B]))

    ring = LaurentRing(("x", "a"), polynomial=("x",)) if law is GroupLawKind.ADDITIVE else LaurentRing(("x", "a"))
    numerator, denominator = sympy.fraction(sympy.together(value))
    constraint = RatFunc(ring.from_sympy(sympy.expand(numerator))) / ring.from_sympy(sympy.expand(denominator))
    solution = CentralizerSolution(group, law, ("x", "a"), constraint, m, g)
    logger.info("Centralizer of the %s Kostant slice (%s): b = %s.", group, law.value, constraint)
    return solution
