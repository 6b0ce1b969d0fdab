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
This module contains the quantized Coulomb branches of pure SL2 gauge theory in the shift-algebra model:
generators, relations in the free algebra, their exact verification, classical limits and Poisson data.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional, Union

import sympy
from sympy.parsing.sympy_parser import parse_expr

from gkm_workbench.exact_algebra import LaurentPoly, RatFunc, simplify
from gkm_workbench.group_law import GroupLaw, GroupLawKind
from gkm_workbench.shift_algebras import RelationReport, ShiftAlgebra, ShiftAlgebraElement

logger = logging.getLogger(__name__)

EPSILON = sympy.Symbol("epsilon")


@dataclass(frozen=True)
class CoulombRelation:
    """A relation lhs = rhs between words in the generators; `bracket` names [a, b] when lhs is a commutator."""

    name: str
    lhs: str
    rhs: str
    bracket: Optional[tuple[str, str]] = None


@dataclass
class CoulombPresentation:
    """Generators as shift-algebra elements and the relations they satisfy."""

    name: str
    algebra: ShiftAlgebra
    generators: dict[str, ShiftAlgebraElement]
    relations: tuple[CoulombRelation, ...]
    parameter: str
    quartic: str = field(default="quartic")

    @property
    def symbols(self) -> dict[str, sympy.Symbol]:
        """Noncommutative generator symbols plus the commutative deformation parameter."""
        table = {name: sympy.Symbol(name, commutative=False) for name in self.generators}
        table[self.parameter] = sympy.Symbol(self.parameter)
        return table

    def parse(self, text: str) -> sympy.Expr:
        return parse_expr(text, local_dict=self.symbols)

    def _coefficient(self, value: sympy.Expr) -> Union[LaurentPoly, RatFunc]:
        numerator, denominator = sympy.fraction(sympy.together(value))
        ring = self.algebra.ring
        return simplify(RatFunc(ring.from_sympy(numerator)) / ring.from_sympy(denominator), ring)

    def evaluate(self, expression: sympy.Expr) -> ShiftAlgebraElement:
        """
        Expand a word expression in the generators into shift-algebra normal form.

        @param expression: A sympy expression in the generator symbols and the parameter.
        @return: The element.
        """
        total = self.algebra.zero()
        for term in sympy.Add.make_args(sympy.expand(expression)):
            commutative, noncommutative = term.args_cnc()
            product = self.algebra.scalar(self._coefficient(sympy.Mul(*commutative)))
            for factor in noncommutative:
                base, power = factor.as_base_exp()
                product = product * self.generators[str(base)] ** int(power)
            total = total + product
        return total

    def commutator(self, a: str, b: str) -> ShiftAlgebraElement:
        return self.generators[a] * self.generators[b] - self.generators[b] * self.generators[a]

    def verify(self) -> list[RelationReport]:
        """
        Check every relation as an exact identity after expansion.

        @return: One report per relation.
        """
        reports = []
        for relation in self.relations:
            lhs = self.evaluate(self.parse(relation.lhs))
            rhs = self.evaluate(self.parse(relation.rhs))
            difference = lhs - rhs
            reports.append(RelationReport(relation.name, difference.is_zero(), str(lhs), str(rhs), str(difference)))
            if difference.is_zero():
                logger.debug("Coulomb %s relation %s holds.", self.name, relation.name)
            else:
                logger.error("Coulomb %s relation %s fails by %s.", self.name, relation.name, difference)
        return reports

    def involution(self, element: ShiftAlgebraElement) -> ShiftAlgebraElement:
        """The 𝐙/2 action t ↦ t^{-1} together with x ↦ −x (additive) or x ↦ x^{-1} (multiplicative)."""
        x = self.algebra.ring.gen(self.algebra.coordinates[0])
        image = -x if self.algebra.law.kind is GroupLawKind.ADDITIVE else x**-1
        name = self.algebra.coordinates[0]
        terms = {
            tuple(-c for c in weight): value.substitute({name: image}, self.algebra.ring)
            for weight, value in element.terms.items()
        }
        return ShiftAlgebraElement(self.algebra, terms)

    def fixed_generators(self) -> dict[str, bool]:
        return {name: self.involution(element) == element for name, element in self.generators.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoulombPresentation):
            return NotImplemented
        return (self.name, self.algebra, self.generators, self.relations, self.parameter) == (
            other.name,
            other.algebra,
            other.generators,
            other.relations,
            other.parameter,
        )


def _shift_algebra(kind: GroupLawKind) -> ShiftAlgebra:
    law = GroupLaw.additive() if kind is GroupLawKind.ADDITIVE else GroupLaw.multiplicative()
    deformation = "hbar" if kind is GroupLawKind.ADDITIVE else "q"
    return ShiftAlgebra(law, 1, coordinates=("x",), shifts=("t",), deformation=deformation)


def coulomb_3d(group: str = "SL2") -> CoulombPresentation:
    """
    Φ = x², U = t + t^{-1}, V = x^{-1}(t − t^{-1}) with g(x)·t^n = t^n·g(x + nħ).

    @param group: Only SL2.
    @return: The presentation.
    """
    if group.upper() != "SL2":
        raise ValueError(f"The Coulomb presentations are given for SL2, not {group}.")
    algebra = _shift_algebra(GroupLawKind.ADDITIVE)
    x = algebra.ring.gen("x")
    t, t_inverse = algebra.shift(1), algebra.shift(-1)
    generators = {
        "Phi": algebra.scalar(x * x),
        "U": t + t_inverse,
        "V": algebra.scalar(RatFunc(algebra.ring.one()) / x) * (t - t_inverse),
    }
    relations = (
        CoulombRelation("[Phi,V]", "Phi*V - V*Phi", "2*hbar*U - hbar**2*V", ("Phi", "V")),
        CoulombRelation("[Phi,U]", "Phi*U - U*Phi", "2*hbar*Phi*V - hbar**2*U", ("Phi", "U")),
        CoulombRelation("[U,V]", "U*V - V*U", "hbar*V**2", ("U", "V")),
        CoulombRelation("quartic", "(U + 2)*(U - 2)", "Phi*V**2 - hbar*U*V"),
    )
    return CoulombPresentation("3d", algebra, generators, relations, "hbar")


def coulomb_4d(group: str = "SL2") -> CoulombPresentation:
    """
    Ψ = x + x^{-1}, W = t + t^{-1}, Z = (x − x^{-1})^{-1}(t − t^{-1}) with g(x)·t^n = t^n·g(q^n x).

    The bracket [W, Z] and the signs of the two correction terms of the quartic are the ones that hold in this
    model; with xt = qtx they are forced by the t² coefficients.

    @param group: Only SL2.
    @return: The presentation.
    """
    if group.upper() != "SL2":
        raise ValueError(f"The Coulomb presentations are given for SL2, not {group}.")
    algebra = _shift_algebra(GroupLawKind.MULTIPLICATIVE)
    x = algebra.ring.gen("x")
    t, t_inverse = algebra.shift(1), algebra.shift(-1)
    generators = {
        "Psi": algebra.scalar(x + x**-1),
        "W": t + t_inverse,
        "Z": algebra.scalar(RatFunc(algebra.ring.one()) / (x - x**-1)) * (t - t_inverse),
    }
    correction = "(q - 1)**2/(2*q)"
    relations = (
        CoulombRelation(
            "[Psi,W]",
            "Psi*W - W*Psi",
            f"(q - 1)*(Psi**2 - 4)*Z - {correction}*((Psi**2 - 4)*Z + Psi*W)",
            ("Psi", "W"),
        ),
        CoulombRelation("[Psi,Z]", "Psi*Z - Z*Psi", f"(q - 1)*W - {correction}*(Psi*Z + W)", ("Psi", "Z")),
        CoulombRelation("[W,Z]", "W*Z - Z*W", f"(q - 1)*Psi*Z**2 - {correction}*(Psi*Z + W)*Z", ("W", "Z")),
        CoulombRelation(
            "quartic",
            "(W + 2)*(W - 2)",
            f"(Psi + 2)*(Psi - 2)*Z**2 + {correction}*(Psi**2 - 4)*Z**2 - (q**2 - 1)/(2*q)*Psi*W*Z",
        ),
    )
    return CoulombPresentation("4d", algebra, generators, relations, "q")


def build_presentation(dimension: int) -> CoulombPresentation:
    if dimension == 3:
        return coulomb_3d()
    if dimension == 4:
        return coulomb_4d()
    raise ValueError(f"No finite Coulomb presentation is available in dimension {dimension}.")


# classical limit


@dataclass(frozen=True)
class ClassicalLimit:
    """The commutative quartic at the classical parameter value and the Poisson brackets of the generators."""

    presentation: str
    generators: tuple[sympy.Symbol, ...]
    quartic: sympy.Expr
    brackets: dict[tuple[str, str], sympy.Expr]

    def bracket(self, f: sympy.Expr, g: sympy.Expr) -> sympy.Expr:
        """{f, g} = Σ ∂_a f ∂_b g {a, b} extended from the generators."""
        total = sympy.Integer(0)
        for a, b in itertools.permutations(self.generators, 2):
            total += sympy.diff(f, a) * sympy.diff(g, b) * self.generator_bracket(a, b)
        return sympy.expand(total)

    def generator_bracket(self, a: sympy.Symbol, b: sympy.Symbol) -> sympy.Expr:
        if (str(a), str(b)) in self.brackets:
            return self.brackets[(str(a), str(b))]
        if (str(b), str(a)) in self.brackets:
            return -self.brackets[(str(b), str(a))]
        return sympy.Integer(0)

    def jacobi(self) -> sympy.Expr:
        """Cyclic sum {a,{b,c}} + {b,{c,a}} + {c,{a,b}} on the three generators; zero for a Poisson bracket."""
        a, b, c = self.generators
        total = (
            self.bracket(a, self.generator_bracket(b, c))
            + self.bracket(b, self.generator_bracket(c, a))
            + self.bracket(c, self.generator_bracket(a, b))
        )
        return sympy.expand(total)

    def casimir_defects(self) -> dict[str, sympy.Expr]:
        """{quartic, a} for every generator a; all vanish when the quartic is Poisson-central."""
        return {str(a): self.bracket(self.quartic, a) for a in self.generators}


def classical_limit(presentation: CoulombPresentation) -> ClassicalLimit:
    """
    Set ħ = 0 (resp. q = 1) in the quartic and read off {a, b} as [a, b]/ħ (resp. [a, b]/(q − 1)) at the limit.

    @param presentation: A verified presentation.
    @return: The classical data.
    """
    commutative = {name: sympy.Symbol(name) for name in presentation.generators}
    parameter = sympy.Symbol(presentation.parameter)
    additive = presentation.algebra.law.kind is GroupLawKind.ADDITIVE
    deformation = EPSILON if additive else 1 + EPSILON

    def commute(text: str) -> sympy.Expr:
        return parse_expr(text, local_dict={**commutative, presentation.parameter: parameter})

    quartic_relation = next(r for r in presentation.relations if r.name == presentation.quartic)
    difference = commute(quartic_relation.lhs) - commute(quartic_relation.rhs)
    quartic = sympy.expand(difference.subs(parameter, 0 if additive else 1))

    brackets: dict[tuple[str, str], sympy.Expr] = {}
    for relation in presentation.relations:
        if relation.bracket is None:
            continue
        rhs = commute(relation.rhs).subs(parameter, deformation)
        brackets[relation.bracket] = sympy.expand(sympy.cancel(rhs / EPSILON).subs(EPSILON, 0))
        logger.debug("Poisson bracket {%s, %s} = %s.", *relation.bracket, brackets[relation.bracket])
    return ClassicalLimit(presentation.name, tuple(commutative.values()), quartic, brackets)
