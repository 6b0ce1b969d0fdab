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
This module contains the noncommutative operator algebras: 𝐆₀-differential operators in normal form with
their Mellin representation, nil-Hecke operators in Frac(𝒪_T) ⋊ Q[W], the F-de Rham table and spherical
products e·a·e.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence, Union

from gkm_workbench.exact_algebra import (
    GroupAction,
    LaurentPoly,
    LaurentRing,
    RatFunc,
    Substitution,
    apply_action,
    simplify,
    symmetrize,
)
from gkm_workbench.group_law import (
    GroupLaw,
    GroupLawKind,
    Series,
    TruncationError,
    coordinate_ring,
    euler_class,
    f_add,
    n_series_at,
)
from gkm_workbench.root_system import RootDatum, WeylElement, WeylGroup

logger = logging.getLogger(__name__)

Coefficient = Union[LaurentPoly, RatFunc]


@dataclass(frozen=True)
class RelationReport:
    """Verdict on one relation: both sides in normal form and the discrepancy when they differ."""

    relation: str
    verdict: bool
    lhs: str
    rhs: str
    witness: str = "0"
    details: dict = field(default_factory=dict, compare=False)


def _indexed(prefix: str, rank: int) -> tuple[str, ...]:
    return (prefix,) if rank == 1 else tuple(f"{prefix}{i + 1}" for i in range(rank))


class ShiftAlgebra:
    """
    The algebra of 𝐆₀-differential operators Σ_λ x_λ·g_λ(y).

    x_λ·x_μ = x_{λ+μ} and g(y)·x_μ = x_μ·μ*(g)(y) with μ*(y_i) = y_i +_F [μ_i]_F(t_def).
    """

    def __init__(
        self,
        law: GroupLaw,
        rank: int = 1,
        coordinates: Optional[Sequence[str]] = None,
        shifts: Optional[Sequence[str]] = None,
        deformation: Optional[str] = None,
    ) -> None:
        self.law: GroupLaw = law
        self.rank: int = rank
        self.coordinates: tuple[str, ...] = tuple(coordinates) if coordinates else _indexed("y", rank)
        self.shifts: tuple[str, ...] = tuple(shifts) if shifts else _indexed("x", rank)
        multiplicative = law.kind is GroupLawKind.MULTIPLICATIVE
        self.deformation: str = deformation or ("q" if multiplicative else "hbar")
        if len(self.coordinates) != rank or len(self.shifts) != rank:
            raise ValueError(f"Shift algebra of rank {rank} needs {rank} coordinates and {rank} shifts.")
        names = self.coordinates + (self.deformation,)
        self.ring: LaurentRing = LaurentRing(names) if multiplicative else LaurentRing(names, polynomial=names)
        module = self.shifts + (self.deformation,)
        self.module_ring: LaurentRing = (
            LaurentRing(module) if multiplicative else LaurentRing(module, polynomial=(self.deformation,))
        )
        self._twists: dict[tuple[int, ...], dict[str, Series]] = {}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShiftAlgebra):
            return NotImplemented
        return (self.law, self.coordinates, self.shifts, self.deformation) == (
            other.law,
            other.coordinates,
            other.shifts,
            other.deformation,
        )

    def __hash__(self) -> int:
        return hash((self.law, self.coordinates, self.shifts, self.deformation))

    # elements

    def element(self, terms: Mapping[Sequence[int], Union[Coefficient, int, Fraction]]) -> "ShiftAlgebraElement":
        return ShiftAlgebraElement(self, {tuple(k): v for k, v in terms.items()})

    def zero(self) -> "ShiftAlgebraElement":
        return ShiftAlgebraElement(self, {})

    def one(self) -> "ShiftAlgebraElement":
        return self.scalar(1)

    def scalar(self, value: Union[Coefficient, int, Fraction]) -> "ShiftAlgebraElement":
        return self.element({(0,) * self.rank: value})

    def shift(self, weight: Union[int, Sequence[int]]) -> "ShiftAlgebraElement":
        """The group-ring monomial x_λ."""
        key = (weight,) if isinstance(weight, int) else tuple(weight)
        return self.element({key: 1})

    def coordinate(self, index: int = 0) -> "ShiftAlgebraElement":
        return self.scalar(self.ring.gen(self.coordinates[index]))

    def parameter(self) -> LaurentPoly:
        return self.ring.gen(self.deformation)

    def parse_coefficient(self, text: str) -> Coefficient:
        return simplify(self.ring.parse_fraction(text), self.ring)

    # twist

    def twist_images(self, weight: Sequence[int]) -> dict[str, Series]:
        """
        Images μ*(y_i) of the coordinates.

        @param weight: The coweight μ.
        @return: y_i + μ_i·ħ, q^{μ_i}·y_i, or F(y_i, [μ_i]_F(t)).
        """
        key = tuple(weight)
        if key not in self._twists:
            parameter = self.parameter()
            images: dict[str, Series] = {}
            for name, power in zip(self.coordinates, key):
                y = self.ring.gen(name)
                if self.law.kind is GroupLawKind.ADDITIVE:
                    images[name] = y + parameter * power
                elif self.law.kind is GroupLawKind.MULTIPLICATIVE:
                    images[name] = y * parameter**power
                else:
                    images[name] = f_add(self.law, y, n_series_at(self.law, power, parameter))
            self._twists[key] = images
        return self._twists[key]

    def twist(self, weight: Sequence[int], value: Coefficient) -> Coefficient:
        """
        Apply μ* to a coefficient.

        @param weight: The coweight μ.
        @param value: The coefficient g.
        @return: μ*(g).
        """
        if not any(weight) or value.is_zero():
            return value
        if self.law.kind is GroupLawKind.FORMAL:
            if not isinstance(value, LaurentPoly) or value.total_degree() > self.law.order:
                raise TruncationError(f"Coefficient '{value}' exceeds the truncation order {self.law.order}.")
            image = value.substitute(self.twist_images(weight), self.ring)
            assert isinstance(image, LaurentPoly)
            return image.truncate(self.law.order)
        return simplify(value.substitute(self.twist_images(weight), self.ring), self.ring)

    # product

    def multiply(self, a: "ShiftAlgebraElement", b: "ShiftAlgebraElement") -> "ShiftAlgebraElement":
        """
        (x_λ g)(x_μ h) = x_{λ+μ} μ*(g) h.

        @param a: Left factor.
        @param b: Right factor.
        @return: The product in normal form.
        """
        if a.algebra != self or b.algebra != self:
            raise ValueError("Shift algebra elements belong to different algebras.")
        terms: dict[tuple[int, ...], Coefficient] = {}
        for weight_a, g in a.terms.items():
            for weight_b, h in b.terms.items():
                key = tuple(p + r for p, r in zip(weight_a, weight_b))
                product = self.twist(weight_b, g) * h
                terms[key] = terms[key] + product if key in terms else product  # type: ignore[operator]
        return ShiftAlgebraElement(self, terms)

    # Mellin representation

    def evaluation(self, weight: Sequence[int]) -> dict[str, Series]:
        """Values of the coordinates on x^ν: y_i ↦ [ν_i]_F evaluated at the deformation coordinate."""
        parameter = self.module_ring.gen(self.deformation)
        values: dict[str, Series] = {}
        for name, power in zip(self.coordinates, weight):
            if self.law.kind is GroupLawKind.ADDITIVE:
                values[name] = parameter * power
            elif self.law.kind is GroupLawKind.MULTIPLICATIVE:
                values[name] = parameter**power
            else:
                values[name] = n_series_at(self.law, power, parameter)
        return values

    def mellin_act(self, a: "ShiftAlgebraElement", p: Coefficient) -> Coefficient:
        """
        Act on the module k[ħ][Λ]: coefficients evaluate on x^ν, then x_λ multiplies by x^λ.

        @param a: The operator.
        @param p: A Laurent polynomial in the shift variables (denominators only in the deformation coordinate).
        @return: a·p.
        """
        if isinstance(p, RatFunc):
            return simplify(RatFunc.coerce(self.mellin_act(a, p.numerator)) / p.denominator, self.module_ring)
        if p.ring != self.module_ring:
            raise ValueError(f"Module elements live in {self.module_ring.variables}, not {p.ring.variables}.")
        total: Coefficient = self.module_ring.zero()
        for exponent, coefficient in p.terms.items():
            weight = exponent[: self.rank]
            base = self.module_ring.monomial(exponent, coefficient)
            values = self.evaluation(weight)
            for shift, g in a.terms.items():
                factor = g.substitute(values, self.module_ring)
                shift_exponent = tuple(shift) + (0,) * (self.module_ring.ngens - self.rank)
                total = total + factor * base * self.module_ring.monomial(shift_exponent)
        return simplify(total, self.module_ring)

    def module_monomial(self, weight: Union[int, Sequence[int]]) -> LaurentPoly:
        key = (weight,) if isinstance(weight, int) else tuple(weight)
        return self.module_ring.monomial(key + (0,))

    def random_element(self, rng: random.Random, degree: int, terms: int = 3) -> "ShiftAlgebraElement":
        """A random operator with polynomial coefficients of total degree ≤ degree and shifts in [−2, 2]."""
        data: dict[tuple[int, ...], Coefficient] = {}
        for _ in range(terms):
            shift = tuple(rng.randint(-2, 2) for _ in range(self.rank))
            monomials = {}
            for _ in range(3):
                exponent = [0] * self.ring.ngens
                for _ in range(rng.randint(0, degree)):
                    exponent[rng.randrange(self.ring.ngens)] += 1
                monomials[tuple(exponent)] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            data[shift] = LaurentPoly(self.ring, monomials)
        return ShiftAlgebraElement(self, data)


class ShiftAlgebraElement:
    """An element Σ_λ x_λ·g_λ in normal form: group-ring monomial on the left, coefficient on the right."""

    __slots__ = ("algebra", "terms")

    def __init__(
        self, algebra: ShiftAlgebra, terms: Mapping[tuple[int, ...], Union[Coefficient, int, Fraction]]
    ) -> None:
        self.algebra = algebra
        clean: dict[tuple[int, ...], Coefficient] = {}
        for weight, value in terms.items():
            if len(weight) != algebra.rank:
                raise ValueError(f"Coweight {weight} does not have rank {algebra.rank}.")
            reduced = simplify(value, algebra.ring)
            if not reduced.is_zero():
                clean[tuple(weight)] = reduced
        self.terms: dict[tuple[int, ...], Coefficient] = clean

    def _coerce(self, other: object) -> "ShiftAlgebraElement":
        if isinstance(other, ShiftAlgebraElement):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly, RatFunc)):
            return self.algebra.scalar(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "ShiftAlgebraElement":
        other_element = self._coerce(other)
        if other_element is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, ...], Coefficient] = dict(self.terms)
        for weight, value in other_element.terms.items():
            terms[weight] = terms[weight] + value if weight in terms else value  # type: ignore[operator]
        return ShiftAlgebraElement(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self) -> "ShiftAlgebraElement":
        return ShiftAlgebraElement(self.algebra, {w: -v for w, v in self.terms.items()})

    def __sub__(self, other: object) -> "ShiftAlgebraElement":
        other_element = self._coerce(other)
        if other_element is NotImplemented:
            return NotImplemented
        return self + (-other_element)

    def __rsub__(self, other: object) -> "ShiftAlgebraElement":
        return (-self) + other

    def __mul__(self, other: object) -> "ShiftAlgebraElement":
        other_element = self._coerce(other)
        if other_element is NotImplemented:
            return NotImplemented
        return self.algebra.multiply(self, other_element)

    def __rmul__(self, other: object) -> "ShiftAlgebraElement":
        other_element = self._coerce(other)
        if other_element is NotImplemented:
            return NotImplemented
        return self.algebra.multiply(other_element, self)

    def __pow__(self, power: int) -> "ShiftAlgebraElement":
        if power < 0:
            raise ValueError("Shift algebra elements have no general inverse.")
        result = self.algebra.one()
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly, RatFunc)):
            other = self.algebra.scalar(other)
        if not isinstance(other, ShiftAlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, weight: Union[int, Sequence[int]]) -> Coefficient:
        key = (weight,) if isinstance(weight, int) else tuple(weight)
        return self.terms.get(key, self.algebra.ring.zero())

    def map_coefficients(self, function: Callable[[Coefficient], Coefficient]) -> "ShiftAlgebraElement":
        return ShiftAlgebraElement(self.algebra, {w: function(v) for w, v in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for weight in sorted(self.terms):
            monomial = "*".join(
                name if power == 1 else f"{name}^{power}" for name, power in zip(self.algebra.shifts, weight) if power
            )
            coefficient = str(self.terms[weight])
            pieces.append(f"{monomial}*({coefficient})" if monomial else f"({coefficient})")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"ShiftAlgebraElement({self})"


def shift_multiply(a: ShiftAlgebraElement, b: ShiftAlgebraElement) -> ShiftAlgebraElement:
    return a.algebra.multiply(a, b)


def commutator(a: ShiftAlgebraElement, b: ShiftAlgebraElement) -> ShiftAlgebraElement:
    return a * b - b * a


def mellin_act(a: ShiftAlgebraElement, p: Coefficient) -> Coefficient:
    return a.algebra.mellin_act(a, p)


def normalized_theta_check(law: GroupLaw) -> RelationReport:
    """
    The normalized generator Θ = y/ħ (additive) or (y−1)/(q−1) (multiplicative) against Θx = x(Θ+1), x(qΘ+1).

    @param law: Additive or multiplicative.
    @return: The relation report.
    """
    algebra = ShiftAlgebra(law)
    parameter = algebra.parameter()
    y = algebra.ring.gen(algebra.coordinates[0])
    x = algebra.shift(1)
    if law.kind is GroupLawKind.ADDITIVE:
        theta = algebra.scalar(RatFunc(y) / parameter)
        relation, rhs = "Θx = x(Θ+1)", x * (theta + 1)
    elif law.kind is GroupLawKind.MULTIPLICATIVE:
        theta = algebra.scalar(RatFunc(y - 1) / (parameter - 1))
        relation, rhs = "Θx = x(qΘ+1)", x * (theta * parameter + 1)
    else:
        raise ValueError("The normalized Θ relation is stated for the additive and multiplicative laws.")
    lhs = theta * x
    difference = lhs - rhs
    return RelationReport(relation, difference.is_zero(), str(lhs), str(rhs), str(difference))


# nil-Hecke operators


class NilHeckeAlgebra:
    """Frac(𝒪_T) ⋊ Q[W] acting on the coordinate ring of ℳ_{T,0} by substitution."""

    def __init__(self, datum: RootDatum, law: GroupLaw) -> None:
        if law.kind is GroupLawKind.FORMAL:
            raise ValueError("Nil-Hecke operators are built for the additive and multiplicative laws.")
        self.datum: RootDatum = datum
        self.law: GroupLaw = law
        self.weyl: WeylGroup = WeylGroup(datum)
        self.ring: LaurentRing = coordinate_ring(law, datum)
        self._substitutions: dict[WeylElement, Substitution] = {}
        generators = [self.substitution(self.weyl.simple_reflection(i)) for i in self.weyl.generator_indices()]
        self.action: GroupAction = GroupAction(self.ring, generators, order=len(self.weyl.elements))

    def character(self, weight: Sequence[int]) -> LaurentPoly:
        """The coordinate function of λ: c_λ for the additive law, e^λ for the multiplicative one."""
        value = euler_class(self.law, self.datum, tuple(weight), self.ring).value
        assert isinstance(value, LaurentPoly)
        return value + 1 if self.law.kind is GroupLawKind.MULTIPLICATIVE else value

    def substitution(self, w: WeylElement) -> Substitution:
        if w not in self._substitutions:
            images = []
            for i in range(self.datum.rank):
                basis = tuple(1 if j == i else 0 for j in range(self.datum.rank))
                images.append(self.character(w.act_on_character(basis)))
            self._substitutions[w] = Substitution(self.ring, tuple(images))
        return self._substitutions[w]

    def operator(self, terms: Mapping[WeylElement, Union[Coefficient, int, Fraction]]) -> "NilHeckeOperator":
        return NilHeckeOperator(self, terms)

    def identity(self) -> "NilHeckeOperator":
        return self.operator({self.weyl.identity(): 1})

    def multiplication(self, value: Union[Coefficient, int, Fraction]) -> "NilHeckeOperator":
        return self.operator({self.weyl.identity(): value})

    def reflection(self, index: int) -> "NilHeckeOperator":
        return self.operator({self.weyl.simple_reflection(index): 1})

    def euler(self, root: Sequence[int]) -> LaurentPoly:
        value = euler_class(self.law, self.datum, tuple(root), self.ring).value
        assert isinstance(value, LaurentPoly)
        return value

    def divided_difference(self, index: int) -> "NilHeckeOperator":
        """T_i = (1/c_{α_i})(s_i − 1)."""
        inverse = RatFunc(self.ring.one()) / self.euler(self.datum.simple_roots[index - 1])
        return self.operator({self.weyl.simple_reflection(index): inverse, self.weyl.identity(): -inverse})

    def spanning_set(self, degree: int) -> list[LaurentPoly]:
        """
        Monomials the operator identities are tested on.

        @param degree: Total degree bound (additive) or exponent box [−degree, degree] (multiplicative).
        @return: The monomials.
        """
        rank = self.ring.ngens
        if self.law.kind is GroupLawKind.MULTIPLICATIVE:
            exponents = itertools.product(range(-degree, degree + 1), repeat=rank)
        else:
            exponents = (e for e in itertools.product(range(degree + 1), repeat=rank) if sum(e) <= degree)
        return [self.ring.monomial(e) for e in exponents]


class NilHeckeOperator:
    """A formal sum Σ_w a_w·w with a_w ∈ Frac(𝒪_T); composition is (a·u)(b·v) = a·u(b)·uv."""

    __slots__ = ("algebra", "terms")

    def __init__(
        self, algebra: NilHeckeAlgebra, terms: Mapping[WeylElement, Union[Coefficient, int, Fraction]]
    ) -> None:
        self.algebra = algebra
        clean: dict[WeylElement, Coefficient] = {}
        for w, value in terms.items():
            reduced = simplify(value, algebra.ring)
            if not reduced.is_zero():
                clean[algebra.weyl.lookup(w) or w] = reduced
        self.terms: dict[WeylElement, Coefficient] = clean

    def __add__(self, other: "NilHeckeOperator") -> "NilHeckeOperator":
        terms: dict[WeylElement, Coefficient] = dict(self.terms)
        for w, value in other.terms.items():
            terms[w] = terms[w] + value if w in terms else value  # type: ignore[operator]
        return NilHeckeOperator(self.algebra, terms)

    def __neg__(self) -> "NilHeckeOperator":
        return NilHeckeOperator(self.algebra, {w: -v for w, v in self.terms.items()})

    def __sub__(self, other: "NilHeckeOperator") -> "NilHeckeOperator":
        return self + (-other)

    def __mul__(self, other: "NilHeckeOperator") -> "NilHeckeOperator":
        weyl = self.algebra.weyl
        terms: dict[WeylElement, Coefficient] = {}
        for u, a in self.terms.items():
            substitution = self.algebra.substitution(u)
            for v, b in other.terms.items():
                key = weyl.multiply(u, v)
                product = a * apply_action(substitution, b)
                terms[key] = terms[key] + product if key in terms else product  # type: ignore[operator]
        return NilHeckeOperator(self.algebra, terms)

    def __pow__(self, power: int) -> "NilHeckeOperator":
        result = self.algebra.identity()
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NilHeckeOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def apply(self, p: Coefficient) -> Coefficient:
        """
        Act on a function: Σ_w a_w·w(p).

        @param p: A Laurent polynomial or rational function on ℳ_{T,0}.
        @return: The image, reduced.
        """
        total: Coefficient = self.algebra.ring.zero()
        for w, a in self.terms.items():
            total = total + a * apply_action(self.algebra.substitution(w), p)
        return simplify(total, self.algebra.ring)

    def agrees_on(self, other: "NilHeckeOperator", spanning_set: Sequence[LaurentPoly]) -> bool:
        return all(self.apply(p) == other.apply(p) for p in spanning_set)

    def normal_form(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: (item[0].length, item[0].word))
        return " + ".join(f"({value})*[{w}]" for w, value in ordered)

    def __str__(self) -> str:
        return self.normal_form()


def nil_hecke_apply(datum: RootDatum, root: Sequence[int], p: LaurentPoly, law: GroupLaw) -> LaurentPoly:
    """
    T_α(p) = (s_α(p) − p)/c_α with exact division.

    @param datum: The root datum.
    @param root: α, a root.
    @param p: A Laurent polynomial in the coordinates.
    @param law: Additive or multiplicative.
    @return: The divided difference.
    """
    algebra = NilHeckeAlgebra(datum, law)
    alpha = datum.root(root)
    reflection = algebra.substitution(algebra.weyl.reflection(alpha))
    moved = apply_action(reflection, p)
    assert isinstance(moved, LaurentPoly)
    return (moved - p).exact_divide(algebra.euler(alpha.vector))


def _braid_order(datum: RootDatum, i: int, j: int) -> int:
    product = datum.cartan_matrix[i - 1][j - 1] * datum.cartan_matrix[j - 1][i - 1]
    return {0: 2, 1: 3, 2: 4, 3: 6}[product]


def _operator_report(
    relation: str, lhs: NilHeckeOperator, rhs: NilHeckeOperator, spanning_set: Sequence[LaurentPoly]
) -> RelationReport:
    discrepancy = lhs - rhs
    on_span = discrepancy.agrees_on(lhs.algebra.multiplication(0), spanning_set)
    return RelationReport(
        relation,
        discrepancy.is_zero() and on_span,
        lhs.normal_form(),
        rhs.normal_form(),
        discrepancy.normal_form(),
        {"spanning_set_size": len(spanning_set), "agrees_on_spanning_set": on_span},
    )


def _random_function(algebra: NilHeckeAlgebra, rng: random.Random, degree: int) -> LaurentPoly:
    span = algebra.spanning_set(degree)
    picks = rng.sample(span, min(3, len(span)))
    return sum((p * rng.randint(-3, 3) for p in picks), algebra.ring.zero())


def nil_hecke_relations_check(
    datum: RootDatum, law: GroupLaw, degree: int = 4, trials: int = 3, seed: int = 0
) -> list[RelationReport]:
    """
    Check the quadratic, Leibniz and (rank 2) braid relations of the divided-difference operators.

    @param datum: The root datum.
    @param law: Additive or multiplicative.
    @param degree: Degree bound of the monomial spanning set.
    @param trials: Random functions per Leibniz check.
    @param seed: Seed of the random functions.
    @return: One report per relation and simple root.
    """
    algebra = NilHeckeAlgebra(datum, law)
    span = algebra.spanning_set(degree)
    rng = random.Random(seed)
    reports = []
    indices = algebra.weyl.generator_indices()
    for i in indices:
        t = algebra.divided_difference(i)
        if law.kind is GroupLawKind.MULTIPLICATIVE:
            reports.append(_operator_report(f"T_{i}^2 = T_{i}", t * t, t, span))
        else:
            reports.append(_operator_report(f"T_{i}^2 = 0", t * t, algebra.multiplication(0), span))
        for _ in range(trials):
            f = _random_function(algebra, rng, min(degree, 2))
            moved = apply_action(algebra.substitution(algebra.weyl.simple_reflection(i)), f)
            lhs = algebra.multiplication(f) * t
            rhs = t * algebra.multiplication(moved) + algebra.multiplication(t.apply(f))
            reports.append(_operator_report(f"f*T_{i} = T_{i}*s_{i}(f) + T_{i}(f) [f = {f}]", lhs, rhs, span))
    for i, j in itertools.combinations(indices, 2):
        m = _braid_order(datum, i, j)
        ti, tj = algebra.divided_difference(i), algebra.divided_difference(j)
        reports.append(_operator_report(f"(T_{i}T_{j})^{m} = (T_{j}T_{i})^{m}", (ti * tj) ** m, (tj * ti) ** m, span))
        left, right = algebra.identity(), algebra.identity()
        for k in range(m):
            left = left * (ti if k % 2 == 0 else tj)
            right = right * (tj if k % 2 == 0 else ti)
        reports.append(_operator_report(f"T_{i}T_{j}T_{i}... = T_{j}T_{i}T_{j}... ({m} factors)", left, right, span))
    for report in reports:
        logger.debug("Nil-Hecke relation %s: %s", report.relation, "holds" if report.verdict else "fails")
    return reports


def multiplicative_hecke_formula(datum: RootDatum, weight: Sequence[int], index: int = 1) -> RelationReport:
    """
    T_α(e^λ) against −e^{s_α λ}(1 + e^α + ... + e^{(k−1)α}) with k = ⟨λ, α∨⟩,
    and against its mirror for k < 0.

    @param datum: The root datum.
    @param weight: λ.
    @param index: Simple root index.
    @return: The relation report.
    """
    law = GroupLaw.multiplicative()
    algebra = NilHeckeAlgebra(datum, law)
    alpha = datum.simple[index - 1]
    k = int(datum.pair(weight, alpha.coroot))
    lhs = algebra.divided_difference(index).apply(algebra.character(weight))
    reflected = datum.reflect_character(alpha, weight)
    e_alpha = algebra.character(alpha.vector)
    if k >= 0:
        geometric = sum((e_alpha**j for j in range(k)), algebra.ring.zero())
        rhs = -algebra.character(reflected) * geometric
    else:
        geometric = sum((e_alpha**j for j in range(-k)), algebra.ring.zero())
        rhs = algebra.character(weight) * geometric
    difference = simplify(lhs - rhs, algebra.ring)
    return RelationReport(f"T_{index}(e^{list(weight)})", difference.is_zero(), str(lhs), str(rhs), str(difference))


# F-de Rham


@dataclass(frozen=True)
class DeRhamTable:
    """The map n ↦ [n]_F(t) describing x^n ↦ [n]_F x^n dx, with its homomorphism check."""

    law: GroupLaw
    entries: dict[int, Series]
    homomorphism: bool
    failures: tuple[tuple[int, int], ...] = ()

    def differential(self, n: int) -> Series:
        return self.entries[n]


def de_rham_ring(law: GroupLaw) -> LaurentRing:
    if law.kind is GroupLawKind.MULTIPLICATIVE:
        return LaurentRing(("q",))
    return LaurentRing(("hbar",), polynomial=("hbar",))


def f_de_rham(law: GroupLaw, n_max: int, order: Optional[int] = None) -> DeRhamTable:
    """
    The table n ↦ [n]_F for |n| ≤ n_max, at t = ħ (additive, formal) or t = q − 1 (multiplicative).

    @param law: The group law.
    @param n_max: Largest |n|.
    @param order: Requested precision for the formal kind.
    @return: The table with the check f(n+m) = f(n) +_F f(m).
    """
    if order is not None and law.kind is GroupLawKind.FORMAL and order > law.order:
        raise TruncationError(f"Requested order {order} exceeds the law's truncation order {law.order}.")
    ring = de_rham_ring(law)
    parameter = ring.gen(ring.variables[0])
    t = parameter - 1 if law.kind is GroupLawKind.MULTIPLICATIVE else parameter
    entries = {n: n_series_at(law, n, t) for n in range(-n_max, n_max + 1)}
    failures = []
    for n, m in itertools.product(range(-n_max, n_max + 1), repeat=2):
        if abs(n + m) > n_max:
            continue
        if simplify(f_add(law, entries[n], entries[m]) - entries[n + m], ring) != ring.zero():
            failures.append((n, m))
    logger.debug("F-de Rham table for %s up to %s: %s failures.", law.kind.value, n_max, len(failures))
    return DeRhamTable(law, entries, not failures, tuple(failures))


# spherical products


SphericalFactor = Union[ShiftAlgebraElement, NilHeckeOperator]


@dataclass(frozen=True)
class SphericalOperator:
    """The operator e·a_1·e·a_2·...·a_k·e with e the symmetrizer of `action`."""

    factors: tuple[SphericalFactor, ...]
    action: GroupAction

    def apply(self, p: Coefficient) -> Coefficient:
        value = symmetrize(p, self.action)
        for factor in reversed(self.factors):
            if isinstance(factor, ShiftAlgebraElement):
                value = factor.algebra.mellin_act(factor, value)
            else:
                value = factor.apply(value)
            value = symmetrize(value, self.action)
        return value


def spherical_product(factors: Sequence[SphericalFactor], action: GroupAction) -> SphericalOperator:
    """
    e·a·e products in the Mellin (or function) representation.

    @param factors: The operators a_i.
    @param action: The finite group whose symmetrizer is e.
    @return: The composite operator.
    """
    return SphericalOperator(tuple(factors), action)


def inversion_action(ring: LaurentRing, names: Sequence[str]) -> GroupAction:
    """The 𝐙/2 action inverting the given unit variables."""
    images = {name: ring.gen(name) ** -1 for name in names}
    return GroupAction(ring, [Substitution.from_mapping(ring, images)], order=2)
