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
This module contains the 1-dimensional group laws (additive, multiplicative and truncated formal), their
n-series and formal sums, and the Euler classes c_λ on the coordinates of ℳ_{T,0}.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from gkm_workbench.exact_algebra import LaurentPoly, LaurentRing, RatFunc
from gkm_workbench.root_system import RootDatum

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 8

Series = Union[LaurentPoly, RatFunc]


class TruncationError(ArithmeticError):
    """Raised when a formal computation asks for more precision than the law carries."""


class ConstantTermError(ValueError):
    """Raised when a formal group law is evaluated on a series with a nonzero constant term."""


class GroupLawKind(Enum):
    """The three models of the group scheme 𝐆₀."""

    ADDITIVE = "additive"
    MULTIPLICATIVE = "multiplicative"
    FORMAL = "formal"


def _truncate(value: LaurentPoly, order: int) -> LaurentPoly:
    return value.truncate(order)


def _bivariate_ring() -> LaurentRing:
    return LaurentRing(("z", "w"), polynomial=("z", "w"))


def series_ring(name: str = "t") -> LaurentRing:
    """The univariate ring Q[t] that n-series live in."""
    return LaurentRing((name,), polynomial=(name,))


def _compose(outer: Mapping[int, Fraction], inner: LaurentPoly, order: int) -> LaurentPoly:
    """Σ_k outer[k]·inner^k, truncated at total degree `order`."""
    result = inner.ring.zero()
    power = inner.ring.one()
    for degree in range(1, order + 1):
        power = _truncate(power * inner, order)
        if power.is_zero():
            break
        coefficient = outer.get(degree, Fraction(0))
        if coefficient:
            result = result + power * coefficient
    return result


def _compositional_inverse(series: Mapping[int, Fraction], order: int) -> dict[int, Fraction]:
    """Solve g(f(t)) = t for g, given f = t + ... ."""
    ring = series_ring()
    t = ring.gen("t")
    inverse: dict[int, Fraction] = {1: Fraction(1)}
    for degree in range(2, order + 1):
        partial = sum((t**k * c for k, c in inverse.items()), ring.zero())
        composed = _compose(series, partial, degree)
        inverse[degree] = -composed.coefficient((degree,))
    return {k: c for k, c in inverse.items() if c}


@dataclass(frozen=True)
class GroupLaw:
    """
    A 1-dimensional group law F(z, w).

    For the formal kind, F(z, w) = z + w + Σ a_ij z^i w^j (i, j ≥ 1) truncated at total degree `order`.
    """

    kind: GroupLawKind
    order: int = DEFAULT_ORDER
    coefficients: tuple[tuple[tuple[int, int], Fraction], ...] = field(default=())

    @classmethod
    def additive(cls) -> "GroupLaw":
        return cls(GroupLawKind.ADDITIVE)

    @classmethod
    def multiplicative(cls) -> "GroupLaw":
        return cls(GroupLawKind.MULTIPLICATIVE)

    @classmethod
    def formal(
        cls, coefficients: Mapping[tuple[int, int], Union[int, Fraction]], order: int = DEFAULT_ORDER
    ) -> "GroupLaw":
        """
        Build a truncated formal group law from its higher coefficients and check the axioms.

        @param coefficients: Map (i, j) -> a_ij for i, j ≥ 1.
        @param order: Truncation order N.
        @return: The group law.
        """
        if order < 1:
            raise ValueError("Truncation order must be positive.")
        clean = {}
        for (i, j), value in coefficients.items():
            if i < 1 or j < 1:
                raise ValueError(f"Coefficient ({i}, {j}) would break the unit axiom.")
            if i + j <= order and Fraction(value) != 0:
                clean[(i, j)] = Fraction(value)
        law = cls(GroupLawKind.FORMAL, order, tuple(sorted(clean.items())))
        failed = [name for name, holds in law.axioms_report().items() if not holds]
        if failed:
            raise ValueError(f"Series is not a formal group law mod degree {order + 1}: {', '.join(failed)} fails.")
        return law

    @classmethod
    def from_exponential(cls, coefficients: Sequence[Union[int, Fraction]], order: int = DEFAULT_ORDER) -> "GroupLaw":
        """
        Conjugate the additive law by exp(t) = t + e_2 t² + e_3 t³ + ... .

        @param coefficients: e_2, e_3, ...; missing ones are 0.
        @param order: Truncation order.
        @return: F(z, w) = exp(log z + log w).
        """
        exponential = {1: Fraction(1)}
        for degree, value in enumerate(coefficients, start=2):
            if degree <= order and Fraction(value) != 0:
                exponential[degree] = Fraction(value)
        logarithm = _compositional_inverse(exponential, order)
        ring = _bivariate_ring()
        z, w = ring.gens()
        argument = _compose(logarithm, z, order) + _compose(logarithm, w, order)
        series = _compose(exponential, argument, order) - z - w
        law = cls(
            GroupLawKind.FORMAL,
            order,
            tuple(sorted(((i, j), c) for (i, j), c in series.terms.items())),
        )
        logger.debug("Formal group law built from exponential %s to order %s.", list(exponential.items()), order)
        return law

    @classmethod
    def random(cls, seed: int, order: int = DEFAULT_ORDER) -> "GroupLaw":
        """A formal group law from a random invertible exponential with small rational coefficients."""
        rng = random.Random(seed)
        coefficients = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(order - 1)]
        return cls.from_exponential(coefficients, order)

    @classmethod
    def from_label(cls, label: str, seed: int = 0, order: int = DEFAULT_ORDER) -> "GroupLaw":
        kind = GroupLawKind(label.strip().lower())
        if kind is GroupLawKind.ADDITIVE:
            return cls.additive()
        if kind is GroupLawKind.MULTIPLICATIVE:
            return cls.multiplicative()
        return cls.random(seed, order)

    @property
    def coefficient_map(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.coefficients)

    @property
    def is_exact(self) -> bool:
        """True for the additive and multiplicative laws, which need no truncation."""
        return self.kind is not GroupLawKind.FORMAL

    def series(self) -> LaurentPoly:
        """F(z, w) as a bivariate polynomial."""
        ring = _bivariate_ring()
        z, w = ring.gens()
        if self.kind is GroupLawKind.ADDITIVE:
            return z + w
        if self.kind is GroupLawKind.MULTIPLICATIVE:
            return z + w + z * w
        return z + w + LaurentPoly(ring, dict(self.coefficients))

    def axioms_report(self) -> dict[str, bool]:
        """
        Check the group-law axioms mod the truncation.

        @return: Map axiom name -> verdict for unit, commutativity and associativity.
        """
        ring = LaurentRing(("a", "b", "c"), polynomial=("a", "b", "c"))
        a, b, c = ring.gens()
        coefficients = self.coefficient_map
        unit = all(i >= 1 and j >= 1 for i, j in coefficients)
        commutative = all(coefficients.get((j, i), Fraction(0)) == value for (i, j), value in coefficients.items())
        left = f_add(self, f_add(self, a, b), c)
        right = f_add(self, a, f_add(self, b, c))
        return {"unit": unit, "commutativity": commutative, "associativity": left == right}

    def _check_argument(self, value: LaurentPoly) -> None:
        if self.kind is GroupLawKind.FORMAL and (not value.is_polynomial() or value.constant_term() != 0):
            raise ConstantTermError(f"Formal group law evaluated on '{value}' with a nonzero constant term.")

    def _check_order(self, order: Optional[int]) -> int:
        if order is None:
            return self.order
        if self.kind is GroupLawKind.FORMAL and order > self.order:
            raise TruncationError(f"Requested order {order} exceeds the law's truncation order {self.order}.")
        return order


def f_add(law: GroupLaw, u: Series, v: Series) -> Series:
    """
    The formal sum u +_F v.

    @param law: The group law.
    @param u: First summand.
    @param v: Second summand, in the same ring.
    @return: F(u, v); truncated at the law's order for the formal kind.
    """
    if law.kind is GroupLawKind.ADDITIVE:
        return u + v
    if law.kind is GroupLawKind.MULTIPLICATIVE:
        return u + v + u * v
    if not isinstance(u, LaurentPoly) or not isinstance(v, LaurentPoly):
        raise ConstantTermError("Formal group laws are evaluated on power series only.")
    law._check_argument(u)  # pylint: disable=protected-access
    law._check_argument(v)  # pylint: disable=protected-access
    order = law.order
    powers_u = [u.ring.one()]
    powers_v = [v.ring.one()]
    for _ in range(order):
        powers_u.append(_truncate(powers_u[-1] * u, order))
        powers_v.append(_truncate(powers_v[-1] * v, order))
    result = u + v
    for (i, j), coefficient in law.coefficients:
        result = result + _truncate(powers_u[i] * powers_v[j], order) * coefficient
    return _truncate(result, order)


def formal_sum(law: GroupLaw, values: Iterable[Series], ring: LaurentRing) -> Series:
    total: Series = ring.zero()
    for value in values:
        total = f_add(law, total, value)
    return total


def formal_inverse(law: GroupLaw, ring: Optional[LaurentRing] = None) -> Series:
    """
    The series [−1]_F(t) with F(t, [−1]_F(t)) = 0.

    @param law: The group law.
    @param ring: Ring holding t; defaults to Q[t].
    @return: −t, 1/(1+t) − 1, or the truncated inverse series.
    """
    ring = ring or series_ring()
    t = ring.gen(ring.variables[0])
    if law.kind is GroupLawKind.ADDITIVE:
        return -t
    if law.kind is GroupLawKind.MULTIPLICATIVE:
        return RatFunc(ring.one(), 1 + t) - 1
    inverse = -t
    for degree in range(2, law.order + 1):
        defect = f_add(law, t, inverse)
        leading = defect.coefficient((degree,) + (0,) * (ring.ngens - 1))  # type: ignore[union-attr]
        inverse = inverse - leading * t**degree
    return inverse


def n_series(law: GroupLaw, n: int, order: Optional[int] = None, ring: Optional[LaurentRing] = None) -> Series:
    """
    The n-series [n]_F(t): [0] = 0, [1] = t, [n] = F(t, [n−1]).

    @param law: The group law.
    @param n: Any integer; negative n go through the formal inverse.
    @param order: Requested precision for the formal kind; must not exceed the law's order.
    @param ring: Ring holding t; defaults to Q[t].
    @return: The n-series.
    """
    law._check_order(order)  # pylint: disable=protected-access
    ring = ring or series_ring()
    t = ring.gen(ring.variables[0])
    if law.kind is GroupLawKind.ADDITIVE:
        return t * n
    if law.kind is GroupLawKind.MULTIPLICATIVE:
        if n >= 0:
            return (1 + t) ** n - 1
        return RatFunc(ring.one(), (1 + t) ** (-n)) - 1
    base = t if n >= 0 else formal_inverse(law, ring)
    result: Series = ring.zero()
    for _ in range(abs(n)):
        result = f_add(law, base, result)
    if order is not None and isinstance(result, LaurentPoly):
        result = _truncate(result, order)
    return result


def n_series_at(law: GroupLaw, n: int, value: Series) -> Series:
    """
    [n]_F evaluated at an element of some coordinate ring.

    @param law: The group law.
    @param n: The integer.
    @param value: The argument; for the multiplicative law 1 + value is usually a monomial.
    @return: [n]_F(value) in the ring of `value`.
    """
    if law.kind is GroupLawKind.ADDITIVE:
        return value * n
    if law.kind is GroupLawKind.MULTIPLICATIVE:
        base = value + 1
        if n >= 0:
            return base**n - 1
        if isinstance(base, LaurentPoly) and base.is_monomial():
            return base**n - 1
        return RatFunc.coerce(base.ring.one()) / base ** (-n) - 1
    if not isinstance(value, LaurentPoly):
        raise ConstantTermError("Formal n-series are evaluated on power series only.")
    law._check_argument(value)  # pylint: disable=protected-access
    series = n_series(law, n)
    assert isinstance(series, LaurentPoly)
    mapped = series.substitute({"t": value}, value.ring)
    assert isinstance(mapped, LaurentPoly)
    return _truncate(mapped, law.order)


def logarithm(law: GroupLaw, ring: Optional[LaurentRing] = None) -> LaurentPoly:
    """
    The logarithm log_F(t) with log_F(F(z, w)) = log_F(z) + log_F(w), to the law's order.

    @param law: The group law.
    @param ring: Ring holding t.
    @return: The logarithm series.
    """
    ring = ring or series_ring()
    t = ring.gen(ring.variables[0])
    order = law.order
    if law.kind is GroupLawKind.ADDITIVE:
        return t
    if law.kind is GroupLawKind.MULTIPLICATIVE:
        return sum((t**k * Fraction((-1) ** (k + 1), k) for k in range(1, order + 1)), ring.zero())
    # log_F'(t) = 1 / ∂_w F(t, 0)
    derivative = {i: Fraction(0) for i in range(order + 1)}
    derivative[0] = Fraction(1)
    for (i, j), value in law.coefficients:
        if j == 1:
            derivative[i] += value
    inverse_derivative = {0: Fraction(1)}
    for degree in range(1, order):
        inverse_derivative[degree] = -sum(
            (derivative.get(k, Fraction(0)) * inverse_derivative[degree - k] for k in range(1, degree + 1)),
            Fraction(0),
        )
    return sum((t ** (k + 1) * (c / (k + 1)) for k, c in inverse_derivative.items() if c), ring.zero())


# coordinates on ℳ_{T,0}

ROTATION_VARIABLE = {GroupLawKind.ADDITIVE: "h", GroupLawKind.MULTIPLICATIVE: "q", GroupLawKind.FORMAL: "h"}


def coordinate_names(datum: RootDatum) -> tuple[str, ...]:
    """x for rank 1, x1..xr otherwise; one coordinate per basis vector of Λ."""
    if datum.rank == 1:
        return ("x",)
    return tuple(f"x{i + 1}" for i in range(datum.rank))


def coordinate_ring(law: GroupLaw, datum: RootDatum, loop_rotation: bool = False) -> LaurentRing:
    """
    The coordinate ring of ℳ_{T,0} (times the rotation line when requested).

    @param law: The group law.
    @param datum: The root datum.
    @param loop_rotation: Whether to add the rotation coordinate h or q.
    @return: Polynomial coordinates for additive/formal laws, Laurent coordinates e^{ϖ} for the multiplicative law.
    """
    names = coordinate_names(datum)
    if loop_rotation:
        names = names + (ROTATION_VARIABLE[law.kind],)
    if law.kind is GroupLawKind.MULTIPLICATIVE:
        return LaurentRing(names)
    return LaurentRing(names, polynomial=names)


@dataclass(frozen=True)
class EulerClass:
    """The function c_λ cutting out the kernel of λ, optionally shifted by n·δ for loop rotation."""

    weight: tuple[int, ...]
    value: Series
    rotation: int = 0

    def is_zero(self) -> bool:
        return self.value.is_zero()


def rotation_coordinate(law: GroupLaw, ring: LaurentRing) -> Series:
    """The coordinate t_rot: h, or q − 1 for the multiplicative law."""
    variable = ring.gen(ROTATION_VARIABLE[law.kind])
    return variable - 1 if law.kind is GroupLawKind.MULTIPLICATIVE else variable


def euler_class(
    law: GroupLaw,
    datum: RootDatum,
    weight: Sequence[int],
    ring: Optional[LaurentRing] = None,
    rotation: int = 0,
) -> EulerClass:
    """
    c_λ = [λ_1]_F(t_1) +_F ... +_F [λ_r]_F(t_r), and c_{λ+nδ} = c_λ +_F [n]_F(t_rot) with rotation n.

    @param law: The group law.
    @param datum: The root datum.
    @param weight: λ in character coordinates.
    @param ring: The coordinate ring; defaults to coordinate_ring(law, datum, rotation != 0).
    @param rotation: The multiple n of the loop-rotation character.
    @return: The Euler class.
    """
    if len(weight) != datum.rank or any(not isinstance(c, int) for c in weight):
        raise ValueError(f"{tuple(weight)} is not in the character lattice of rank {datum.rank}.")
    ring = ring or coordinate_ring(law, datum, loop_rotation=rotation != 0)
    names = coordinate_names(datum)
    value: Series
    if law.kind is GroupLawKind.ADDITIVE:
        value = sum((ring.gen(name) * c for name, c in zip(names, weight)), ring.zero())
        if rotation:
            value = value + rotation_coordinate(law, ring) * rotation
    elif law.kind is GroupLawKind.MULTIPLICATIVE:
        exponent = [0] * ring.ngens
        for name, c in zip(names, weight):
            exponent[ring.index(name)] = c
        if rotation:
            exponent[ring.index(ROTATION_VARIABLE[law.kind])] = rotation
        value = ring.monomial(exponent) - 1
    else:
        value = formal_sum(law, (n_series_at(law, c, ring.gen(name)) for name, c in zip(names, weight) if c), ring)
        if rotation:
            value = f_add(law, value, n_series_at(law, rotation, rotation_coordinate(law, ring)))
    return EulerClass(tuple(weight), value, rotation)
