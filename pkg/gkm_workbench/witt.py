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
This module contains the unipotent centralizer U_n of a regular nilpotent in SL_n, its Newton (ghost) transform
onto componentwise addition, the inverse transform and the big Witt coordinates.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import sympy

logger = logging.getLogger(__name__)

T = sympy.Symbol("t")

Component = Union[sympy.Expr, Fraction, int]


def _sympify(value: Component) -> sympy.Expr:
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.sympify(value)


def witt_symbols(length: int, prefix: str = "x") -> tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"{prefix}1:{length + 1}")


@dataclass(frozen=True)
class WittVector:
    """
    A point (x_1, ..., x_{n-1}) of U_n; the product is the truncated convolution (x·y)_k = Σ_{i+j=k} x_i y_j.
    """

    components: tuple[sympy.Expr, ...]

    @classmethod
    def of(cls, values: Sequence[Component]) -> "WittVector":
        return cls(tuple(_sympify(v) for v in values))

    @classmethod
    def symbolic(cls, length: int, prefix: str = "x") -> "WittVector":
        return cls(witt_symbols(length, prefix))

    @classmethod
    def random(cls, rng: random.Random, length: int) -> "WittVector":
        return cls(tuple(sympy.Rational(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(length)))

    @property
    def length(self) -> int:
        return len(self.components)

    def __mul__(self, other: "WittVector") -> "WittVector":
        if other.length != self.length:
            raise ValueError(f"Witt vectors of lengths {self.length} and {other.length} cannot be multiplied.")
        x = (sympy.Integer(1),) + self.components
        y = (sympy.Integer(1),) + other.components
        return WittVector(
            tuple(sympy.expand(sum(x[i] * y[k - i] for i in range(k + 1))) for k in range(1, self.length + 1))
        )

    def generating_series(self) -> sympy.Expr:
        """Σ_{j≥0} x_j (−t)^j with x_0 = 1."""
        return 1 + sum(c * (-T) ** (j + 1) for j, c in enumerate(self.components))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WittVector):
            return NotImplemented
        return self.length == other.length and all(
            sympy.expand(a - b) == 0 for a, b in zip(self.components, other.components)
        )

    def __hash__(self) -> int:
        return hash(tuple(sympy.expand(c) for c in self.components))


def _series_coefficients(expression: sympy.Expr, order: int) -> list[sympy.Expr]:
    expansion = sympy.expand(sympy.series(expression, T, 0, order + 1).removeO())
    return [expansion.coeff(T, k) for k in range(order + 1)]


def ghost_sign(k: int) -> int:
    """The global normalization relating the log coefficient of (−t)^k/k to the power sum p_k."""
    return (-1) ** (k + 1)


def witt_newton_transform(
    n: int, x: Optional[Sequence[Component]] = None, normalized: bool = True
) -> tuple[sympy.Expr, ...]:
    """
    Ghost coordinates of a point of U_n: the coefficients of (−t)^k/k in log Σ x_j(−t)^j for k = 1..n−1.

    @param n: The size n ≥ 2 of SL_n.
    @param x: The coordinates x_1..x_{n-1}; symbols when omitted.
    @param normalized: Multiply component k by (−1)^{k+1} so the components are the power sums p_k.
    @return: The ghost components.
    """
    if n < 2:
        raise ValueError(f"The Newton transform needs n >= 2, got {n}.")
    vector = WittVector.symbolic(n - 1) if x is None else WittVector.of(x)
    if vector.length != n - 1:
        raise ValueError(f"U_{n} has {n - 1} coordinates, got {vector.length}.")
    coefficients = _series_coefficients(sympy.log(vector.generating_series()), n - 1)
    ghosts = []
    for k in range(1, n):
        value = sympy.expand(coefficients[k] * k / (-1) ** k)
        ghosts.append(sympy.expand(value * ghost_sign(k)) if normalized else value)
    logger.debug("Newton transform of length %s computed.", n - 1)
    return tuple(ghosts)


def witt_newton_inverse(ghosts: Sequence[Component], normalized: bool = True) -> WittVector:
    """
    Recover x from ghost components through exp(Σ_k g_k (−t)^k/k).

    @param ghosts: The ghost components.
    @param normalized: Whether the components carry the (−1)^{k+1} normalization.
    @return: The point of U_n.
    """
    length = len(ghosts)
    exponent = sum(
        (_sympify(g) * (ghost_sign(k) if normalized else 1) * (-T) ** k / k for k, g in enumerate(ghosts, start=1)),
        sympy.Integer(0),
    )
    coefficients = _series_coefficients(sympy.exp(exponent), length)
    return WittVector(tuple(sympy.expand(coefficients[j] * (-1) ** j) for j in range(1, length + 1)))


def witt_coordinates(x: Sequence[Component]) -> tuple[sympy.Expr, ...]:
    """
    Big Witt coordinates w with Σ x_j(−t)^j = Π_k (1 − w_k t^k) modulo t^n.

    @param x: The coordinates x_1..x_{n-1}.
    @return: w_1..w_{n-1}.
    """
    length = len(x)
    target = _series_coefficients(WittVector.of(x).generating_series(), length)
    w: list[sympy.Expr] = []
    for k in range(1, length + 1):
        product = sympy.Integer(1)
        for d, w_d in enumerate(w, start=1):
            product = sympy.expand(product * (1 - w_d * T**d))
        # the t^k coefficient of Π_{d<k}(1 − w_d t^d)·(1 − w_k t^k) is c_k − w_k
        w.append(sympy.expand(sympy.expand(product).coeff(T, k) - target[k]))
    return tuple(w)


def ghost_from_witt(w: Sequence[Component]) -> tuple[sympy.Expr, ...]:
    """The divisor sums Σ_{d|k} d·w_d^{k/d}."""
    values = [_sympify(c) for c in w]
    return tuple(
        sympy.expand(sum(d * values[d - 1] ** (k // d) for d in range(1, k + 1) if k % d == 0))
        for k in range(1, len(values) + 1)
    )


def is_weighted_homogeneous(ghosts: Sequence[sympy.Expr], symbols: Sequence[sympy.Symbol]) -> bool:
    """Ghost component k is homogeneous of degree k when x_j has weight j."""
    scale = sympy.Symbol("lambda")
    weighted = {s: scale ** (j + 1) * s for j, s in enumerate(symbols)}
    return all(
        sympy.expand(g.subs(weighted, simultaneous=True) - scale ** (k + 1) * g) == 0 for k, g in enumerate(ghosts)
    )
