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
This module contains the exact algebra kernel of the workbench: Laurent polynomials and rational functions
over the rationals, lattice group rings and finite group actions by substitution.

Polynomial GCD and exact division are delegated to sympy; the elements themselves are kept as plain
exponent -> Fraction maps so that ring arithmetic stays cheap.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from tokenize import TokenError
from typing import Iterable, Mapping, Optional, Sequence, Union

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

_PARSE_TRANSFORMATIONS = standard_transformations + (convert_xor,)


class VariableMismatchError(ValueError):
    """Raised when two ring elements live in different variable contexts."""


class ExactDivisionError(ArithmeticError):
    """Raised when a division that has to be exact leaves a remainder."""


def _add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(i + j for i, j in zip(a, b))


@dataclass(frozen=True)
class LaurentRing:
    """
    A variable context Q[v_1^{±1}, ..., v_n^{±1}].

    Variables listed in `polynomial` are not inverted when deciding divisibility, so the additive
    coordinates behave like a polynomial ring while q, y and e^λ coordinates stay invertible.
    """

    variables: tuple[str, ...]
    polynomial: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"Duplicate variable names in {self.variables}.")
        unknown = [name for name in self.polynomial if name not in self.variables]
        if unknown:
            raise ValueError(f"Polynomial variables {unknown} are not ring variables.")

    @property
    def ngens(self) -> int:
        """Number of ring variables."""
        return len(self.variables)

    @cached_property
    def symbols(self) -> tuple[sympy.Symbol, ...]:
        """sympy symbols matching the ring variables, in order."""
        return tuple(sympy.Symbol(name) for name in self.variables)

    @cached_property
    def invertible_mask(self) -> tuple[bool, ...]:
        """Per variable flag telling whether the variable is a unit of the ring."""
        return tuple(name not in self.polynomial for name in self.variables)

    def index(self, name: str) -> int:
        """
        Position of a variable.

        @param name: The variable name.
        @return: The index of the variable in the ring.
        """
        try:
            return self.variables.index(name)
        except ValueError as exc:
            raise VariableMismatchError(f"Variable '{name}' is not in the ring {self.variables}.") from exc

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.constant(1)

    def constant(self, value: Scalar) -> "LaurentPoly":
        return LaurentPoly(self, {(0,) * self.ngens: Fraction(value)})

    def monomial(self, exponent: Sequence[int], coefficient: Scalar = 1) -> "LaurentPoly":
        return LaurentPoly(self, {tuple(exponent): Fraction(coefficient)})

    def gen(self, name: str) -> "LaurentPoly":
        exponent = [0] * self.ngens
        exponent[self.index(name)] = 1
        return self.monomial(exponent)

    def gens(self) -> tuple["LaurentPoly", ...]:
        return tuple(self.gen(name) for name in self.variables)

    def extend(self, *names: str, polynomial: Iterable[str] = ()) -> "LaurentRing":
        """
        Return a ring with extra variables appended.

        @param names: New variable names; names already present are skipped.
        @param polynomial: Which of the new names are not inverted.
        @return: The extended ring.
        """
        extra = tuple(name for name in names if name not in self.variables)
        return LaurentRing(self.variables + extra, self.polynomial + tuple(polynomial))

    def embed(self, element: Union["LaurentPoly", "RatFunc"]) -> Union["LaurentPoly", "RatFunc"]:
        """
        Map an element of a sub-ring (variables are a subset) into this ring by name.

        @param element: A Laurent polynomial or rational function over a smaller variable set.
        @return: The same element in this ring.
        """
        if isinstance(element, RatFunc):
            return RatFunc(self.embed(element.numerator), self.embed(element.denominator))
        if element.ring == self:
            return element
        positions = [self.index(name) for name in element.ring.variables]
        terms: dict[Exponent, Fraction] = {}
        for exponent, coefficient in element.terms.items():
            target = [0] * self.ngens
            for position, power in zip(positions, exponent):
                target[position] = power
            terms[tuple(target)] = coefficient
        return LaurentPoly(self, terms)

    def from_sympy(self, expression: sympy.Expr) -> "LaurentPoly":
        """
        Convert a sympy expression that is a Laurent polynomial in the ring symbols.

        @param expression: A sympy expression.
        @return: The matching LaurentPoly.
        """
        positions = {symbol: index for index, symbol in enumerate(self.symbols)}
        terms: dict[Exponent, Fraction] = {}
        for term in sympy.Add.make_args(sympy.expand(expression)):
            if term == 0:
                continue
            coefficient, rest = term.as_coeff_Mul()
            if not coefficient.is_Rational:
                raise ValueError(f"Coefficient '{coefficient}' is not rational.")
            exponent = [0] * self.ngens
            for base, power in rest.as_powers_dict().items():
                if base == 1:
                    continue
                if base not in positions:
                    raise VariableMismatchError(f"Symbol '{base}' is not in the ring {self.variables}.")
                if not power.is_Integer:
                    raise ValueError(f"Exponent '{power}' of '{base}' is not an integer.")
                exponent[positions[base]] += int(power)
            key = tuple(exponent)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(int(coefficient.p), int(coefficient.q))
        return LaurentPoly(self, terms)

    def _sympy_expression(self, text: str) -> sympy.Expr:
        local_dict = dict(zip(self.variables, self.symbols))
        try:
            return parse_expr(text, local_dict=local_dict, transformations=_PARSE_TRANSFORMATIONS)
        except (SyntaxError, TypeError, TokenError, sympy.SympifyError) as exc:
            raise ValueError(f"Cannot parse '{text}'.") from exc

    def parse(self, text: str) -> "LaurentPoly":
        """
        Parse the canonical text format, e.g. "3*x^2*y^-1 + 1/2*t".

        @param text: The text to parse.
        @return: The parsed LaurentPoly.
        """
        return self.from_sympy(self._sympy_expression(text))

    def parse_fraction(self, text: str) -> "RatFunc":
        """
        Parse a rational function such as "(y - 1) / (x)".

        @param text: The text to parse.
        @return: The parsed RatFunc.
        """
        numerator, denominator = sympy.fraction(sympy.together(self._sympy_expression(text)))
        return RatFunc(self.from_sympy(numerator), self.from_sympy(denominator))


class LaurentPoly:
    """
    An exact Laurent polynomial with rational coefficients.

    Zero coefficients are never stored; the canonical term order sorts by descending total degree and then
    by descending exponent vector.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: LaurentRing, terms: Mapping[Exponent, Scalar]) -> None:
        self.ring: LaurentRing = ring
        clean: dict[Exponent, Fraction] = {}
        for exponent, coefficient in terms.items():
            value = Fraction(coefficient)
            if value == 0:
                continue
            if len(exponent) != ring.ngens:
                raise ValueError(f"Exponent {exponent} does not fit the ring {ring.variables}.")
            clean[tuple(exponent)] = value
        self.terms: dict[Exponent, Fraction] = clean
        self._hash: Optional[int] = None

    # coercion

    def _coerce(self, other: object) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise VariableMismatchError(f"Ring mismatch: {self.ring.variables} vs {other.ring.variables}.")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented  # type: ignore[return-value]

    # predicates and accessors

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return self.is_zero() or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        """
        Value of a constant polynomial.

        @return: The constant coefficient.
        """
        if not self.is_constant():
            raise ValueError(f"'{self}' is not a constant.")
        return self.terms.get((0,) * self.ring.ngens, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.ngens, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_polynomial(self) -> bool:
        """True when no variable appears with a negative exponent."""
        return all(power >= 0 for exponent in self.terms for power in exponent)

    def min_exponents(self) -> Exponent:
        if self.is_zero():
            return (0,) * self.ring.ngens
        return tuple(min(powers) for powers in zip(*self.terms))

    def total_degree(self) -> int:
        return max((sum(exponent) for exponent in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        position = self.ring.index(name)
        return max((exponent[position] for exponent in self.terms), default=0)

    def variables_used(self) -> set[str]:
        return {name for index, name in enumerate(self.ring.variables) if any(e[index] for e in self.terms)}

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the lexicographically largest exponent."""
        return self.terms[max(self.terms)] if self.terms else Fraction(0)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    # ring operations

    def __add__(self, other: object) -> "LaurentPoly":
        other_poly = self._coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exponent, coefficient in other_poly.terms.items():
            terms[exponent] = terms.get(exponent, Fraction(0)) + coefficient
        return LaurentPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {exponent: -coefficient for exponent, coefficient in self.terms.items()})

    def __sub__(self, other: object) -> "LaurentPoly":
        other_poly = self._coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: object) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "LaurentPoly":
        other_poly = self._coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        terms: dict[Exponent, Fraction] = {}
        for exp_a, coeff_a in self.terms.items():
            for exp_b, coeff_b in other_poly.terms.items():
                key = _add_exponents(exp_a, exp_b)
                terms[key] = terms.get(key, Fraction(0)) + coeff_a * coeff_b
        return LaurentPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            if not self.is_monomial():
                raise ExactDivisionError(f"'{self}' is not a monomial and has no inverse in the Laurent ring.")
            ((exponent, coefficient),) = self.terms.items()
            return LaurentPoly(self.ring, {tuple(-e for e in exponent): 1 / coefficient}) ** (-power)
        result = self.ring.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __truediv__(self, other: object) -> "RatFunc":
        return RatFunc(self) / other

    def __rtruediv__(self, other: object) -> "RatFunc":
        return RatFunc(self.ring.one() * other) / self  # type: ignore[operator]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if isinstance(other, RatFunc):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    # structure

    def truncate(self, order: int) -> "LaurentPoly":
        """
        Drop every term of total degree above `order`.

        @param order: The truncation order.
        @return: The truncated polynomial.
        """
        if not self.is_polynomial():
            raise ValueError(f"'{self}' has negative exponents and cannot be truncated as a power series.")
        return LaurentPoly(self.ring, {e: c for e, c in self.terms.items() if sum(e) <= order})

    def substitute(
        self,
        mapping: Mapping[str, Union["LaurentPoly", "RatFunc", Scalar]],
        target: Optional[LaurentRing] = None,
    ) -> Union["LaurentPoly", "RatFunc"]:
        """
        Ring homomorphism given by sending variables to elements of `target`.

        @param mapping: Images of (some of) the variables; unmapped variables go to the target variable of the
                        same name.
        @param target: Target ring; defaults to this ring.
        @return: A LaurentPoly, or a RatFunc when a non-monomial image is raised to a negative power.
        """
        target = target or self.ring
        images: list[Union[LaurentPoly, RatFunc]] = []
        for name in self.ring.variables:
            if name in mapping:
                image = mapping[name]
                if isinstance(image, (int, Fraction)):
                    image = target.constant(image)
                images.append(image)
            elif name in target.variables:
                images.append(target.gen(name))
            else:
                raise VariableMismatchError(f"No substitution defined for variable '{name}'.")

        if all(isinstance(image, LaurentPoly) and image.is_monomial() for image in images):
            return self._substitute_monomials(images, target)  # type: ignore[arg-type]

        cache: dict[tuple[int, int], Union[LaurentPoly, RatFunc]] = {}
        total: Union[LaurentPoly, RatFunc] = target.zero()
        for exponent, coefficient in self.terms.items():
            term: Union[LaurentPoly, RatFunc] = target.constant(coefficient)
            for position, power in enumerate(exponent):
                if power:
                    term = term * _cached_power(images[position], power, position, cache)
            total = total + term
        if isinstance(total, RatFunc) and total.is_laurent():
            return total.as_laurent()
        return total

    def _substitute_monomials(self, images: list["LaurentPoly"], target: LaurentRing) -> "LaurentPoly":
        parts = [next(iter(image.terms.items())) for image in images]
        terms: dict[Exponent, Fraction] = {}
        for exponent, coefficient in self.terms.items():
            new_exponent = [0] * target.ngens
            value = coefficient
            for power, (image_exponent, image_coefficient) in zip(exponent, parts):
                if power:
                    value *= image_coefficient**power
                    for index, image_power in enumerate(image_exponent):
                        new_exponent[index] += power * image_power
            key = tuple(new_exponent)
            terms[key] = terms.get(key, Fraction(0)) + value
        return LaurentPoly(target, terms)

    def split_unit(self) -> tuple[Exponent, "LaurentPoly"]:
        """
        Write self = m * P where m is a monomial in the invertible variables and P has no such factor.

        @return: The exponent of m and the core P.
        """
        minimum = self.min_exponents()
        shift = tuple(power if invertible else 0 for power, invertible in zip(minimum, self.ring.invertible_mask))
        core = {tuple(e - s for e, s in zip(exponent, shift)): c for exponent, c in self.terms.items()}
        return shift, LaurentPoly(self.ring, core)

    def to_sympy(self) -> sympy.Expr:
        expression = sympy.Integer(0)
        for exponent, coefficient in self.terms.items():
            term = sympy.Rational(coefficient.numerator, coefficient.denominator)
            for symbol, power in zip(self.ring.symbols, exponent):
                term *= symbol**power
            expression += term
        return expression

    def to_poly(self) -> sympy.Poly:
        """
        Convert a polynomial (non-negative exponents) into a sympy Poly over QQ.

        @return: The sympy Poly.
        """
        if not self.is_polynomial():
            raise ValueError(f"'{self}' has negative exponents.")
        data = {exponent: sympy.Rational(c.numerator, c.denominator) for exponent, c in self.terms.items()}
        return sympy.Poly.from_dict(data or {(0,) * self.ring.ngens: 0}, *self.ring.symbols, domain=sympy.QQ)

    @classmethod
    def from_poly(cls, ring: LaurentRing, poly: sympy.Poly) -> "LaurentPoly":
        return cls(ring, {monom: Fraction(int(c.p), int(c.q)) for monom, c in poly.terms() if c != 0})

    # division

    def exact_divide(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        """
        Divide exactly; variables in `ring.polynomial` are not inverted.

        @param other: The divisor.
        @return: The quotient.
        """
        divisor = self._coerce(other)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        if divisor.is_monomial():
            ((exponent, coefficient),) = divisor.terms.items()
            for position, power in enumerate(exponent):
                if power > 0 and not self.ring.invertible_mask[position]:
                    if min(e[position] for e in self.terms) < power:
                        raise ExactDivisionError(f"'{divisor}' does not divide '{self}'.")
            inverse = LaurentPoly(self.ring, {tuple(-e for e in exponent): 1 / coefficient})
            return self * inverse
        shift_a, core_a = self.split_unit()
        shift_b, core_b = divisor.split_unit()
        if not core_a.is_polynomial() or not core_b.is_polynomial():
            raise ExactDivisionError(f"'{divisor}' does not divide '{self}'.")
        quotient, remainder = sympy.div(core_a.to_poly(), core_b.to_poly())
        if not remainder.is_zero:
            raise ExactDivisionError(f"'{divisor}' does not divide '{self}'.")
        unit = self.ring.monomial(tuple(a - b for a, b in zip(shift_a, shift_b)))
        return unit * LaurentPoly.from_poly(self.ring, quotient)

    def divides(self, other: "LaurentPoly") -> bool:
        """
        True when self divides other in the ring.

        @param other: The candidate multiple.
        @return: Divisibility verdict.
        """
        try:
            other.exact_divide(self)
        except ExactDivisionError:
            return False
        return True

    def divmod_lex(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """
        Polynomial division with remainder in lexicographic order (ring variable order).

        @param other: The divisor, a polynomial.
        @return: (quotient, remainder) with self = quotient * other + remainder.
        """
        divisor = self._coerce(other)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.ring.ngens == 0:
            return self.ring.constant(self.constant_value() / divisor.constant_value()), self.ring.zero()
        quotient, remainder = sympy.div(self.to_poly(), divisor.to_poly())
        return LaurentPoly.from_poly(self.ring, quotient), LaurentPoly.from_poly(self.ring, remainder)

    # text

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pieces: list[str] = []
        for index, (exponent, coefficient) in enumerate(self.sorted_terms()):
            monomial = "*".join(
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(self.ring.variables, exponent)
                if power
            )
            magnitude = abs(coefficient)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if index == 0:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _cached_power(
    image: Union[LaurentPoly, "RatFunc"], power: int, position: int, cache: dict
) -> Union[LaurentPoly, "RatFunc"]:
    key = (position, power)
    if key not in cache:
        if power < 0 and isinstance(image, LaurentPoly) and not image.is_monomial():
            cache[key] = RatFunc(image.ring.one(), image ** (-power))
        else:
            cache[key] = image**power
    return cache[key]


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.ring.ngens == 0:
        return a.ring.one()
    return LaurentPoly.from_poly(a.ring, a.to_poly().gcd(b.to_poly()))


def _all_units(ring: LaurentRing) -> LaurentRing:
    return ring if not ring.polynomial else LaurentRing(ring.variables)


class RatFunc:
    """
    A rational function kept in lowest terms.

    The denominator is normalized to have no monomial factor and leading coefficient 1, so equal fractions
    have identical numerator and denominator.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: Optional[LaurentPoly] = None) -> None:
        ring = numerator.ring
        if denominator is None:
            denominator = ring.one()
        elif denominator.ring != ring:
            raise VariableMismatchError(f"Ring mismatch: {ring.variables} vs {denominator.ring.variables}.")
        self.numerator, self.denominator = self._normalize(numerator, denominator)

    @staticmethod
    def _normalize(numerator: LaurentPoly, denominator: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        ring = numerator.ring
        if denominator.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if numerator.is_zero():
            return ring.zero(), ring.one()
        # in the fraction field every monomial is a unit
        field_ring = _all_units(ring)
        den = LaurentPoly(field_ring, denominator.terms)
        num = LaurentPoly(field_ring, numerator.terms)
        den_shift, den_core = den.split_unit()
        num = num * field_ring.monomial(tuple(-e for e in den_shift))
        if den_core.is_constant():
            scale = 1 / den_core.constant_value()
            return LaurentPoly(ring, (num * scale).terms), ring.one()
        num_shift, num_core = num.split_unit()
        gcd = _poly_gcd(num_core, den_core)
        if not gcd.is_constant():
            num_core = LaurentPoly.from_poly(field_ring, num_core.to_poly().exquo(gcd.to_poly()))
            den_core = LaurentPoly.from_poly(field_ring, den_core.to_poly().exquo(gcd.to_poly()))
        scale = 1 / den_core.leading_coefficient()
        num = field_ring.monomial(num_shift) * num_core * scale
        if den_core.is_constant():
            return LaurentPoly(ring, num.terms), ring.one()
        return LaurentPoly(ring, num.terms), LaurentPoly(ring, (den_core * scale).terms)

    @property
    def ring(self) -> LaurentRing:
        return self.numerator.ring

    def _coerce(self, other: object) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.ring != self.ring:
                raise VariableMismatchError(f"Ring mismatch: {self.ring.variables} vs {other.ring.variables}.")
            return other
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise VariableMismatchError(f"Ring mismatch: {self.ring.variables} vs {other.ring.variables}.")
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.ring.constant(other))
        return NotImplemented  # type: ignore[return-value]

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_laurent(self) -> bool:
        return self.denominator.is_constant()

    def as_laurent(self) -> LaurentPoly:
        """
        Return the Laurent polynomial this fraction equals.

        @return: The numerator once the denominator is 1.
        """
        if not self.is_laurent():
            raise ExactDivisionError(f"'{self}' is not a Laurent polynomial.")
        return self.numerator

    def __add__(self, other: object) -> "RatFunc":
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        if self.denominator == other_frac.denominator:
            return RatFunc(self.numerator + other_frac.numerator, self.denominator)
        return RatFunc(
            self.numerator * other_frac.denominator + other_frac.numerator * self.denominator,
            self.denominator * other_frac.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.numerator, self.denominator)

    def __sub__(self, other: object) -> "RatFunc":
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        return self + (-other_frac)

    def __rsub__(self, other: object) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other: object) -> "RatFunc":
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        return RatFunc(self.numerator * other_frac.numerator, self.denominator * other_frac.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RatFunc":
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        if other_frac.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        return RatFunc(self.numerator * other_frac.denominator, self.denominator * other_frac.numerator)

    def __rtruediv__(self, other: object) -> "RatFunc":
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        return other_frac / self

    def __pow__(self, power: int) -> "RatFunc":
        if power < 0:
            if self.is_zero():
                raise ZeroDivisionError("division by zero polynomial")
            return RatFunc(self.denominator**-power, self.numerator**-power)
        return RatFunc(self.numerator**power, self.denominator**power)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.ring != self.ring:
            return False
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self) -> int:
        if self.is_laurent():
            return hash(self.numerator)
        return hash((self.numerator, self.denominator))

    def substitute(
        self,
        mapping: Mapping[str, Union[LaurentPoly, "RatFunc", Scalar]],
        target: Optional[LaurentRing] = None,
    ) -> Union[LaurentPoly, "RatFunc"]:
        """
        Apply a substitution to numerator and denominator.

        @param mapping: Variable images, see LaurentPoly.substitute.
        @param target: Target ring.
        @return: The image, as a LaurentPoly when the result is Laurent.
        """
        numerator = self.numerator.substitute(mapping, target)
        denominator = self.denominator.substitute(mapping, target)
        result = RatFunc.coerce(numerator) / denominator
        return result.as_laurent() if result.is_laurent() else result

    def to_sympy(self) -> sympy.Expr:
        return self.numerator.to_sympy() / self.denominator.to_sympy()

    @staticmethod
    def coerce(value: Union[LaurentPoly, "RatFunc"]) -> "RatFunc":
        return value if isinstance(value, RatFunc) else RatFunc(value)

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


Coefficient = Union[LaurentPoly, RatFunc, Scalar]


def simplify(value: Coefficient, ring: LaurentRing) -> Union[LaurentPoly, RatFunc]:
    """
    Bring a coefficient into its reduced form: a LaurentPoly when possible, a RatFunc otherwise.

    @param value: A scalar, Laurent polynomial or rational function.
    @param ring: The ring scalars are placed in.
    @return: The reduced representative.
    """
    if isinstance(value, (int, Fraction)):
        return ring.constant(value)
    if isinstance(value, RatFunc):
        return value.as_laurent() if value.is_laurent() else value
    return value


class LatticeElement:
    """An element Σ_λ coefficient_λ x_λ of the group ring of a lattice over rational functions."""

    __slots__ = ("group_ring", "terms")

    def __init__(self, group_ring: "LatticeGroupRing", terms: Mapping[Exponent, Coefficient]) -> None:
        self.group_ring = group_ring
        clean: dict[Exponent, Union[LaurentPoly, RatFunc]] = {}
        for weight, coefficient in terms.items():
            if len(weight) != group_ring.rank:
                raise ValueError(f"Weight {weight} does not have rank {group_ring.rank}.")
            value = simplify(coefficient, group_ring.coefficients)
            if not value.is_zero():
                clean[tuple(weight)] = value
        self.terms = clean

    def _coerce(self, other: object) -> "LatticeElement":
        if isinstance(other, LatticeElement):
            if other.group_ring != self.group_ring:
                raise VariableMismatchError("Lattice group rings differ.")
            return other
        if isinstance(other, (int, Fraction, LaurentPoly, RatFunc)):
            return self.group_ring.monomial((0,) * self.group_ring.rank, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "LatticeElement":
        other_element = self._coerce(other)
        if other_element is NotImplemented:
            return NotImplemented
        terms: dict[Exponent, Coefficient] = dict(self.terms)
        for weight, coefficient in other_element.terms.items():
            terms[weight] = terms[weight] + coefficient if weight in terms else coefficient  # type: ignore[operator]
        return LatticeElement(self.group_ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "LatticeElement":
        return LatticeElement(self.group_ring, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: object) -> "LatticeElement":
        other_element = self._coerce(other)
        if other_element is NotImplemented:
            return NotImplemented
        return self + (-other_element)

    def __mul__(self, other: object) -> "LatticeElement":
        other_element = self._coerce(other)
        if other_element is NotImplemented:
            return NotImplemented
        terms: dict[Exponent, Coefficient] = {}
        for weight_a, coeff_a in self.terms.items():
            for weight_b, coeff_b in other_element.terms.items():
                key = _add_exponents(weight_a, weight_b)
                product = coeff_a * coeff_b
                terms[key] = terms[key] + product if key in terms else product  # type: ignore[operator]
        return LatticeElement(self.group_ring, terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeElement):
            return NotImplemented
        return self.group_ring == other.group_ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def coefficient(self, weight: Sequence[int]) -> Union[LaurentPoly, RatFunc]:
        return self.terms.get(tuple(weight), self.group_ring.coefficients.zero())

    def support(self) -> list[Exponent]:
        return sorted(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"x{list(weight)}*({self.terms[weight]})" for weight in sorted(self.terms))


@dataclass(frozen=True)
class LatticeGroupRing:
    """The group ring k[Λ] of a lattice of the given rank with coefficients in `coefficients`."""

    rank: int
    coefficients: LaurentRing

    def element(self, terms: Mapping[Sequence[int], Coefficient]) -> LatticeElement:
        return LatticeElement(self, {tuple(w): c for w, c in terms.items()})

    def monomial(self, weight: Sequence[int], coefficient: Coefficient = 1) -> LatticeElement:
        return LatticeElement(self, {tuple(weight): coefficient})

    def one(self) -> LatticeElement:
        return self.monomial((0,) * self.rank)

    def zero(self) -> LatticeElement:
        return LatticeElement(self, {})


@dataclass(frozen=True)
class Substitution:
    """A ring endomorphism of a LaurentRing given by the images of its variables."""

    ring: LaurentRing
    images: tuple[LaurentPoly, ...]

    @classmethod
    def from_mapping(cls, ring: LaurentRing, mapping: Mapping[str, Union[LaurentPoly, str]]) -> "Substitution":
        """
        Build a substitution from variable images; strings are parsed in `ring`.

        @param ring: The ring acted on.
        @param mapping: Images of some variables, the others are fixed.
        @return: The substitution.
        """
        images = []
        for name in ring.variables:
            image = mapping.get(name, ring.gen(name))
            images.append(ring.parse(image) if isinstance(image, str) else image)
        return cls(ring, tuple(images))

    @classmethod
    def identity(cls, ring: LaurentRing) -> "Substitution":
        return cls(ring, ring.gens())

    def mapping(self) -> dict[str, LaurentPoly]:
        return dict(zip(self.ring.variables, self.images))

    def __call__(self, value: Coefficient) -> Union[LaurentPoly, RatFunc]:
        return apply_action(self, value)

    def compose(self, other: "Substitution") -> "Substitution":
        """
        The substitution p -> self(other(p)).

        @param other: Applied first.
        @return: The composite.
        """
        images = []
        for image in other.images:
            composed = simplify(self(image), self.ring)
            if isinstance(composed, RatFunc):
                raise ValueError(f"Composite image '{composed}' is not a Laurent polynomial.")
            images.append(composed)
        return Substitution(self.ring, tuple(images))

    def __str__(self) -> str:
        return ", ".join(f"{name}->{image}" for name, image in self.mapping().items())


def apply_action(g: Substitution, value: Coefficient) -> Union[LaurentPoly, RatFunc]:
    """
    Apply a substitution to a ring element; the map is a ring homomorphism.

    @param g: The group element, given as a substitution.
    @param value: A Laurent polynomial, rational function or scalar.
    @return: The image.
    """
    if isinstance(value, (int, Fraction)):
        return g.ring.constant(value)
    if value.ring != g.ring:
        raise VariableMismatchError(f"Substitution on {g.ring.variables} applied to {value.ring.variables}.")
    return value.substitute(g.mapping())


class GroupAction:
    """
    A finite group acting on a LaurentRing by substitutions.

    The element list is the closure of the generators; a declared order is checked against it.
    """

    MAX_ORDER = 5040

    def __init__(self, ring: LaurentRing, generators: Sequence[Substitution], order: Optional[int] = None) -> None:
        self.ring: LaurentRing = ring
        self.generators: tuple[Substitution, ...] = tuple(generators)
        self.elements: tuple[Substitution, ...] = self._closure()
        if order is not None and order != len(self.elements):
            raise ValueError(f"Declared group order {order} does not match the generated order {len(self.elements)}.")
        logger.debug("Group action on %s generated with %s elements.", ring.variables, len(self.elements))

    def _closure(self) -> tuple[Substitution, ...]:
        identity = Substitution.identity(self.ring)
        seen = {identity.images: identity}
        frontier = [identity]
        while frontier:
            new_frontier = []
            for element in frontier:
                for generator in self.generators:
                    product = generator.compose(element)
                    if product.images not in seen:
                        seen[product.images] = product
                        new_frontier.append(product)
            if len(seen) > self.MAX_ORDER:
                raise ValueError(f"Group generated by {len(self.generators)} substitutions is too large or infinite.")
            frontier = new_frontier
        return tuple(seen.values())

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_invariant(self, value: Coefficient) -> bool:
        reduced = simplify(value, self.ring)
        return all(apply_action(generator, reduced) == reduced for generator in self.generators)


def symmetrize(value: Coefficient, action: GroupAction) -> Union[LaurentPoly, RatFunc]:
    """
    Average over the group: (1/|G|) Σ_g g·value.

    @param value: The element to symmetrize.
    @param action: The group action.
    @return: The symmetrized element, fixed by every generator.
    """
    total: Union[LaurentPoly, RatFunc] = action.ring.zero()
    for element in action.elements:
        total = total + apply_action(element, value)
    return simplify(total * Fraction(1, action.order), action.ring)
