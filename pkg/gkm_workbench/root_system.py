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
This module contains root data, finite and affine Weyl groups, the Bruhat order, inversion sets and minimal
coset representatives.

Simple reflections are indexed 1..r; index 0 is the affine reflection s_0 = t_{θ∨} s_θ.
"""

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Generic, Iterable, Optional, Sequence, TypeVar

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

MAX_FINITE_ORDER = 10_000


class UnsupportedFamilyError(ValueError):
    """Raised for root datum labels outside type A, the rank-1 groups and tori."""


class NotARootError(ValueError):
    """Raised when a vector passed as a root is not in Φ."""


def _identity(size: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return a
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))) for i in range(len(a)))


def _matvec(a: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"{what} is not integral: {value}.")
    return int(value)


@dataclass(frozen=True)
class Root:
    """A root with its coroot and its coefficients in the simple roots."""

    vector: Vector
    coroot: Vector
    simple_coefficients: Vector

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.simple_coefficients)

    @property
    def height(self) -> int:
        return sum(self.simple_coefficients)


@dataclass(frozen=True)
class RootDatum:
    """
    A root datum in fixed bases of the character lattice Λ and the cocharacter lattice Λ∨.

    The pairing ⟨λ, v⟩ = λᵀ·P·v must be integral on Φ × Λ∨ and on Λ × Φ∨.
    """

    family: str
    cartan_matrix: Matrix
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    pairing_matrix: tuple[tuple[Fraction, ...], ...]
    lattice_basis: tuple[str, ...]

    def __post_init__(self) -> None:
        size = len(self.pairing_matrix)
        if any(len(row) != size for row in self.pairing_matrix) or len(self.lattice_basis) != size:
            raise ValueError("Pairing matrix and lattice basis must have the lattice rank.")
        for i, root in enumerate(self.simple_roots):
            for j, coroot in enumerate(self.simple_coroots):
                if self.pair(root, coroot) != self.cartan_matrix[i][j]:
                    raise ValueError(f"<α_{i + 1}, α_{j + 1}∨> does not match the Cartan entry.")
        for i, row in enumerate(self.cartan_matrix):
            for j, entry in enumerate(row):
                if i == j and entry != 2:
                    raise ValueError("Cartan matrix diagonal must be 2.")
                if i != j and (entry > 0 or (entry == 0) != (self.cartan_matrix[j][i] == 0)):
                    raise ValueError("Cartan matrix is not a generalized Cartan matrix.")
        for root in self.simple_roots:
            for basis_vector in _identity(size):
                _integral(self.pair(root, basis_vector), "Pairing of a root with Λ∨")
        for coroot in self.simple_coroots:
            for basis_vector in _identity(size):
                _integral(self.pair(basis_vector, coroot), "Pairing of Λ with a coroot")

    @property
    def rank(self) -> int:
        """Rank of the character lattice."""
        return len(self.pairing_matrix)

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def pair(self, character: Sequence[int], cocharacter: Sequence[int]) -> Fraction:
        """
        The pairing ⟨λ, v⟩.

        @param character: λ in character coordinates.
        @param cocharacter: v in cocharacter coordinates.
        @return: The (rational) pairing value.
        """
        return sum(
            (
                Fraction(character[i]) * self.pairing_matrix[i][j] * cocharacter[j]
                for i in range(self.rank)
                for j in range(self.rank)
            ),
            Fraction(0),
        )

    def reflect_character(self, root: Root, character: Sequence[int]) -> Vector:
        k = _integral(self.pair(character, root.coroot), "<λ, β∨>")
        return tuple(c - k * r for c, r in zip(character, root.vector))

    def reflect_cocharacter(self, root: Root, cocharacter: Sequence[int]) -> Vector:
        k = _integral(self.pair(root.vector, cocharacter), "<β, v>")
        return tuple(c - k * r for c, r in zip(cocharacter, root.coroot))

    @cached_property
    def simple(self) -> tuple[Root, ...]:
        size = self.semisimple_rank
        return tuple(
            Root(self.simple_roots[i], self.simple_coroots[i], tuple(1 if j == i else 0 for j in range(size)))
            for i in range(size)
        )

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """All roots, by Weyl-orbit closure of the simple roots."""
        found: dict[Vector, Root] = {root.vector: root for root in self.simple}
        queue = deque(self.simple)
        while queue:
            root = queue.popleft()
            for i, simple in enumerate(self.simple):
                k = _integral(self.pair(root.vector, simple.coroot), "<β, α∨>")
                vector = tuple(c - k * s for c, s in zip(root.vector, simple.vector))
                if vector in found:
                    continue
                m = _integral(self.pair(simple.vector, root.coroot), "<α, β∨>")
                coroot = tuple(c - m * s for c, s in zip(root.coroot, simple.coroot))
                coefficients = tuple(c - (k if j == i else 0) for j, c in enumerate(root.simple_coefficients))
                found[vector] = Root(vector, coroot, coefficients)
                queue.append(found[vector])
        return tuple(sorted(found.values(), key=lambda r: (-r.height, r.vector)))

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(root for root in self.roots if root.is_positive)

    def root(self, vector: Sequence[int]) -> Root:
        """
        Look up a root by its character vector.

        @param vector: Character coordinates.
        @return: The Root.
        """
        for root in self.roots:
            if root.vector == tuple(vector):
                return root
        raise NotARootError(f"{tuple(vector)} is not a root of {self.family}.")

    def positive(self, root: Root) -> Root:
        return root if root.is_positive else self.root(tuple(-c for c in root.vector))

    def is_irreducible(self) -> bool:
        size = self.semisimple_rank
        if size == 0:
            return False
        reached = {0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in range(size):
                if j not in reached and self.cartan_matrix[i][j] != 0:
                    reached.add(j)
                    queue.append(j)
        return len(reached) == size

    @cached_property
    def highest_root(self) -> Root:
        if not self.is_irreducible():
            raise UnsupportedFamilyError(f"{self.family} is not irreducible; it has no highest root.")
        return self.positive_roots[0]


def _type_a(rank: int) -> RootDatum:
    cartan = tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank)) for i in range(rank)
    )
    basis = _identity(rank)
    pairing = tuple(tuple(Fraction(entry) for entry in row) for row in cartan)
    names = ("alpha",) if rank == 1 else tuple(f"alpha{i + 1}" for i in range(rank))
    return RootDatum(f"A{rank}", cartan, basis, basis, pairing, names)


def _torus(rank: int) -> RootDatum:
    pairing = tuple(tuple(Fraction(entry) for entry in row) for row in _identity(rank))
    return RootDatum(f"T{rank}", (), (), (), pairing, tuple(f"e{i + 1}" for i in range(rank)))


def product_datum(left: RootDatum, right: RootDatum) -> RootDatum:
    """
    Direct product of two root data (block-diagonal pairing).

    @param left: First factor.
    @param right: Second factor.
    @return: The product datum.
    """
    n, m = left.rank, right.rank
    a, b = left.semisimple_rank, right.semisimple_rank
    cartan = tuple(row + (0,) * b for row in left.cartan_matrix) + tuple((0,) * a + row for row in right.cartan_matrix)
    roots = tuple(r + (0,) * m for r in left.simple_roots) + tuple((0,) * n + r for r in right.simple_roots)
    coroots = tuple(r + (0,) * m for r in left.simple_coroots) + tuple((0,) * n + r for r in right.simple_coroots)
    zero = Fraction(0)
    pairing = tuple(row + (zero,) * m for row in left.pairing_matrix) + tuple(
        (zero,) * n + row for row in right.pairing_matrix
    )
    basis = tuple(f"{name}_1" for name in left.lattice_basis) + tuple(f"{name}_2" for name in right.lattice_basis)
    return RootDatum(f"{left.family}x{right.family}", cartan, roots, coroots, pairing, basis)


def _single_family(label: str) -> RootDatum:
    if label == "SL2":
        return RootDatum("SL2", ((2,),), ((1,),), ((1,),), ((Fraction(2),),), ("alpha",))
    if label == "PGL2":
        # α = 2ϖ and α∨ = 2ϖ∨, chosen to reproduce the SO(3) loop-space rings; ⟨ϖ, ϖ∨⟩ = 1/2, so only
        # pairings with roots and coroots are integral
        return RootDatum("PGL2", ((2,),), ((2,),), ((2,),), ((Fraction(1, 2),),), ("varpi",))
    if label == "GL2":
        pairing = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
        return RootDatum("GL2", ((2,),), ((1, -1),), ((1, -1),), pairing, ("e1", "e2"))
    match = re.fullmatch(r"([AT])(\d+)", label)
    if match and int(match.group(2)) > 0:
        rank = int(match.group(2))
        return _type_a(rank) if match.group(1) == "A" else _torus(rank)
    raise UnsupportedFamilyError(f"Unsupported root datum family '{label}'.")


def build_root_datum(family: str, rank: Optional[int] = None) -> RootDatum:
    """
    Build a standard root datum.

    @param family: "SL2", "PGL2", "GL2", "A<n>", "T<r>", "A"/"T" together with `rank`, or a product such as "A1xT1".
    @param rank: Rank for the bare labels "A" and "T".
    @return: The root datum.
    """
    label = family.strip().upper()
    if label in ("A", "T"):
        if rank is None or rank <= 0:
            raise UnsupportedFamilyError(f"Family '{family}' needs a positive rank.")
        label = f"{label}{rank}"
    factors = [_single_family(part) for part in label.split("X")]
    datum = factors[0]
    for factor in factors[1:]:
        datum = product_datum(datum, factor)
    logger.debug("Root datum %s built with %s roots.", datum.family, len(datum.roots))
    return datum


def affine_reflect(datum: RootDatum, root: Sequence[int], n: int, x: Sequence[int]) -> Vector:
    """
    Apply the affine reflection s_{α+nα₀}: x ↦ x − (⟨x, α⟩ + n)·α∨.

    @param datum: The root datum.
    @param root: α in character coordinates.
    @param n: The multiple of α₀.
    @param x: A cocharacter vector.
    @return: The reflected cocharacter.
    """
    alpha = datum.root(root)
    k = _integral(datum.pair(alpha.vector, x), "<x, α>") + n
    return tuple(c - k * r for c, r in zip(x, alpha.coroot))


@dataclass(frozen=True)
class WeylElement:
    """
    An element of the finite Weyl group, identified by its action on the cocharacter lattice.

    `word` is a reduced word when the element comes from a WeylGroup.
    """

    matrix: Matrix
    word: tuple[int, ...] = field(default=(), compare=False)
    character_matrix: Matrix = field(default=(), compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def act_on_cocharacter(self, vector: Sequence[int]) -> Vector:
        return _matvec(self.matrix, vector)

    def act_on_character(self, vector: Sequence[int]) -> Vector:
        return _matvec(self.character_matrix, vector)

    def __str__(self) -> str:
        return "".join(f"s{i}" for i in self.word) or "e"


@dataclass(frozen=True)
class AffineWeylElement:
    """The element t_{translation}·finite_part of Λ∨ ⋊ W."""

    translation: Vector
    finite_part: WeylElement
    word: tuple[int, ...] = field(default=(), compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def coweight(self) -> Vector:
        return self.translation

    def act(self, vector: Sequence[int]) -> Vector:
        """Action on 𝔱: x ↦ w(x) + λ."""
        return tuple(a + b for a, b in zip(self.finite_part.act_on_cocharacter(vector), self.translation))

    def __str__(self) -> str:
        return "".join(f"s{i}" for i in self.word) or "e"


@dataclass(frozen=True)
class ReflectionLabel:
    """The reflection in the affine root root + n·α₀, stored with root positive."""

    root: Vector
    n: int = 0

    def positive_affine_root(self) -> tuple[Vector, int]:
        """The positive one of ±(root + nα₀)."""
        if self.n >= 0:
            return self.root, self.n
        return tuple(-c for c in self.root), -self.n

    def __str__(self) -> str:
        return f"{list(self.root)}" if self.n == 0 else f"{list(self.root)}{self.n:+d}d"


E = TypeVar("E", WeylElement, AffineWeylElement)


class _ReflectionGroup(Generic[E]):
    """Shared enumeration, Bruhat order and coset machinery for finite and affine Weyl groups."""

    def __init__(self, datum: RootDatum) -> None:
        self.datum: RootDatum = datum
        self._table: dict[E, E] = {}
        self._enumerated_to: int = -1

    # to be provided by subclasses

    def identity(self) -> E:
        raise NotImplementedError

    def generator_indices(self) -> tuple[int, ...]:
        raise NotImplementedError

    def _raw_generator(self, index: int) -> E:
        raise NotImplementedError

    def _raw_multiply(self, a: E, b: E) -> E:
        raise NotImplementedError

    def _with_word(self, element: E, word: tuple[int, ...]) -> E:
        raise NotImplementedError

    def reflections(self, span: int) -> list[tuple[ReflectionLabel, E]]:
        raise NotImplementedError

    # enumeration

    def enumerate(self, bound: int) -> list[E]:
        """
        All elements of length ≤ bound, with shortlex reduced words, ordered by length.

        @param bound: Length bound.
        @return: The elements.
        """
        if bound > self._enumerated_to:
            if not self._table:
                unit = self._with_word(self.identity(), ())
                self._table[unit] = unit
                self._enumerated_to = 0
            frontier = [e for e in self._table.values() if e.length == self._enumerated_to]
            for _ in range(self._enumerated_to, bound):
                next_frontier = []
                for element in frontier:
                    for index in self.generator_indices():
                        product = self._raw_multiply(element, self._raw_generator(index))
                        if product not in self._table:
                            reduced = self._with_word(product, element.word + (index,))
                            self._table[reduced] = reduced
                            next_frontier.append(reduced)
                frontier = next_frontier
                self._enumerated_to += 1
                if len(self._table) > MAX_FINITE_ORDER:
                    raise ValueError("Weyl group enumeration exceeded its size limit.")
                if not frontier:
                    self._enumerated_to = max(self._enumerated_to, bound)
                    break
        return sorted(
            (e for e in self._table.values() if e.length <= bound), key=lambda e: (e.length, e.word)
        )

    def lookup(self, element: E) -> Optional[E]:
        """Return the enumerated copy (carrying a reduced word) of an element, if known."""
        return self._table.get(element)

    def element(self, word: Iterable[int]) -> E:
        """
        The element with the given (not necessarily reduced) word, carrying a reduced word.

        @param word: Simple reflection indices.
        @return: The reduced element.
        """
        letters = tuple(word)
        product = self.identity()
        for index in letters:
            product = self._raw_multiply(product, self._raw_generator(index))
        self.enumerate(len(letters))
        found = self.lookup(product)
        if found is None:
            raise ValueError(f"Word {letters} could not be reduced.")
        return found

    def multiply(self, a: E, b: E) -> E:
        product = self._raw_multiply(a, b)
        self.enumerate(a.length + b.length)
        found = self.lookup(product)
        return found if found is not None else product

    def length(self, element: E) -> int:
        found = self.lookup(element)
        if found is None:
            raise ValueError(f"Element is beyond the enumerated length {self._enumerated_to}.")
        return found.length

    def simple_reflection(self, index: int) -> E:
        return self.element((index,))

    # Bruhat order

    def interval(self, w: E) -> set[E]:
        """
        All v ≤ w, by the subword criterion on the reduced word of w.

        @param w: The upper element.
        @return: The Bruhat interval [e, w].
        """
        below = {self.identity()}
        for index in w.word:
            generator = self._raw_generator(index)
            below |= {self._raw_multiply(v, generator) for v in below}
        return below

    def bruhat_leq(self, v: E, w: E) -> bool:
        return v in self.interval(w)

    def inversion_set(self, w: E) -> set[tuple[Vector, int]]:
        """
        The positive (affine) roots β with ℓ(s_β w) < ℓ(w).

        @param w: The element.
        @return: Set of (root vector, n) pairs; n is 0 for finite groups.
        """
        self.enumerate(w.length)
        inversions = set()
        for label, reflection in self.reflections(w.length + 1):
            image = self.lookup(self._raw_multiply(reflection, w))
            if image is not None and image.length < w.length:
                inversions.add(label.positive_affine_root())
        return inversions

    # cosets

    def parabolic_subgroup(self, parabolic: Iterable[int]) -> list[E]:
        indices = tuple(parabolic)
        elements = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            new = []
            for element in frontier:
                for index in indices:
                    product = self._raw_multiply(element, self._raw_generator(index))
                    if product not in elements:
                        elements.add(product)
                        new.append(product)
            frontier = new
        return list(elements)

    def coset_representatives(self, bound: int, parabolic: Iterable[int]) -> list[E]:
        """
        Minimal-length representatives of W/W_P of length ≤ bound.

        @param bound: Length bound, ≥ 0.
        @param parabolic: Indices of the simple reflections generating W_P.
        @return: The representatives, ordered by length then word.
        """
        if bound < 0:
            raise ValueError("Length bound must be non-negative.")
        indices = tuple(parabolic)
        representatives = []
        for element in self.enumerate(bound):
            minimal = True
            for index in indices:
                image = self.lookup(self._raw_multiply(element, self._raw_generator(index)))
                if image is not None and image.length < element.length:
                    minimal = False
                    break
            if minimal:
                representatives.append(element)
        return representatives

    def coset_key(self, element: E, subgroup: Sequence[E]) -> frozenset:
        return frozenset(self._raw_multiply(element, u) for u in subgroup)


class WeylGroup(_ReflectionGroup[WeylElement]):
    """The finite Weyl group of a root datum, enumerated completely."""

    def __init__(self, datum: RootDatum) -> None:
        super().__init__(datum)
        self._cocharacter_generators: dict[int, WeylElement] = {}
        size = datum.rank
        for index, root in enumerate(datum.simple, start=1):
            cochar = tuple(
                tuple(
                    (1 if a == b else 0)
                    - root.coroot[a] * _integral(datum.pair(root.vector, _identity(size)[b]), "<α, e∨>")
                    for b in range(size)
                )
                for a in range(size)
            )
            char = tuple(
                tuple(
                    (1 if a == b else 0)
                    - root.vector[a] * _integral(datum.pair(_identity(size)[b], root.coroot), "<e, α∨>")
                    for b in range(size)
                )
                for a in range(size)
            )
            self._cocharacter_generators[index] = WeylElement(cochar, (index,), char)
        self.elements: list[WeylElement] = self.enumerate(MAX_FINITE_ORDER)
        logger.debug("Weyl group of %s has %s elements.", datum.family, len(self.elements))

    def identity(self) -> WeylElement:
        unit = _identity(self.datum.rank)
        return WeylElement(unit, (), unit)

    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self._cocharacter_generators)

    def _raw_generator(self, index: int) -> WeylElement:
        if index not in self._cocharacter_generators:
            raise ValueError(f"No simple reflection with index {index}.")
        return self._cocharacter_generators[index]

    def _raw_multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return WeylElement(_matmul(a.matrix, b.matrix), (), _matmul(a.character_matrix, b.character_matrix))

    def _with_word(self, element: WeylElement, word: tuple[int, ...]) -> WeylElement:
        return WeylElement(element.matrix, word, element.character_matrix)

    def reflection(self, root: Root) -> WeylElement:
        """
        The reflection s_β as a group element.

        @param root: Any root.
        @return: s_β with a reduced word.
        """
        size = self.datum.rank
        cochar = tuple(
            zip(*(self.datum.reflect_cocharacter(root, basis_vector) for basis_vector in _identity(size)))
        )
        found = self.lookup(WeylElement(tuple(tuple(row) for row in cochar)))
        if found is None:
            raise NotARootError(f"{root.vector} does not give a reflection of {self.datum.family}.")
        return found

    def reflections(self, span: int) -> list[tuple[ReflectionLabel, WeylElement]]:
        return [(ReflectionLabel(root.vector, 0), self.reflection(root)) for root in self.datum.positive_roots]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.element(tuple(reversed(w.word)))

    def longest_element(self) -> WeylElement:
        return self.elements[-1]


class AffineWeylGroup(_ReflectionGroup[AffineWeylElement]):
    """
    The affine Weyl group Q∨ ⋊ W generated by s_0, s_1, ..., s_r, enumerated up to a length bound.
    """

    def __init__(self, datum: RootDatum) -> None:
        super().__init__(datum)
        self.finite: WeylGroup = WeylGroup(datum)
        theta = datum.highest_root
        zero = (0,) * datum.rank
        self._generators: dict[int, AffineWeylElement] = {
            0: AffineWeylElement(theta.coroot, self.finite.reflection(theta))
        }
        for index in self.finite.generator_indices():
            self._generators[index] = AffineWeylElement(zero, self.finite.simple_reflection(index))

    def identity(self) -> AffineWeylElement:
        return AffineWeylElement((0,) * self.datum.rank, self.finite.identity())

    def generator_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self._generators))

    def _raw_generator(self, index: int) -> AffineWeylElement:
        if index not in self._generators:
            raise ValueError(f"No affine simple reflection with index {index}.")
        return self._generators[index]

    def _raw_multiply(self, a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
        moved = a.finite_part.act_on_cocharacter(b.translation)
        translation = tuple(x + y for x, y in zip(a.translation, moved))
        return AffineWeylElement(translation, self.finite.multiply(a.finite_part, b.finite_part))

    def _with_word(self, element: AffineWeylElement, word: tuple[int, ...]) -> AffineWeylElement:
        return AffineWeylElement(element.translation, element.finite_part, word)

    def affine_reflection(self, root: Root, n: int) -> AffineWeylElement:
        """The element s_{β+nα₀} = t_{−nβ∨} s_β."""
        return AffineWeylElement(tuple(-n * c for c in root.coroot), self.finite.reflection(root))

    def reflections(self, span: int) -> list[tuple[ReflectionLabel, AffineWeylElement]]:
        return [
            (ReflectionLabel(root.vector, n), self.affine_reflection(root, n))
            for root in self.datum.positive_roots
            for n in range(-span, span + 1)
        ]

    def translation(self, coweight: Sequence[int]) -> AffineWeylElement:
        return AffineWeylElement(tuple(coweight), self.finite.identity())

    def finite_indices(self) -> tuple[int, ...]:
        return self.finite.generator_indices()


def coset_representatives(
    datum: RootDatum, bound: int, parabolic: Optional[Iterable[int]] = None
) -> list[AffineWeylElement]:
    """
    Minimal representatives of W^aff/W_P of length ≤ bound.

    @param datum: An irreducible root datum.
    @param bound: Length bound.
    @param parabolic: Finite simple indices generating W_P; None means the whole finite Weyl group.
    @return: The representatives.
    """
    group = AffineWeylGroup(datum)
    indices = group.finite_indices() if parabolic is None else tuple(parabolic)
    return group.coset_representatives(bound, indices)
