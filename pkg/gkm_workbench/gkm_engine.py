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
This module contains moment graphs of (affine) flag varieties and Grassmannians, the GKM congruence test,
the inductive ψ_w basis, basis decomposition and the pairing with homology fractions.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from gkm_workbench.exact_algebra import ExactDivisionError, LaurentPoly, RatFunc, simplify
from gkm_workbench.group_law import (
    GroupLaw,
    GroupLawKind,
    coordinate_names,
    coordinate_ring,
    euler_class,
)
from gkm_workbench.root_system import (
    AffineWeylElement,
    AffineWeylGroup,
    ReflectionLabel,
    RootDatum,
    WeylElement,
    WeylGroup,
)

logger = logging.getLogger(__name__)

GroupElement = Union[WeylElement, AffineWeylElement]
Value = LaurentPoly


class GraphTooSmallError(ValueError):
    """Raised when an element needed by a computation is outside the truncated moment graph."""


class DecompositionError(ArithmeticError):
    """Raised when a basis decomposition or a ψ extension step needs a division that is not exact."""


class SupportOutsideBallError(ValueError):
    """Raised when a homology element is supported on a coweight outside the graph's ball."""


class UnsupportedLawError(ValueError):
    """Raised when residues modulo an Euler class are requested for a truncated formal law."""


@dataclass(frozen=True)
class Vertex:
    """A vertex of a moment graph: the minimal representative of a coset."""

    id: int
    element: GroupElement

    @property
    def length(self) -> int:
        return self.element.length

    @property
    def word(self) -> tuple[int, ...]:
        return self.element.word

    @property
    def coweight(self) -> Optional[tuple[int, ...]]:
        return self.element.translation if isinstance(self.element, AffineWeylElement) else None

    def __str__(self) -> str:
        return str(self.element)


@dataclass(frozen=True)
class Edge:
    """An edge w → s_β w, from the shorter vertex to the longer one."""

    source: int
    target: int
    label: ReflectionLabel
    generator: Value


@dataclass(frozen=True)
class GKMCheck:
    """Outcome of the congruence test; `edge` is the first violated edge."""

    ok: bool
    edge: Optional[Edge] = None

    def __bool__(self) -> bool:
        return self.ok


class MomentGraph:  # pylint: disable=too-many-instance-attributes
    """
    The truncated moment graph of 𝒢/𝒫 with vertices the minimal coset representatives of length ≤ bound.

    Plain graphs label every edge with c_β of the finite part of the affine root; loop-rotation graphs use
    c_{β+nδ} and let translations act on the coordinates through the rotation variable.
    """

    def __init__(
        self,
        datum: RootDatum,
        law: GroupLaw,
        bound: int,
        parabolic: Iterable[int] = (),
        loop_rotation: bool = False,
        affine: bool = True,
    ) -> None:
        if bound < 0:
            raise ValueError("Length bound must be non-negative.")
        self.datum: RootDatum = datum
        self.law: GroupLaw = law
        self.bound: int = bound
        self.loop_rotation: bool = loop_rotation
        self.ring = coordinate_ring(law, datum, loop_rotation)
        self.affine: bool = affine and datum.semisimple_rank > 0
        self.group: Union[WeylGroup, AffineWeylGroup] = AffineWeylGroup(datum) if self.affine else WeylGroup(datum)
        self.parabolic: tuple[int, ...] = tuple(sorted(set(parabolic)))
        finite_indices = set(range(1, datum.semisimple_rank + 1))
        self.is_grassmannian: bool = self.affine and set(self.parabolic) == finite_indices
        self._subgroup = self.group.parabolic_subgroup(self.parabolic)
        representatives = self.group.coset_representatives(bound, self.parabolic)
        self.vertices: list[Vertex] = [Vertex(i, rep) for i, rep in enumerate(representatives)]
        self._by_key = {self._coset_key(v.element): v for v in self.vertices}
        self._images: dict[GroupElement, dict[str, LaurentPoly]] = {}
        self._generators: dict[ReflectionLabel, Value] = {}
        self._intervals: dict[int, list[Vertex]] = {}
        self._inversions: dict[int, list[ReflectionLabel]] = {}
        self.psi_cache: dict[int, "GKMFunction"] = {}
        self._shell: Optional[list[Vertex]] = None
        self.edges: list[Edge] = self._build_edges()
        logger.debug(
            "Moment graph of %s built: %s vertices, %s edges.", datum.family, len(self.vertices), len(self.edges)
        )

    @property
    def signature(self) -> tuple:
        """The parameters the graph is built from; graphs with equal signatures are equal."""
        return (self.datum, self.law, self.bound, self.parabolic, self.loop_rotation, self.affine)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MomentGraph):
            return NotImplemented
        return self is other or self.signature == other.signature

    def __hash__(self) -> int:
        return hash(self.signature)

    # vertices

    def _coset_key(self, element: GroupElement) -> object:
        if not self.parabolic:
            return element
        if self.is_grassmannian:
            assert isinstance(element, AffineWeylElement)
            return element.translation
        return self.group.coset_key(element, self._subgroup)  # type: ignore[arg-type]

    def vertex_of(self, element: GroupElement) -> Optional[Vertex]:
        """The vertex of the coset of `element`, or None outside the ball."""
        return self._by_key.get(self._coset_key(element))

    def vertex(self, ref: Union[Vertex, int, GroupElement, Sequence[int]]) -> Vertex:
        """
        Resolve a vertex from a Vertex, an id, a group element or a reduced word.

        @param ref: The reference.
        @return: The vertex.
        """
        if isinstance(ref, Vertex):
            return self.vertices[ref.id]
        if isinstance(ref, int):
            if 0 <= ref < len(self.vertices):
                return self.vertices[ref]
            raise GraphTooSmallError(f"Vertex id {ref} is not in the graph.")
        element = ref if isinstance(ref, (WeylElement, AffineWeylElement)) else self.group.element(ref)
        found = self.vertex_of(element)
        if found is None:
            raise GraphTooSmallError(f"Element {element} is outside the moment graph of bound {self.bound}.")
        return found

    def vertex_at_coweight(self, coweight: Sequence[int]) -> Vertex:
        if not self.is_grassmannian:
            raise ValueError("Coweight vertices exist on affine Grassmannian graphs only.")
        found = self._by_key.get(tuple(coweight))
        if found is None:
            raise SupportOutsideBallError(f"Coweight {tuple(coweight)} is outside the ball of bound {self.bound}.")
        return found

    def reflect(self, index: int, vertex: Vertex) -> Vertex:
        """The vertex [s_index · vertex]."""
        found = self.vertex_of(self.group.multiply(self.group.simple_reflection(index), vertex.element))
        if found is None:
            raise GraphTooSmallError(f"s{index}·{vertex} is outside the moment graph.")
        return found

    def interval(self, vertex: Vertex) -> list[Vertex]:
        """
        The Bruhat interval [1, vertex] among the vertices.

        @param vertex: The top vertex.
        @return: Vertices below or equal, ordered by length.
        """
        if vertex.id not in self._intervals:
            found = {}
            for element in self.group.interval(vertex.element):  # type: ignore[arg-type]
                below = self.vertex_of(element)
                if below is None:
                    raise GraphTooSmallError(f"Interval below {vertex} leaves the moment graph.")
                found[below.id] = below
            self._intervals[vertex.id] = sorted(found.values(), key=lambda v: v.id)
        return self._intervals[vertex.id]

    def bruhat_leq(self, v: Vertex, w: Vertex) -> bool:
        return any(u.id == v.id for u in self.interval(w))

    def _span(self, length: int) -> int:
        return 2 * length + 2

    def inversions(self, vertex: Vertex) -> list[ReflectionLabel]:
        """
        Labels β with [s_β·vertex] a shorter vertex.

        @param vertex: The vertex.
        @return: The inversion labels.
        """
        if vertex.id not in self._inversions:
            labels = []
            for label, reflection in self.group.reflections(self._span(vertex.length)):
                target = self.vertex_of(self.group.multiply(reflection, vertex.element))  # type: ignore[arg-type]
                if target is not None and target.length < vertex.length:
                    labels.append(label)
            self._inversions[vertex.id] = labels
        return self._inversions[vertex.id]

    def simple_label(self, index: int) -> ReflectionLabel:
        """Label of the simple reflection s_index; s_0 is the reflection in −θ + δ."""
        if index == 0:
            return ReflectionLabel(self.datum.highest_root.vector, -1)
        return ReflectionLabel(self.datum.simple_roots[index - 1], 0)

    # coefficients

    def generator(self, label: ReflectionLabel) -> Value:
        """
        The congruence generator of an edge label: c_β, or c_{β+nδ} on loop-rotation graphs.

        @param label: The reflection label.
        @return: The Euler class.
        """
        if label not in self._generators:
            rotation = label.n if self.loop_rotation else 0
            value = euler_class(self.law, self.datum, label.root, self.ring, rotation=rotation).value
            assert isinstance(value, LaurentPoly)
            self._generators[label] = value
        return self._generators[label]

    def character(self, weight: Sequence[int], rotation: int = 0) -> Value:
        """The coordinate function of the character weight + rotation·δ: c for additive laws, e^λ otherwise."""
        value = euler_class(self.law, self.datum, tuple(weight), self.ring, rotation=rotation).value
        assert isinstance(value, LaurentPoly)
        return value + 1 if self.law.kind is GroupLawKind.MULTIPLICATIVE else value

    def _coordinate_images(self, element: GroupElement) -> dict[str, LaurentPoly]:
        if element not in self._images:
            if isinstance(element, AffineWeylElement):
                finite = element.finite_part
                translation = element.translation if self.loop_rotation else (0,) * self.datum.rank
            else:
                finite, translation = element, (0,) * self.datum.rank
            images = {}
            for i, name in enumerate(coordinate_names(self.datum)):
                basis = tuple(1 if j == i else 0 for j in range(self.datum.rank))
                weight = finite.act_on_character(basis)
                shift = -self.datum.pair(weight, translation)
                if shift.denominator != 1:
                    raise ValueError(f"Translation {translation} pairs non-integrally with {weight}.")
                images[name] = self.character(weight, int(shift))
            self._images[element] = images
        return self._images[element]

    def act(self, element: GroupElement, value: Value) -> Value:
        """
        The action of a group element on the coordinate ring, w·c_λ = c_{wλ}.

        @param element: A Weyl or affine Weyl element.
        @param value: A coefficient.
        @return: The transformed coefficient.
        """
        if value.is_constant():
            return value
        image = value.substitute(self._coordinate_images(element), self.ring)
        if isinstance(image, RatFunc):
            image = image.as_laurent()
        if self.law.kind is GroupLawKind.FORMAL:
            image = image.truncate(self.law.order)
        return image

    # residues modulo an Euler class

    def residue(self, value: Value, generator: Value) -> Value:
        """
        Canonical representative of value modulo the generator.

        A linear generator is solved for its first variable; a generator m − 1 with m a monomial reduces the
        exponent of the first variable of m modulo its exponent in m.

        @param value: The value to reduce.
        @param generator: c_β or c_{β+nδ}.
        @return: The representative.
        """
        if self.law.kind is GroupLawKind.FORMAL:
            raise UnsupportedLawError("Residues modulo truncated formal Euler classes are not supported.")
        if self.law.kind is GroupLawKind.ADDITIVE:
            position = next(i for i in range(self.ring.ngens) if any(e[i] for e in generator.terms))
            name = self.ring.variables[position]
            exponent = tuple(1 if j == position else 0 for j in range(self.ring.ngens))
            coefficient = generator.coefficient(exponent)
            rest = generator - self.ring.monomial(exponent, coefficient)
            image = rest * (-1 / coefficient)
            result = value.substitute({name: image}, self.ring)
            assert isinstance(result, LaurentPoly)
            return result
        ((monomial, _),) = [(e, c) for e, c in generator.terms.items() if any(e)]
        position = next(i for i, power in enumerate(monomial) if power)
        power = monomial[position]
        modulus = abs(power)
        sign = 1 if power > 0 else -1
        # x_v^modulus = relation
        relation = tuple(0 if j == position else -sign * e for j, e in enumerate(monomial))
        terms: dict[tuple[int, ...], Fraction] = {}
        for exponent, coefficient in value.terms.items():
            quotient, remainder = divmod(exponent[position], modulus)
            reduced = tuple(
                remainder if j == position else e + quotient * relation[j] for j, e in enumerate(exponent)
            )
            terms[reduced] = terms.get(reduced, Fraction(0)) + coefficient
        return LaurentPoly(self.ring, terms)

    def solve_residue(self, product: Value, target: Value, generator: Value) -> Value:
        """
        Find x with x·product ≡ target modulo the generator.

        @param product: The product of the other inversion Euler classes.
        @param target: The required residue.
        @param generator: The Euler class of the simple root.
        @return: A canonical x.
        """
        reduced_target = self.residue(target, generator)
        reduced_product = self.residue(product, generator)
        if reduced_product.is_zero():
            if not reduced_target.is_zero():
                raise DecompositionError("ψ extension has no solution: the product vanishes modulo c_α.")
            return self.ring.zero()
        try:
            x = reduced_target.exact_divide(reduced_product)
        except ExactDivisionError as exc:
            raise DecompositionError(
                f"'{reduced_product}' does not divide '{reduced_target}' modulo '{generator}'."
            ) from exc
        if not self.residue(x * product - target, generator).is_zero():
            raise DecompositionError(f"Residue division modulo '{generator}' is not well defined.")
        return x

    def shell(self) -> list[Vertex]:
        """Vertices of maximal length, whose upward edges are cut off by the truncation."""
        if self._shell is None:
            truncated = self.affine or len(self.group.coset_representatives(self.bound + 1, self.parabolic)) > len(
                self.vertices
            )
            self._shell = [v for v in self.vertices if truncated and v.length == self.bound]
        return self._shell

    def constant(self, value: Union[int, Fraction, Value]) -> "GKMFunction":
        element = value if isinstance(value, LaurentPoly) else self.ring.constant(value)
        return GKMFunction(self, {v.id: element for v in self.vertices})

    def function(self, values: Mapping[int, Value]) -> "GKMFunction":
        return GKMFunction(self, dict(values))

    # construction

    def _build_edges(self) -> list[Edge]:
        edges = []
        seen = set()
        reflections = self.group.reflections(self._span(self.bound))
        for vertex in self.vertices:
            for label, reflection in reflections:
                target = self.vertex_of(self.group.multiply(reflection, vertex.element))  # type: ignore[arg-type]
                if target is None or target.length <= vertex.length:
                    continue
                key = (vertex.id, target.id, label.root, label.n if self.loop_rotation else 0)
                if key in seen:
                    continue
                seen.add(key)
                edges.append(Edge(vertex.id, target.id, label, self.generator(label)))
        return edges

    def extend(self, values: Mapping[int, Value], vertex: Vertex) -> Value:
        """
        Extend a GKM function on [1, vertex)° to vertex.

        With vertex = s_α w', the function ψ'(v) = s_α ψ(s_α v) is extended to w' first; the value is
        s_α ψ'(w') + x·∏_{β ∈ inv(vertex) − α} c_β with x fixed by the congruence along the α edge.

        @param values: Values on (at least) the open interval below vertex.
        @param vertex: The vertex to extend to.
        @return: The new value.
        """
        if vertex.length == 0:
            return self.ring.zero()
        index = vertex.word[0]
        simple = self.group.simple_reflection(index)
        lower = self.reflect(index, vertex)
        twisted = {
            v.id: self.act(simple, values[self.reflect(index, v).id]) for v in self.interval(lower) if v.id != lower.id
        }
        candidate = self.act(simple, self.extend(twisted, lower))
        alpha = self.simple_label(index)
        product = self.ring.one()
        for label in self.inversions(vertex):
            if label != alpha:
                product = product * self.generator(label)
        x = self.solve_residue(product, values[lower.id] - candidate, self.generator(alpha))
        return candidate + x * product


class GKMFunction:
    """A map vertex → coefficient on a moment graph; ring operations are pointwise."""

    def __init__(self, graph: MomentGraph, values: Mapping[int, Value]) -> None:
        self.graph: MomentGraph = graph
        self.values: dict[int, Value] = {k: simplify(v, graph.ring) for k, v in values.items()}  # type: ignore[misc]

    def __call__(self, vertex: Union[Vertex, int]) -> Value:
        key = vertex.id if isinstance(vertex, Vertex) else vertex
        return self.values[key]

    def _combine(self, other: object, operation) -> "GKMFunction":
        if isinstance(other, GKMFunction):
            if other.graph != self.graph:
                raise ValueError("GKM functions live on different graphs.")
            return GKMFunction(self.graph, {k: operation(v, other.values[k]) for k, v in self.values.items()})
        return GKMFunction(self.graph, {k: operation(v, other) for k, v in self.values.items()})

    def __add__(self, other: object) -> "GKMFunction":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: object) -> "GKMFunction":
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other: object) -> "GKMFunction":
        return self._combine(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self) -> "GKMFunction":
        return GKMFunction(self.graph, {k: -v for k, v in self.values.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GKMFunction):
            return NotImplemented
        return self.graph == other.graph and self.values == other.values

    def __hash__(self) -> int:
        return hash(frozenset(self.values.items()))

    def support(self) -> list[Vertex]:
        return [self.graph.vertices[k] for k in sorted(self.values) if not self.values[k].is_zero()]

    def is_zero(self) -> bool:
        return not self.support()


def build_moment_graph(
    datum: RootDatum,
    parabolic: Optional[Iterable[int]],
    law: GroupLaw,
    bound: int,
    loop_rotation: bool = False,
    affine: bool = True,
) -> MomentGraph:
    """
    Build the moment graph of 𝒢/𝒫.

    @param datum: The root datum.
    @param parabolic: Simple indices generating W_P; None means the whole finite Weyl group (Gr for affine graphs).
    @param law: The group law.
    @param bound: Length bound of the vertex set.
    @param loop_rotation: Use c_{β+nδ} edge generators.
    @param affine: Affine (Kac–Moody) or finite flag variety.
    @return: The moment graph.
    """
    indices = tuple(range(1, datum.semisimple_rank + 1)) if parabolic is None else tuple(parabolic)
    return MomentGraph(datum, law, bound, indices, loop_rotation, affine)


def check_gkm(f: GKMFunction) -> GKMCheck:
    """
    Test every edge congruence f(target) ≡ f(source) mod generator by exact division.

    @param f: The function.
    @return: The verdict with the first violated edge.
    """
    graph = f.graph
    missing = [v.id for v in graph.vertices if v.id not in f.values]
    if missing:
        raise GraphTooSmallError(f"Function has no value at vertices {missing}.")
    for edge in graph.edges:
        difference = f.values[edge.target] - f.values[edge.source]
        if difference.is_zero():
            continue
        if not edge.generator.divides(difference):
            logger.debug("GKM congruence fails on edge %s -> %s (%s).", edge.source, edge.target, edge.generator)
            return GKMCheck(False, edge)
    return GKMCheck(True)


def _require_residues(graph: MomentGraph) -> None:
    if graph.law.kind is GroupLawKind.FORMAL:
        raise UnsupportedLawError("ψ bases are built for the additive and multiplicative laws.")


def psi_basis(graph: MomentGraph, w: Union[Vertex, int, GroupElement, Sequence[int]]) -> GKMFunction:
    """
    The function ψ_w: 0 below w, ∏_{β∈inv(w)} c_β at w, extended upwards vertex by vertex.

    @param graph: The moment graph.
    @param w: The vertex.
    @return: ψ_w on the whole graph.
    """
    _require_residues(graph)
    top = graph.vertex(w)
    if top.id in graph.psi_cache:
        return graph.psi_cache[top.id]
    below = {v.id for v in graph.interval(top)}
    diagonal = graph.ring.one()
    for label in graph.inversions(top):
        diagonal = diagonal * graph.generator(label)
    values: dict[int, Value] = {}
    for vertex in graph.vertices:
        if vertex.id == top.id:
            values[vertex.id] = diagonal
        elif vertex.id in below:
            values[vertex.id] = graph.ring.zero()
        else:
            values[vertex.id] = graph.extend(values, vertex)
            logger.debug("ψ_%s extended to %s: %s", top, vertex, values[vertex.id])
    psi = GKMFunction(graph, values)
    graph.psi_cache[top.id] = psi
    return psi


def decompose(f: GKMFunction) -> dict[int, Value]:
    """
    Write f = Σ c_w ψ_w by repeatedly removing the minimal vertex of the support.
    A term on the boundary shell is refused: the truncation cuts the edges that would pin it down.

    @param f: A GKM function defined on the whole graph.
    @return: Map vertex id -> coefficient.
    @raise DecompositionError: When f is not a ψ combination or has a ψ term on the shell.
    """
    graph = f.graph
    _require_residues(graph)
    if set(f.values) != {v.id for v in graph.vertices}:
        raise DecompositionError("Function is not defined on exactly the vertices of its graph.")
    shell = {v.id for v in graph.shell()}
    coefficients: dict[int, Value] = {}
    remaining = f
    while not remaining.is_zero():
        vertex = min(remaining.support(), key=lambda v: (v.length, v.word))
        if vertex.id in shell:
            raise DecompositionError(
                f"f has a ψ_{vertex} term on the boundary shell of bound {graph.bound}; enlarge the bound."
            )
        psi = psi_basis(graph, vertex)
        try:
            coefficient = remaining(vertex).exact_divide(psi(vertex))
        except ExactDivisionError as exc:
            raise DecompositionError(f"f({vertex}) is not divisible by ψ_{vertex}({vertex}).") from exc
        coefficients[vertex.id] = coefficient
        remaining = remaining - psi * coefficient
    return coefficients


def recombine(graph: MomentGraph, coefficients: Mapping[int, Value]) -> GKMFunction:
    total = graph.constant(0)
    for vertex_id, coefficient in coefficients.items():
        total = total + psi_basis(graph, vertex_id) * coefficient
    return total


@dataclass(frozen=True)
class Decomposition:
    """A GKM function together with its ψ coefficients."""

    function: GKMFunction
    coefficients: dict[int, Value]

    @classmethod
    def of(cls, f: GKMFunction) -> "Decomposition":
        return cls(f, decompose(f))

    def reconstructs(self) -> bool:
        return recombine(self.function.graph, self.coefficients) == self.function


def structure_constants(graph: MomentGraph, words: Sequence[Sequence[int]]) -> Decomposition:
    """
    Decompose the product ψ_{v_1}·...·ψ_{v_k}.

    @param graph: The moment graph.
    @param words: Reduced words of the factors.
    @return: The decomposition of the product.
    """
    product = graph.constant(1)
    for word in words:
        product = product * psi_basis(graph, word)
    return Decomposition.of(product)


def restriction_function(graph: MomentGraph, weight: Sequence[int]) -> GKMFunction:
    """The function w ↦ w·e^μ (w·c_μ for additive laws)."""
    character = graph.character(weight)
    return GKMFunction(graph, {v.id: graph.act(v.element, character) for v in graph.vertices})


HomologyElement = Sequence[tuple[Sequence[int], Union[LaurentPoly, RatFunc]]]


def pair_homology(fractions: HomologyElement, f: GKMFunction) -> Union[LaurentPoly, RatFunc]:
    """
    Pair Σ_λ x_λ·g_λ with a function on an affine Grassmannian graph: Σ_λ g_λ·f(λ).

    @param fractions: Pairs (coweight, g).
    @param f: A function on a Gr graph.
    @return: The pairing, reduced.
    """
    graph = f.graph
    total: Union[LaurentPoly, RatFunc] = graph.ring.zero()
    for coweight, fraction in fractions:
        vertex = graph.vertex_at_coweight(coweight)
        total = total + RatFunc.coerce(fraction) * f(vertex)
    return simplify(total, graph.ring)


def is_integral_homology(fractions: HomologyElement, graph: MomentGraph) -> bool:
    """
    A homology candidate is integral when its pairing with every ψ_w is a Laurent polynomial.

    @param fractions: Pairs (coweight, g).
    @param graph: A Gr graph.
    @return: The verdict.
    """
    for vertex in graph.vertices:
        value = pair_homology(fractions, psi_basis(graph, vertex))
        if not _is_regular(value):
            logger.debug("Pairing with ψ_%s is not integral: %s", vertex, value)
            return False
    return True


def _is_regular(value: Union[LaurentPoly, RatFunc]) -> bool:
    # negative powers are allowed in the invertible coordinates only
    if isinstance(value, RatFunc):
        if not value.is_laurent():
            return False
        value = value.as_laurent()
    mask = value.ring.invertible_mask
    return all(power >= 0 or mask[i] for exponent in value.terms for i, power in enumerate(exponent))


def blowup_generator(graph: MomentGraph, root: Sequence[int]) -> list[tuple[tuple[int, ...], RatFunc]]:
    """The homology element (e^{β∨} − 1)/c_β = x_{β∨}/c_β − x_0/c_β."""
    beta = graph.datum.root(root)
    c = RatFunc(graph.generator(ReflectionLabel(graph.datum.positive(beta).vector, 0)))
    inverse = RatFunc(graph.ring.one()) / c
    return [(beta.coroot, inverse), ((0,) * graph.datum.rank, -inverse)]


def _transfer(f: GKMFunction, target: MomentGraph, values: Mapping[int, Value]) -> GKMFunction:
    if len(target.vertices) != len(f.graph.vertices) or any(
        a.element != b.element for a, b in zip(target.vertices, f.graph.vertices)
    ):
        raise ValueError("Graphs do not share their vertex set.")
    return GKMFunction(target, values)


def specialize_rotation(f: GKMFunction, plain: MomentGraph) -> GKMFunction:
    """
    Set the rotation coordinate to its identity value (h = 0, q = 1) and move f to the plain graph.

    @param f: A function on a loop-rotation graph.
    @param plain: The plain graph with the same vertices.
    @return: The specialized function.
    """
    variable = next(name for name in f.graph.ring.variables if name not in plain.ring.variables)
    identity = 1 if f.graph.law.kind is GroupLawKind.MULTIPLICATIVE else 0
    values = {}
    for key, value in f.values.items():
        image = value.substitute({variable: identity}, plain.ring)
        values[key] = image.as_laurent() if isinstance(image, RatFunc) else image
    return _transfer(f, plain, values)


def pull_back_rotation(f: GKMFunction, rotation: MomentGraph) -> GKMFunction:
    """View a function on a plain graph as a function on the loop-rotation graph."""
    values = {}
    for key, value in f.values.items():
        embedded = rotation.ring.embed(value)
        assert isinstance(embedded, LaurentPoly)
        values[key] = embedded
    return _transfer(f, rotation, values)
