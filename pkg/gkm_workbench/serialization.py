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
This module contains the JSON and text codecs of the workbench objects. Every payload carries a versioned
schema name "gkm-workbench/<type>/v1"; parse(serialize(obj)) == obj for every registered type.
"""

import json
import logging
from fractions import Fraction
from typing import Any, Callable, Union

import sympy

from gkm_workbench.coulomb import ClassicalLimit, CoulombPresentation, CoulombRelation
from gkm_workbench.exact_algebra import LaurentPoly, LaurentRing, RatFunc, simplify
from gkm_workbench.gkm_engine import Decomposition, GKMFunction, MomentGraph, build_moment_graph
from gkm_workbench.group_law import GroupLaw, GroupLawKind
from gkm_workbench.kostant import CentralizerSolution, borel_element, slice_element
from gkm_workbench.root_system import build_root_datum
from gkm_workbench.shift_algebras import DeRhamTable, RelationReport, ShiftAlgebra, ShiftAlgebraElement
from gkm_workbench.verification import CheckResult, VerificationReport
from gkm_workbench.witt import WittVector

logger = logging.getLogger(__name__)

SCHEMA_PREFIX = "gkm-workbench"
SCHEMA_VERSION = "v1"
FORMATS = ("json", "text")

Payload = dict[str, Any]


class UnknownFormatError(ValueError):
    """Raised for an output format other than json or text, or an unregistered schema."""


def _schema(name: str) -> str:
    return f"{SCHEMA_PREFIX}/{name}/{SCHEMA_VERSION}"


def _fraction(value: Fraction) -> str:
    return str(value)


# algebra


def _ring_payload(ring: LaurentRing) -> Payload:
    return {"variables": list(ring.variables), "polynomial": list(ring.polynomial)}


def _ring_from(payload: Payload) -> LaurentRing:
    return LaurentRing(tuple(payload["variables"]), tuple(payload["polynomial"]))


def _terms(poly: LaurentPoly) -> list:
    return [[list(exponent), _fraction(c)] for exponent, c in poly.sorted_terms()]


def _poly_from(ring: LaurentRing, terms: list) -> LaurentPoly:
    return LaurentPoly(ring, {tuple(exponent): Fraction(c) for exponent, c in terms})


def _laurent_payload(poly: LaurentPoly) -> Payload:
    return {"ring": _ring_payload(poly.ring), "terms": _terms(poly), "text": str(poly)}


def _laurent_from(payload: Payload) -> LaurentPoly:
    return _poly_from(_ring_from(payload["ring"]), payload["terms"])


def _ratfunc_payload(value: RatFunc) -> Payload:
    return {
        "ring": _ring_payload(value.ring),
        "numerator": _terms(value.numerator),
        "denominator": _terms(value.denominator),
        "text": str(value),
    }


def _ratfunc_from(payload: Payload) -> RatFunc:
    ring = _ring_from(payload["ring"])
    return RatFunc(_poly_from(ring, payload["numerator"]), _poly_from(ring, payload["denominator"]))


def _coefficient_payload(value: Union[LaurentPoly, RatFunc]) -> Payload:
    if isinstance(value, RatFunc):
        return {"numerator": _terms(value.numerator), "denominator": _terms(value.denominator)}
    return {"numerator": _terms(value)}


def _coefficient_from(ring: LaurentRing, payload: Payload) -> Union[LaurentPoly, RatFunc]:
    numerator = _poly_from(ring, payload["numerator"])
    if "denominator" not in payload:
        return numerator
    return simplify(RatFunc(numerator, _poly_from(ring, payload["denominator"])), ring)


def _law_payload(law: GroupLaw) -> Payload:
    return {
        "kind": law.kind.value,
        "order": law.order,
        "coefficients": [[i, j, _fraction(c)] for (i, j), c in law.coefficients],
    }


def _law_from(payload: Payload) -> GroupLaw:
    coefficients = tuple(((i, j), Fraction(c)) for i, j, c in payload["coefficients"])
    return GroupLaw(GroupLawKind(payload["kind"]), payload["order"], coefficients)


# moment graphs


def _graph_payload(graph: MomentGraph) -> Payload:
    return {
        "family": graph.datum.family,
        "law": _law_payload(graph.law),
        "bound": graph.bound,
        "parabolic": list(graph.parabolic),
        "loop_rotation": graph.loop_rotation,
        "affine": graph.affine,
        "vertices": [{"id": v.id, "word": list(v.word), "length": v.length} for v in graph.vertices],
        "edges": [
            {"source": e.source, "target": e.target, "label": str(e.label), "generator": str(e.generator)}
            for e in graph.edges
        ],
    }


def _graph_from(payload: Payload) -> MomentGraph:
    graph = build_moment_graph(
        build_root_datum(payload["family"]),
        payload["parabolic"],
        _law_from(payload["law"]),
        payload["bound"],
        loop_rotation=payload["loop_rotation"],
        affine=payload["affine"],
    )
    if len(graph.vertices) != len(payload["vertices"]):
        raise ValueError("Serialized vertex list does not match the rebuilt moment graph.")
    return graph


def _function_payload(f: GKMFunction) -> Payload:
    return {
        "graph": _graph_payload(f.graph),
        "values": [
            {"vertex": key, "word": list(f.graph.vertices[key].word), "value": _coefficient_payload(value)}
            for key, value in sorted(f.values.items())
        ],
    }


def _function_from(payload: Payload) -> GKMFunction:
    graph = _graph_from(payload["graph"])
    values = {}
    for entry in payload["values"]:
        value = _coefficient_from(graph.ring, entry["value"])
        if not isinstance(value, LaurentPoly):
            raise ValueError(f"GKM function value at vertex {entry['vertex']} is not a Laurent polynomial.")
        values[entry["vertex"]] = value
    return GKMFunction(graph, values)


def _decomposition_payload(decomposition: Decomposition) -> Payload:
    return {
        "function": _function_payload(decomposition.function),
        "coefficients": [
            {"vertex": key, "value": _coefficient_payload(value)}
            for key, value in sorted(decomposition.coefficients.items())
        ],
    }


def _decomposition_from(payload: Payload) -> Decomposition:
    function = _function_from(payload["function"])
    coefficients = {}
    for entry in payload["coefficients"]:
        value = _coefficient_from(function.graph.ring, entry["value"])
        assert isinstance(value, LaurentPoly)
        coefficients[entry["vertex"]] = value
    return Decomposition(function, coefficients)


# operators and presentations


def _algebra_payload(algebra: ShiftAlgebra) -> Payload:
    return {
        "law": _law_payload(algebra.law),
        "rank": algebra.rank,
        "coordinates": list(algebra.coordinates),
        "shifts": list(algebra.shifts),
        "deformation": algebra.deformation,
    }


def _algebra_from(payload: Payload) -> ShiftAlgebra:
    return ShiftAlgebra(
        _law_from(payload["law"]),
        payload["rank"],
        tuple(payload["coordinates"]),
        tuple(payload["shifts"]),
        payload["deformation"],
    )


def _operator_terms(element: ShiftAlgebraElement) -> list:
    return [{"coweight": list(weight), "coeff": str(element.terms[weight])} for weight in sorted(element.terms)]


def _operator_from_terms(algebra: ShiftAlgebra, terms: list) -> ShiftAlgebraElement:
    return algebra.element({tuple(t["coweight"]): algebra.parse_coefficient(t["coeff"]) for t in terms})


def _operator_payload(element: ShiftAlgebraElement) -> Payload:
    return {
        "algebra": _algebra_payload(element.algebra),
        "law": element.algebra.law.kind.value,
        "terms": _operator_terms(element),
    }


def _operator_from(payload: Payload) -> ShiftAlgebraElement:
    algebra = _algebra_from(payload["algebra"])
    return _operator_from_terms(algebra, payload["terms"])


def _presentation_payload(presentation: CoulombPresentation) -> Payload:
    return {
        "name": presentation.name,
        "parameter": presentation.parameter,
        "algebra": _algebra_payload(presentation.algebra),
        "generators": [
            {"name": name, "terms": _operator_terms(element)} for name, element in presentation.generators.items()
        ],
        "relations": [
            {"name": r.name, "lhs": r.lhs, "rhs": r.rhs, "bracket": list(r.bracket) if r.bracket else None}
            for r in presentation.relations
        ],
    }


def _presentation_from(payload: Payload) -> CoulombPresentation:
    algebra = _algebra_from(payload["algebra"])
    generators = {g["name"]: _operator_from_terms(algebra, g["terms"]) for g in payload["generators"]}
    relations = tuple(
        CoulombRelation(r["name"], r["lhs"], r["rhs"], tuple(r["bracket"]) if r["bracket"] else None)
        for r in payload["relations"]
    )
    return CoulombPresentation(payload["name"], algebra, generators, relations, payload["parameter"])


def _classical_payload(limit: ClassicalLimit) -> Payload:
    return {
        "presentation": limit.presentation,
        "generators": [str(g) for g in limit.generators],
        "quartic": str(limit.quartic),
        "brackets": [{"pair": list(pair), "value": str(value)} for pair, value in limit.brackets.items()],
    }


def _classical_from(payload: Payload) -> ClassicalLimit:
    symbols = {name: sympy.Symbol(name) for name in payload["generators"]}
    return ClassicalLimit(
        payload["presentation"],
        tuple(symbols.values()),
        sympy.sympify(payload["quartic"], locals=symbols),
        {tuple(b["pair"]): sympy.sympify(b["value"], locals=symbols) for b in payload["brackets"]},
    )


def _report_payload(report: RelationReport) -> Payload:
    return {
        "relation": report.relation,
        "verdict": report.verdict,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "witness": report.witness,
    }


def _report_from(payload: Payload) -> RelationReport:
    return RelationReport(payload["relation"], payload["verdict"], payload["lhs"], payload["rhs"], payload["witness"])


def _de_rham_payload(table: DeRhamTable) -> Payload:
    return {
        "law": _law_payload(table.law),
        "entries": [{"n": n, "value": _ratfunc_payload(RatFunc.coerce(v))} for n, v in sorted(table.entries.items())],
        "homomorphism": table.homomorphism,
        "failures": [list(pair) for pair in table.failures],
    }


def _de_rham_from(payload: Payload) -> DeRhamTable:
    entries = {}
    for entry in payload["entries"]:
        value = _ratfunc_from(entry["value"])
        entries[entry["n"]] = simplify(value, value.ring)
    failures = tuple((a, b) for a, b in payload["failures"])
    return DeRhamTable(_law_from(payload["law"]), entries, payload["homomorphism"], failures)


def _centralizer_payload(solution: CentralizerSolution) -> Payload:
    return {
        "group": solution.group,
        "law": solution.law.value,
        "free_params": list(solution.free_params),
        "constraint": _ratfunc_payload(solution.constraint),
    }


def _centralizer_from(payload: Payload) -> CentralizerSolution:
    law = GroupLawKind(payload["law"])
    return CentralizerSolution(
        payload["group"],
        law,
        tuple(payload["free_params"]),
        _ratfunc_from(payload["constraint"]),
        slice_element(payload["group"], law),
        borel_element(payload["group"]),
    )


def _witt_payload(vector: WittVector) -> Payload:
    return {"components": [str(c) for c in vector.components]}


def _witt_from(payload: Payload) -> WittVector:
    return WittVector(tuple(sympy.sympify(c) for c in payload["components"]))


def _check_payload(result: CheckResult) -> Payload:
    return {
        "case": result.case,
        "relation": result.relation,
        "status": result.status,
        "lhs_normal_form": result.lhs_normal_form,
        "rhs_normal_form": result.rhs_normal_form,
    }


def _check_from(payload: Payload) -> CheckResult:
    return CheckResult(
        payload["case"], payload["relation"], payload["status"], payload["lhs_normal_form"], payload["rhs_normal_form"]
    )


def _verification_payload(report: VerificationReport) -> Payload:
    return {"seed": report.seed, "trials": report.trials, "results": [_check_payload(r) for r in report.results]}


def _verification_from(payload: Payload) -> VerificationReport:
    return VerificationReport(payload["seed"], payload["trials"], tuple(_check_from(r) for r in payload["results"]))


_CODECS: list[tuple[type, str, Callable[[Any], Payload], Callable[[Payload], Any]]] = [
    (LaurentPoly, "laurent-poly", _laurent_payload, _laurent_from),
    (RatFunc, "rational-function", _ratfunc_payload, _ratfunc_from),
    (GroupLaw, "group-law", _law_payload, _law_from),
    (MomentGraph, "moment-graph", _graph_payload, _graph_from),
    (GKMFunction, "gkm-function", _function_payload, _function_from),
    (Decomposition, "decomposition", _decomposition_payload, _decomposition_from),
    (ShiftAlgebraElement, "operator", _operator_payload, _operator_from),
    (CoulombPresentation, "coulomb-presentation", _presentation_payload, _presentation_from),
    (ClassicalLimit, "classical-limit", _classical_payload, _classical_from),
    (RelationReport, "relation-report", _report_payload, _report_from),
    (DeRhamTable, "de-rham-table", _de_rham_payload, _de_rham_from),
    (CentralizerSolution, "centralizer-solution", _centralizer_payload, _centralizer_from),
    (WittVector, "witt-vector", _witt_payload, _witt_from),
    (CheckResult, "check-result", _check_payload, _check_from),
    (VerificationReport, "verification-report", _verification_payload, _verification_from),
]


def to_payload(obj: object) -> Payload:
    """
    Encode an object as a schema-tagged dictionary.

    @param obj: An instance of a registered type.
    @return: The payload.
    """
    for cls, name, encode, _ in _CODECS:
        if type(obj) is cls:  # pylint: disable=unidiomatic-typecheck
            return {"schema": _schema(name), **encode(obj)}
    raise UnknownFormatError(f"No schema is registered for {type(obj).__name__}.")


def from_payload(payload: Payload) -> object:
    """
    Decode a schema-tagged dictionary.

    @param payload: The payload.
    @return: The decoded object.
    """
    schema = payload.get("schema", "")
    for _, name, _, decode in _CODECS:
        if schema == _schema(name):
            return decode(payload)
    raise UnknownFormatError(f"Unknown schema '{schema}'.")


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise UnknownFormatError(f"Unknown format '{fmt}'; expected one of {', '.join(FORMATS)}.")


def serialize(obj: object, fmt: str = "json") -> bytes:
    """
    Serialize to UTF-8 bytes.

    @param obj: An instance of a registered type.
    @param fmt: "json" or "text".
    @return: The encoded bytes; identical objects give identical bytes.
    """
    _check_format(fmt)
    payload = to_payload(obj)
    if fmt == "json":
        return (json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n").encode("utf-8")
    lines = [f"# {payload['schema']}"]
    for key in sorted(payload):
        if key != "schema":
            lines.append(f"{key}: {json.dumps(payload[key], ensure_ascii=False, sort_keys=True)}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse(data: Union[bytes, str], fmt: str = "json") -> object:
    """
    Inverse of serialize.

    @param data: The encoded bytes or text.
    @param fmt: "json" or "text".
    @return: The decoded object.
    """
    _check_format(fmt)
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if fmt == "json":
        return from_payload(json.loads(text))
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# "):
        raise ValueError("Text payload is missing its schema header.")
    payload: Payload = {"schema": lines[0][2:].strip()}
    for line in lines[1:]:
        if not line.strip():
            continue
        key, _, value = line.partition(": ")
        payload[key] = json.loads(value)
    return from_payload(payload)
