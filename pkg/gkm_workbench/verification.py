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
This module contains the acceptance suite run by `verify-all`. Every case returns CheckResult rows; the report
keeps them in registration order so a fixed seed gives identical output.
"""

# every check takes the same (rng, trials) arguments; several ignore them
# pylint: disable=unused-argument

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

import sympy

from gkm_workbench.blowup import blowup_identity_check, blowup_ring
from gkm_workbench.coulomb import classical_limit, coulomb_3d, coulomb_4d
from gkm_workbench.exact_algebra import LaurentPoly, RatFunc
from gkm_workbench.gkm_engine import (
    DecompositionError,
    MomentGraph,
    build_moment_graph,
    check_gkm,
    decompose,
    psi_basis,
    recombine,
)
from gkm_workbench.group_law import GroupLaw, GroupLawKind, f_add, n_series, series_ring
from gkm_workbench.kostant import A, X, kostant_centralizer_solve
from gkm_workbench.root_system import build_root_datum
from gkm_workbench.shift_algebras import (
    RelationReport,
    ShiftAlgebra,
    f_de_rham,
    multiplicative_hecke_formula,
    nil_hecke_relations_check,
    normalized_theta_check,
)
from gkm_workbench.witt import (
    WittVector,
    ghost_from_witt,
    is_weighted_homogeneous,
    witt_coordinates,
    witt_newton_inverse,
    witt_newton_transform,
    witt_symbols,
)

logger = logging.getLogger(__name__)

VERIFIED = "verified"
MISMATCH = "mismatch"

DEFAULT_SEED = 20240601
DEFAULT_TRIALS = 50
GKM_BOUND = 5
FORMAL_LAWS = 20
FORMAL_ORDER = 8
N_SERIES_RANGE = 6
DE_RHAM_RANGE = 10
MELLIN_DEGREE = 6
WITT_MAX_N = 8


@dataclass(frozen=True)
class CheckResult:
    """One row of the verification report."""

    case: str
    relation: str
    status: str
    lhs_normal_form: str
    rhs_normal_form: str

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED


@dataclass(frozen=True)
class VerificationReport:
    seed: int
    trials: int
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.verified for r in self.results)

    @property
    def mismatches(self) -> list[CheckResult]:
        return [r for r in self.results if not r.verified]

    def cases(self) -> list[str]:
        seen: dict[str, None] = {}
        for result in self.results:
            seen.setdefault(result.case)
        return list(seen)

    def summary_table(self) -> str:
        """
        A fixed-width table: one line per case with its verified and mismatch counts.

        @return: The table text.
        """
        width = max([len("case")] + [len(case) for case in self.cases()])
        lines = [f"{'case'.ljust(width)} | verified | mismatch", f"{'-' * width}-+----------+---------"]
        for case in self.cases():
            rows = [r for r in self.results if r.case == case]
            verified = sum(1 for r in rows if r.verified)
            lines.append(f"{case.ljust(width)} | {verified:>8} | {len(rows) - verified:>8}")
        return "\n".join(lines)


def _result(case: str, relation: str, ok: bool, lhs: object, rhs: object) -> CheckResult:
    return CheckResult(case, relation, VERIFIED if ok else MISMATCH, str(lhs), str(rhs))


def _count(case: str, relation: str, passing: int, total: int) -> CheckResult:
    return _result(case, relation, passing == total, f"{passing}/{total}", f"{total}/{total}")


def _from_report(case: str, report: RelationReport) -> CheckResult:
    return _result(case, report.relation, report.verdict, report.lhs, report.rhs)


def report_rows(case: str, reports: Iterable[RelationReport]) -> list[CheckResult]:
    return [_from_report(case, report) for report in reports]


def _equal(lhs: Union[LaurentPoly, RatFunc], rhs: Union[LaurentPoly, RatFunc]) -> bool:
    difference = RatFunc.coerce(lhs) - RatFunc.coerce(rhs)
    return difference.is_zero()


# Coulomb branches


def check_coulomb_3d(rng: random.Random, trials: int) -> list[CheckResult]:
    presentation = coulomb_3d()
    results = [_from_report("coulomb-3d", report) for report in presentation.verify()]
    for name, fixed in presentation.fixed_generators().items():
        results.append(_result("coulomb-3d", f"involution fixes {name}", fixed, name, name))
    return results


def check_coulomb_4d(rng: random.Random, trials: int) -> list[CheckResult]:
    presentation = coulomb_4d()
    results = [_from_report("coulomb-4d", report) for report in presentation.verify()]
    for name, fixed in presentation.fixed_generators().items():
        results.append(_result("coulomb-4d", f"involution fixes {name}", fixed, name, name))
    limit = classical_limit(presentation)
    psi, w, z = limit.generators
    expected = sympy.expand(w**2 - (psi**2 - 4) * z**2 - 4)
    results.append(
        _result("coulomb-4d", "W^2 - (Psi^2 - 4)Z^2 = 4 at q = 1", limit.quartic == expected, limit.quartic, expected)
    )
    jacobi = limit.jacobi()
    results.append(_result("coulomb-4d", "Jacobi identity", jacobi == 0, jacobi, 0))
    for name, defect in limit.casimir_defects().items():
        results.append(_result("coulomb-4d", f"{{quartic, {name}}} = 0", sympy.expand(defect) == 0, defect, 0))
    return results


def check_classical_3d(rng: random.Random, trials: int) -> list[CheckResult]:
    limit = classical_limit(coulomb_3d())
    phi, u, v = limit.generators
    quartic = sympy.expand((u + 2) * (u - 2) - phi * v**2)
    results = [_result("classical-3d", "(U+2)(U-2) = Phi V^2", limit.quartic == quartic, limit.quartic, quartic)]
    expected = {("Phi", "V"): 2 * u, ("Phi", "U"): 2 * phi * v, ("U", "V"): v**2}
    for (a, b), value in expected.items():
        actual = limit.generator_bracket(sympy.Symbol(a), sympy.Symbol(b))
        results.append(_result("classical-3d", f"{{{a},{b}}}", sympy.expand(actual - value) == 0, actual, value))
    jacobi = limit.jacobi()
    results.append(_result("classical-3d", "Jacobi identity", jacobi == 0, jacobi, 0))
    return results


# Kostant slices


KOSTANT_FORMULAS = {
    ("SL2", GroupLawKind.ADDITIVE): (A - 1 / A) / (2 * X),
    ("PGL2", GroupLawKind.ADDITIVE): (A - 1) / X,
    ("SL2", GroupLawKind.MULTIPLICATIVE): (A - 1 / A) / (X**2 - 1),
    ("PGL2", GroupLawKind.MULTIPLICATIVE): (A - 1) / (X - 1),
}


def check_kostant(rng: random.Random, trials: int) -> list[CheckResult]:
    results = []
    for (group, law), formula in KOSTANT_FORMULAS.items():
        solution = kostant_centralizer_solve(group, law)
        matches = sympy.simplify(solution.expression() - formula) == 0
        relation = f"{group} {law.value}: b"
        results.append(_result("kostant", relation, matches and solution.is_exact(), solution.constraint, formula))
    return results


# moment graphs


def _random_coefficient(graph: MomentGraph, rng: random.Random) -> LaurentPoly:
    ring = graph.ring
    total = ring.zero()
    for _ in range(rng.randint(1, 3)):
        exponent = [0] * ring.ngens
        for _ in range(rng.randint(0, 2)):
            exponent[rng.randrange(ring.ngens)] += 1
        total = total + ring.monomial(exponent, Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
    return total


def _check_graph(name: str, graph: MomentGraph, rng: random.Random, trials: int) -> list[CheckResult]:
    case = f"gkm-{name}"
    size = len(graph.vertices)
    passing, supported, diagonal = 0, 0, 0
    for w in graph.vertices:
        psi = psi_basis(graph, w)
        passing += bool(check_gkm(psi))
        supported += all(psi(v).is_zero() for v in graph.vertices if not graph.bruhat_leq(w, v))
        expected = graph.ring.one()
        for label in graph.inversions(w):
            expected = expected * graph.generator(label)
        diagonal += psi(w) == expected
    results = [
        _count(case, "check_gkm(psi_w)", passing, size),
        _count(case, "psi_w vanishes off the upper set of w", supported, size),
        _count(case, "psi_w(w) = product over inversions", diagonal, size),
    ]
    shell = {v.id for v in graph.shell()}
    interior = [v.id for v in graph.vertices if v.id not in shell]
    round_trips = 0
    for _ in range(trials):
        support = rng.sample(interior, rng.randint(1, min(3, len(interior))))
        coefficients = {key: _random_coefficient(graph, rng) for key in sorted(support)}
        coefficients = {key: value for key, value in coefficients.items() if not value.is_zero()}
        round_trips += decompose(recombine(graph, coefficients)) == coefficients
    results.append(_count(case, "decompose(recombine(c)) = c", round_trips, trials))
    if shell:
        refused = 0
        for vertex_id in sorted(shell):
            try:
                decompose(psi_basis(graph, vertex_id))
            except DecompositionError:
                refused += 1
        results.append(_count(case, "decompose refuses psi terms on the boundary shell", refused, len(shell)))
    logger.info("Moment graph %s: %s vertices checked.", name, size)
    return results


def check_gkm_graphs(rng: random.Random, trials: int) -> list[CheckResult]:
    law = GroupLaw.additive()
    sl2 = build_root_datum("SL2")
    graphs = {
        "sl2-affine-flag": build_moment_graph(sl2, (), law, GKM_BOUND),
        "sl2-affine-gr": build_moment_graph(sl2, None, law, GKM_BOUND),
        "a2-finite": build_moment_graph(build_root_datum("A2"), (), law, 3, affine=False),
    }
    results = []
    for name, graph in graphs.items():
        results.extend(_check_graph(name, graph, rng, trials))
    return results


# blowups


BLOWUP_GENERATORS = {
    ("SL2", GroupLawKind.ADDITIVE): "(y - 1)/x",
    ("PGL2", GroupLawKind.ADDITIVE): "(y**2 - 1)/(2*x)",
    ("SL2", GroupLawKind.MULTIPLICATIVE): "(y - 1)/(x - 1)",
    ("PGL2", GroupLawKind.MULTIPLICATIVE): "(y**2 - 1)/(x**2 - 1)",
}


def check_blowup(rng: random.Random, trials: int) -> list[CheckResult]:
    results = []
    for family in ("SL2", "PGL2"):
        for law in (GroupLaw.additive(), GroupLaw.multiplicative()):
            datum = build_root_datum(family)
            report = blowup_identity_check(datum, law)
            prefix = f"{family} {law.kind.value}"
            presentation = report.presentation
            generator = blowup_ring(law, datum).parse_fraction(BLOWUP_GENERATORS[(family, law.kind)])
            actual = presentation.generator
            results.append(_result("blowup", f"{prefix}: generator", actual == generator, actual, generator))
            for n, holds in report.telescoping.items():
                results.append(_result("blowup", f"{prefix}: telescoping n={n}", holds, holds, True))
            results.append(
                _result(
                    "blowup",
                    f"{prefix}: degenerate relation",
                    presentation.matches,
                    presentation.degenerate_relation,
                    presentation.expected_quotient,
                )
            )
            integral = report.integral_in_homology
            results.append(_result("blowup", f"{prefix}: generator is integral", integral, integral, True))
    return results


# group laws


def check_n_series(rng: random.Random, trials: int) -> list[CheckResult]:
    results = []
    span = range(-N_SERIES_RANGE, N_SERIES_RANGE + 1)
    for index in range(FORMAL_LAWS):
        law = GroupLaw.random(rng.randrange(2**31), FORMAL_ORDER)
        series = {n: n_series(law, n) for n in range(-2 * N_SERIES_RANGE, 2 * N_SERIES_RANGE + 1)}
        failures = [(n, m) for n in span for m in span if f_add(law, series[n], series[m]) != series[n + m]]
        results.append(_result("n-series", f"formal law #{index}: [n+m] = [n] +F [m]", not failures, failures, []))
    law = GroupLaw.multiplicative()
    ring = series_ring()
    base = ring.gen("t") + 1
    for n in span:
        actual = n_series(law, n)
        expected = base**n - 1 if n >= 0 else RatFunc(ring.one(), base ** (-n)) - 1
        relation = f"multiplicative [{n}] = (1+t)^{n} - 1"
        results.append(_result("n-series", relation, _equal(actual, expected), actual, expected))
    return results


def check_de_rham(rng: random.Random, trials: int) -> list[CheckResult]:
    results = []
    for law in (GroupLaw.additive(), GroupLaw.multiplicative()):
        table = f_de_rham(law, DE_RHAM_RANGE)
        ring = next(iter(table.entries.values())).ring
        parameter = ring.gen(ring.variables[0])
        mismatched = []
        for n, value in table.entries.items():
            expected = parameter * n if law.kind is GroupLawKind.ADDITIVE else parameter**n - 1
            if not _equal(value, expected):
                mismatched.append(n)
        label = "n*hbar" if law.kind is GroupLawKind.ADDITIVE else "q^n - 1"
        relation = f"{law.kind.value}: d(x^n) = {label} x^n dx"
        results.append(_result("de-rham", relation, not mismatched, mismatched, []))
        relation = f"{law.kind.value}: f(n+m) = f(n) +F f(m)"
        results.append(_result("de-rham", relation, table.homomorphism, list(table.failures), []))
    return results


# shift algebras


def _random_module_element(algebra: ShiftAlgebra, rng: random.Random) -> LaurentPoly:
    ring = algebra.module_ring
    total = ring.zero()
    for _ in range(rng.randint(1, 3)):
        exponent = [rng.randint(-2, 2) for _ in range(algebra.rank)] + [rng.randint(0, 2)]
        total = total + ring.monomial(exponent, rng.randint(-4, 4))
    return total


def check_mellin(rng: random.Random, trials: int) -> list[CheckResult]:
    results = []
    pairs = 2 * trials
    for law in (GroupLaw.additive(), GroupLaw.multiplicative()):
        algebra = ShiftAlgebra(law)
        agreements = 0
        for _ in range(pairs):
            a = algebra.random_element(rng, MELLIN_DEGREE)
            b = algebra.random_element(rng, MELLIN_DEGREE)
            p = _random_module_element(algebra, rng)
            agreements += _equal(algebra.mellin_act(a * b, p), algebra.mellin_act(a, algebra.mellin_act(b, p)))
        results.append(_count("mellin", f"{law.kind.value}: (ab).p = a.(b.p)", agreements, pairs))
        results.append(_from_report("mellin", normalized_theta_check(law)))
    return results


# Witt vectors


POWER_SUMS_6 = (
    "x1",
    "x1**2 - 2*x2",
    "x1**3 - 3*x1*x2 + 3*x3",
    "x1**4 - 4*x1**2*x2 + 4*x1*x3 + 2*x2**2 - 4*x4",
    "x1**5 - 5*x1**3*x2 + 5*x1**2*x3 - 5*x1*(x4 - x2**2) - 5*x2*x3 + 5*x5",
)
WITT_COORDINATES_6 = (
    "x1",
    "-x2",
    "x3 - x1*x2",
    "x1*x3 - x2*x1**2 - x4",
    "x5 - x1**3*x2 + x1**2*x3 - x1*(x4 - x2**2) - x2*x3",
)


def _parse_components(texts: Iterable[str], symbols: tuple[sympy.Symbol, ...]) -> list[sympy.Expr]:
    names = {str(s): s for s in symbols}
    return [sympy.expand(sympy.sympify(text, locals=names)) for text in texts]


def _matches(case: str, relation: str, actual: sympy.Expr, expected: sympy.Expr) -> CheckResult:
    return _result(case, relation, sympy.expand(actual - expected) == 0, actual, expected)


def _ghost_values(transform: tuple[sympy.Expr, ...], vector: WittVector) -> list[sympy.Expr]:
    values = dict(zip(witt_symbols(vector.length), vector.components))
    return [sympy.expand(g.subs(values)) for g in transform]


def check_witt(rng: random.Random, trials: int) -> list[CheckResult]:
    symbols = witt_symbols(5)
    ghosts = witt_newton_transform(6)
    results = []
    for k, (actual, expected) in enumerate(zip(ghosts, _parse_components(POWER_SUMS_6, symbols)), start=1):
        results.append(_matches("witt", f"n=6 ghost component {k}", actual, expected))
    w = witt_coordinates(symbols)
    for k, (actual, expected) in enumerate(zip(w, _parse_components(WITT_COORDINATES_6, symbols)), start=1):
        results.append(_matches("witt", f"n=6 Witt coordinate w{k}", actual, expected))
    divisor_sums = ghost_from_witt(w)
    agree = all(sympy.expand(a - b) == 0 for a, b in zip(divisor_sums, ghosts))
    results.append(_result("witt", "ghosts = divisor sums of Witt coordinates", agree, agree, True))
    homogeneous = is_weighted_homogeneous(ghosts, symbols)
    results.append(_result("witt", "ghost component k has weight k", homogeneous, homogeneous, True))

    # symbolic transforms once per n, evaluated on the random samples
    transforms = {n: witt_newton_transform(n) for n in range(2, WITT_MAX_N + 1)}
    additive, inverted = 0, 0
    checked = min(trials, WITT_MAX_N - 1)
    for index in range(trials):
        n = 2 + index % (WITT_MAX_N - 1)
        x, y = WittVector.random(rng, n - 1), WittVector.random(rng, n - 1)
        product = _ghost_values(transforms[n], x * y)
        left, right = _ghost_values(transforms[n], x), _ghost_values(transforms[n], y)
        additive += all(sympy.expand(p - a - b) == 0 for p, a, b in zip(product, left, right))
        if index < checked:
            inverted += witt_newton_inverse(left) == x
    results.append(_count("witt", "ghost(x*y) = ghost(x) + ghost(y)", additive, trials))
    results.append(_count("witt", "inverse(ghost(x)) = x", inverted, checked))
    return results


# nil-Hecke


def check_nil_hecke(rng: random.Random, trials: int) -> list[CheckResult]:
    results = []
    for family in ("SL2", "A2"):
        for law in (GroupLaw.additive(), GroupLaw.multiplicative()):
            reports = nil_hecke_relations_check(build_root_datum(family), law, seed=rng.randrange(2**31))
            results.extend(_from_report(f"nil-hecke-{family.lower()}", report) for report in reports)
    for weight in ((2,), (1,), (-1,)):
        results.append(_from_report("nil-hecke-sl2", multiplicative_hecke_formula(build_root_datum("SL2"), weight)))
    return results


Check = Callable[[random.Random, int], list[CheckResult]]

CHECKS: tuple[tuple[str, Check], ...] = (
    ("coulomb-3d", check_coulomb_3d),
    ("coulomb-4d", check_coulomb_4d),
    ("classical-3d", check_classical_3d),
    ("kostant", check_kostant),
    ("gkm", check_gkm_graphs),
    ("blowup", check_blowup),
    ("n-series", check_n_series),
    ("de-rham", check_de_rham),
    ("mellin", check_mellin),
    ("witt", check_witt),
    ("nil-hecke", check_nil_hecke),
)


def verify_all(seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS) -> VerificationReport:
    """
    Run every acceptance check.

    @param seed: Seed of the randomized property checks; each case derives its own generator from it.
    @param trials: Random samples per property check.
    @return: The report.
    """
    results: list[CheckResult] = []
    for name, check in CHECKS:
        logger.info("Verifying %s.", name)
        rows = check(random.Random(f"{seed}/{name}"), trials)
        for row in rows:
            if not row.verified:
                logger.error(
                    "Mismatch in %s: %s (%s != %s).", row.case, row.relation, row.lhs_normal_form, row.rhs_normal_form
                )
        logger.info("Finished %s: %s/%s verified.", name, sum(1 for r in rows if r.verified), len(rows))
        results.extend(rows)
    return VerificationReport(seed, trials, tuple(results))
