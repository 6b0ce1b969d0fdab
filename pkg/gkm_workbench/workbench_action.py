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
This module contains the workbench command: flag parsing, input validation and the dispatch of every subcommand
to its computation.
"""

import argparse
import logging
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from gkm_workbench.coulomb import build_presentation
from gkm_workbench.gkm_engine import MomentGraph, build_moment_graph, check_gkm, psi_basis, structure_constants
from gkm_workbench.group_law import GroupLaw, GroupLawKind, n_series
from gkm_workbench.kostant import SUPPORTED_GROUPS, kostant_centralizer_solve
from gkm_workbench.root_system import RootDatum, UnsupportedFamilyError, build_root_datum
from gkm_workbench.serialization import FORMATS, serialize
from gkm_workbench.shift_algebras import ShiftAlgebra, commutator, f_de_rham, nil_hecke_relations_check
from gkm_workbench.utils.gh_action import get_action_input, set_action_failed, set_action_output
from gkm_workbench.verification import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    VerificationReport,
    report_rows,
    verify_all,
)
from gkm_workbench.witt import WittVector, witt_newton_transform

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("gkm", "psi", "decompose", "diffop", "nilhecke", "fgl", "kostant", "coulomb", "witt", "verify-all")

# every library exception derives from one of these
LIBRARY_ERRORS = (ValueError, ArithmeticError)

GROUP_PATTERN = re.compile(r"^(?P<family>[a-z0-9x]+?)(?:-(?P<kind>affine|gr))?$")


@dataclass(frozen=True)
class ParsedGroup:
    """A parsed --group label: the root datum and which moment graph it names."""

    label: str
    datum: RootDatum
    affine: bool
    grassmannian: bool

    @property
    def parabolic(self) -> Optional[tuple[int, ...]]:
        """None selects the whole finite Weyl group, i.e. the affine Grassmannian."""
        return None if self.grassmannian else ()


def parse_group(label: str) -> ParsedGroup:
    """
    Resolve a group label such as "sl2", "a2-affine", "sl2-gr" or "t1".

    @param label: The label.
    @return: The parsed group.
    """
    match = GROUP_PATTERN.match(label.strip().lower())
    if match is None:
        raise UnsupportedFamilyError(f"Unsupported group label '{label}'.")
    datum = build_root_datum(match.group("family"))
    kind = match.group("kind")
    return ParsedGroup(label, datum, kind is not None, kind == "gr")


def parse_word(text: str) -> tuple[int, ...]:
    """
    Parse a reduced word: "e" (or empty) for the identity, else simple indices such as "1,0,1" or "101".

    @param text: The word.
    @return: The indices.
    """
    text = text.strip()
    if text in ("", "e"):
        return ()
    parts = text.split(",") if "," in text else list(text)
    return tuple(int(part) for part in parts)


def _integer(value: str) -> Optional[int]:
    try:
        return int(value)
    except ValueError:
        return None


def build_parser() -> argparse.ArgumentParser:
    """
    The command-line parser. Every flag defaults to its INPUT_<NAME> environment value.

    @return: The parser.
    """
    parser = argparse.ArgumentParser(prog="gkm-workbench", description="Exact GKM and shift-operator workbench.")
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument("--group", default=get_action_input("GROUP", "sl2-affine"))
    parser.add_argument("--law", default=get_action_input("LAW", GroupLawKind.ADDITIVE.value))
    parser.add_argument("--bound", default=get_action_input("BOUND", "2"))
    parser.add_argument("--seed", default=get_action_input("SEED", str(DEFAULT_SEED)))
    parser.add_argument("--trials", default=get_action_input("TRIALS", str(DEFAULT_TRIALS)))
    parser.add_argument("--out", default=get_action_input("OUT", ""))
    parser.add_argument("--format", default=get_action_input("FORMAT", "json"))
    parser.add_argument("--w", default=get_action_input("W", "e"))
    parser.add_argument("--n", default=get_action_input("N", "1"))
    parser.add_argument("--dim", default=get_action_input("DIM", "3"))
    parser.add_argument("--n-max", default=get_action_input("N_MAX", "10"))
    parser.add_argument("--order", default=get_action_input("ORDER", "8"))
    parser.add_argument(
        "--loop-rotation",
        action="store_true",
        default=get_action_input("LOOP_ROTATION", "false").lower() == "true",
    )
    return parser


# pylint: disable=too-many-instance-attributes
class WorkbenchAction:
    """
    Class to handle one workbench command.
    """

    def __init__(self, argv: Optional[Sequence[str]] = None) -> None:
        """
        Parse and validate the command. Invalid flags exit 2 (argparse); invalid values exit 1.

        @param argv: Command-line arguments without the program name; sys.argv[1:] when omitted.
        @return: None
        """
        arguments = build_parser().parse_args(sys.argv[1:] if argv is None else argv)
        self.subcommand: str = arguments.subcommand
        self.group: str = arguments.group
        self.law: str = arguments.law.strip().lower()
        self.raw_bound: str = arguments.bound
        self.raw_seed: str = arguments.seed
        self.raw_trials: str = arguments.trials
        self.out: str = arguments.out
        self.format: str = arguments.format.strip().lower()
        self.w: str = arguments.w
        self.raw_n: str = arguments.n
        self.raw_dim: str = arguments.dim
        self.raw_n_max: str = arguments.n_max
        self.raw_order: str = arguments.order
        self.loop_rotation: bool = arguments.loop_rotation

        self.__validate_inputs()

        self.bound: int = int(self.raw_bound)
        self.seed: int = int(self.raw_seed)
        self.trials: int = int(self.raw_trials)
        self.n: int = int(self.raw_n)
        self.dim: int = int(self.raw_dim)
        self.n_max: int = int(self.raw_n_max)
        self.order: int = int(self.raw_order)

    def run(self) -> tuple[bool, str]:
        """
        Run the subcommand and write its artifact.

        @return: tuple[bool, str] - A tuple containing the status and message.
        """
        handlers: dict[str, Callable[[], tuple[object, bool, str]]] = {
            "gkm": self._gkm,
            "psi": self._psi,
            "decompose": self._decompose,
            "diffop": self._diffop,
            "nilhecke": self._nilhecke,
            "fgl": self._fgl,
            "kostant": self._kostant,
            "coulomb": self._coulomb,
            "witt": self._witt,
            "verify-all": self._verify_all,
        }
        logger.info("Starting %s.", self.subcommand)
        try:
            artifact, status, message = handlers[self.subcommand]()
            self._write(serialize(artifact, self.format))
        except LIBRARY_ERRORS as error:
            logger.error("%s failed: %s", self.subcommand, error)
            return False, f"Error: {error}"
        except OSError as error:
            logger.error("Writing the artifact to '%s' failed: %s", self.out, error)
            return False, f"Error: cannot write '{self.out}'."
        set_action_output("status", "verified" if status else "mismatch")
        logger.info("Finished %s.", self.subcommand)
        return status, message

    def _write(self, data: bytes) -> None:
        if not self.out:
            sys.stdout.write(data.decode("utf-8"))
            sys.stdout.flush()
            return
        path = Path(self.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
        logger.info("Artifact written to %s.", path)

    # subcommands

    def _group_law(self) -> GroupLaw:
        return GroupLaw.from_label(self.law, self.seed, self.order)

    def _graph(self) -> MomentGraph:
        parsed = parse_group(self.group)
        graph = build_moment_graph(
            parsed.datum, parsed.parabolic, self._group_law(), self.bound, self.loop_rotation, affine=parsed.affine
        )
        logger.debug("Graph %s: %s vertices, %s edges.", self.group, len(graph.vertices), len(graph.edges))
        return graph

    def _gkm(self) -> tuple[object, bool, str]:
        graph = self._graph()
        return graph, True, f"Moment graph of {self.group}: {len(graph.vertices)} vertices, {len(graph.edges)} edges."

    def _psi(self) -> tuple[object, bool, str]:
        graph = self._graph()
        psi = psi_basis(graph, parse_word(self.w))
        check = check_gkm(psi)
        if not check:
            return psi, False, f"Error: psi_{self.w} violates the GKM condition on edge {check.edge}."
        return psi, True, f"psi_{self.w} computed on {len(graph.vertices)} vertices."

    def _decompose(self) -> tuple[object, bool, str]:
        words = [parse_word(part) for part in self.w.split(";")]
        decomposition = structure_constants(self._graph(), words)
        if not decomposition.reconstructs():
            return decomposition, False, "Error: the psi expansion does not reconstruct the product."
        return decomposition, True, f"Product decomposed into {len(decomposition.coefficients)} psi functions."

    def _diffop(self) -> tuple[object, bool, str]:
        law = self._group_law()
        algebra = ShiftAlgebra(law)
        bracket = commutator(algebra.coordinate(0), algebra.shift(self.n))
        logger.info("In the shift algebra [y, x^%s] = %s.", self.n, bracket)
        table = f_de_rham(law, self.n_max, self.order if law.kind is GroupLawKind.FORMAL else None)
        if not table.homomorphism:
            return table, False, f"Error: f(n+m) = f(n) +F f(m) fails for {list(table.failures)}."
        return table, True, f"F-de Rham differentials x^n -> [n]_F x^n dx computed for |n| <= {self.n_max}."

    def _nilhecke(self) -> tuple[object, bool, str]:
        parsed = parse_group(self.group)
        reports = nil_hecke_relations_check(parsed.datum, self._group_law(), trials=min(self.trials, 5), seed=self.seed)
        report = VerificationReport(self.seed, self.trials, tuple(report_rows("nilhecke", reports)))
        return report, report.passed, self._summary(report)

    def _fgl(self) -> tuple[object, bool, str]:
        series = n_series(self._group_law(), self.n)
        return series, True, f"[{self.n}]_F(t) = {series}"

    def _kostant(self) -> tuple[object, bool, str]:
        group = parse_group(self.group).datum.family
        if group not in SUPPORTED_GROUPS:
            raise UnsupportedFamilyError(f"Kostant slice computations cover {', '.join(SUPPORTED_GROUPS)}.")
        solution = kostant_centralizer_solve(group, GroupLawKind(self.law))
        if not solution.is_exact():
            return solution, False, f"Error: b = {solution.constraint} does not centralize the slice."
        return solution, True, f"b = {solution.constraint}"

    def _coulomb(self) -> tuple[object, bool, str]:
        presentation = build_presentation(self.dim)
        report = VerificationReport(
            self.seed, self.trials, tuple(report_rows(f"coulomb-{self.dim}d", presentation.verify()))
        )
        return report, report.passed, self._summary(report)

    def _witt(self) -> tuple[object, bool, str]:
        ghosts = WittVector(witt_newton_transform(self.n))
        return ghosts, True, f"Newton transform of U_{self.n}: {len(ghosts.components)} ghost components."

    def _verify_all(self) -> tuple[object, bool, str]:
        report = verify_all(self.seed, self.trials)
        return report, report.passed, self._summary(report)

    @staticmethod
    def _summary(report: VerificationReport) -> str:
        logger.info("Verification summary:\n%s", report.summary_table())
        mismatches = len(report.mismatches)
        if mismatches:
            return f"Error: {mismatches} of {len(report.results)} relations are a mismatch."
        return f"All {len(report.results)} relations verified."

    def __validate_inputs(self) -> None:
        """
        Validate the inputs. When the inputs are not valid, the action will fail.

        @return: None
        """
        error_detected = False

        try:
            parse_group(self.group)
        except UnsupportedFamilyError:
            logger.error("Failure: GROUP is not one of the supported values.")
            error_detected = True

        if self.law not in [kind.value for kind in GroupLawKind]:
            logger.error("Failure: LAW is not one of the supported values.")
            error_detected = True

        for name, value, minimum in (
            ("BOUND", self.raw_bound, 0),
            ("SEED", self.raw_seed, None),
            ("TRIALS", self.raw_trials, 1),
            ("N", self.raw_n, None),
            ("DIM", self.raw_dim, None),
            ("N_MAX", self.raw_n_max, 0),
            ("ORDER", self.raw_order, 1),
        ):
            number = _integer(value)
            if number is None or (minimum is not None and number < minimum):
                logger.error("Failure: %s is not set correctly.", name)
                error_detected = True

        if self.format not in FORMATS:
            logger.error("Failure: FORMAT is not one of the supported values.")
            error_detected = True

        if self.subcommand == "coulomb" and self.raw_dim.strip() not in ("3", "4"):
            logger.error("Failure: DIM is not one of the supported values.")
            error_detected = True

        if self.subcommand == "witt" and (_integer(self.raw_n) or 0) < 2:
            logger.error("Failure: N is not set correctly.")
            error_detected = True

        if self.subcommand in ("psi", "decompose"):
            try:
                for part in self.w.split(";"):
                    parse_word(part)
            except ValueError:
                logger.error("Failure: W is not set correctly.")
                error_detected = True

        if self.subcommand == "kostant" and self.law == GroupLawKind.FORMAL.value:
            logger.error("Failure: LAW is not one of the supported values.")
            error_detected = True

        logger.debug("Input - `subcommand`: %s", self.subcommand)
        logger.debug("Input - `group`: %s", self.group)
        logger.debug("Input - `law`: %s", self.law)
        logger.debug("Input - `bound`: %s", self.raw_bound)
        logger.debug("Input - `seed`: %s", self.raw_seed)
        logger.debug("Input - `trials`: %s", self.raw_trials)
        logger.debug("Input - `format`: %s", self.format)
        logger.debug("Input - `out`: %s", self.out)

        if error_detected:
            set_action_failed("Inputs validation failed.")
