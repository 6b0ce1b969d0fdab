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


import json
import logging

import pytest

from gkm_workbench.root_system import UnsupportedFamilyError
from gkm_workbench.serialization import parse
from gkm_workbench.verification import CheckResult, VerificationReport
from gkm_workbench.workbench_action import WorkbenchAction, parse_group, parse_word


# parse_group / parse_word

@pytest.mark.parametrize(
    "label, family, affine, grassmannian",
    [
        ("sl2", "SL2", False, False),
        ("SL2-affine", "SL2", True, False),
        ("pgl2-gr", "PGL2", True, True),
        ("a2", "A2", False, False),
        ("a1xt1", "A1xT1", False, False),
    ],
)
def test_parse_group(label, family, affine, grassmannian):
    parsed = parse_group(label)

    assert family == parsed.datum.family
    assert affine == parsed.affine
    assert grassmannian == parsed.grassmannian
    assert (None if grassmannian else ()) == parsed.parabolic


@pytest.mark.parametrize("label", ["sl2-flag", "b2", "", "sl2 affine"])
def test_parse_group_unsupported(label):
    with pytest.raises(UnsupportedFamilyError):
        parse_group(label)


@pytest.mark.parametrize(
    "text, expected",
    [("e", ()), ("", ()), ("1", (1,)), ("1,0,1", (1, 0, 1)), ("10", (1, 0)), (" 0, 1 ", (0, 1))],
)
def test_parse_word(text, expected):
    assert expected == parse_word(text)


def test_parse_word_invalid():
    with pytest.raises(ValueError):
        parse_word("1,a")


# input validation

def test_validate_inputs_valid(clean_inputs, caplog):
    caplog.set_level(logging.ERROR)

    action = WorkbenchAction(["coulomb", "--dim", "4"])

    assert "Failure" not in caplog.text
    assert 4 == action.dim
    assert "sl2-affine" == action.group


@pytest.mark.parametrize(
    "argv, error_message",
    [
        (["gkm", "--group", "e8"], "Failure: GROUP is not one of the supported values."),
        (["gkm", "--law", "elliptic"], "Failure: LAW is not one of the supported values."),
        (["gkm", "--bound", "-1"], "Failure: BOUND is not set correctly."),
        (["gkm", "--bound", "two"], "Failure: BOUND is not set correctly."),
        (["gkm", "--seed", "x"], "Failure: SEED is not set correctly."),
        (["verify-all", "--trials", "0"], "Failure: TRIALS is not set correctly."),
        (["fgl", "--n", "1.5"], "Failure: N is not set correctly."),
        (["diffop", "--n-max", "-2"], "Failure: N_MAX is not set correctly."),
        (["fgl", "--order", "0"], "Failure: ORDER is not set correctly."),
        (["gkm", "--format", "yaml"], "Failure: FORMAT is not one of the supported values."),
        (["coulomb", "--dim", "5"], "Failure: DIM is not one of the supported values."),
        (["coulomb", "--dim", "three"], "Failure: DIM is not set correctly."),
        (["witt", "--n", "1"], "Failure: N is not set correctly."),
        (["psi", "--w", "1,x"], "Failure: W is not set correctly."),
        (["decompose", "--w", "1;;b"], "Failure: W is not set correctly."),
        (["kostant", "--law", "formal"], "Failure: LAW is not one of the supported values."),
    ],
)
def test_validate_inputs_invalid(clean_inputs, caplog, capsys, argv, error_message):
    with pytest.raises(SystemExit) as e:
        caplog.set_level(logging.ERROR)

        WorkbenchAction(argv)

    assert e.value.code == 1, f"Expected SystemExit with code 1 for {argv}"
    assert error_message in caplog.text, f"Expected error message '{error_message}' for {argv}"
    assert "::error::Inputs validation failed." in capsys.readouterr().out


def test_validate_inputs_from_environment(clean_inputs, caplog):
    clean_inputs.setenv("INPUT_BOUND", "many")

    with pytest.raises(SystemExit) as e:
        WorkbenchAction(["gkm"])

    assert e.value.code == 1
    assert "Failure: BOUND is not set correctly." in caplog.text


def test_flags_override_environment(clean_inputs):
    clean_inputs.setenv("INPUT_DIM", "3")
    clean_inputs.setenv("INPUT_LOOP_ROTATION", "true")

    action = WorkbenchAction(["coulomb", "--dim", "4"])

    assert 4 == action.dim
    assert action.loop_rotation


@pytest.mark.parametrize("argv", [["lattice"], [], ["gkm", "--colour", "red"]])
def test_invalid_flags(clean_inputs, argv):
    with pytest.raises(SystemExit) as e:
        WorkbenchAction(argv)

    assert e.value.code == 2


# run

def test_run_fgl(clean_inputs, tmp_path):
    out = tmp_path / "fgl.json"

    status, message = WorkbenchAction(["fgl", "--law", "multiplicative", "--n", "2", "--out", str(out)]).run()

    assert True == status
    assert message.startswith("[2]_F(t) = ")
    assert "gkm-workbench/laurent-poly/v1" == json.loads(out.read_text(encoding="utf-8"))["schema"]


def test_run_coulomb(clean_inputs, tmp_path):
    out = tmp_path / "reports" / "coulomb.txt"

    status, message = WorkbenchAction(["coulomb", "--dim", "4", "--format", "text", "--out", str(out)]).run()

    assert True == status
    assert "All 4 relations verified." == message
    report = parse(out.read_bytes(), "text")
    assert {"coulomb-4d"} == set(report.cases())


def test_run_kostant(clean_inputs, tmp_path):
    out = tmp_path / "kostant.json"

    status, message = WorkbenchAction(["kostant", "--group", "pgl2", "--out", str(out)]).run()

    assert True == status
    assert message.startswith("b = ")
    assert parse(out.read_bytes()).is_exact()


def test_run_kostant_unsupported_group(clean_inputs):
    status, message = WorkbenchAction(["kostant", "--group", "a2"]).run()

    assert False == status
    assert message.startswith("Error: ")


def test_run_witt(clean_inputs, capsys):
    status, message = WorkbenchAction(["witt", "--n", "4"]).run()

    assert True == status
    assert "Newton transform of U_4: 3 ghost components." == message
    assert 3 == len(parse(capsys.readouterr().out).components)


def test_run_gkm_to_stdout(clean_inputs, capsys):
    status, message = WorkbenchAction(["gkm", "--group", "sl2-gr", "--bound", "3"]).run()

    assert True == status
    assert message.startswith("Moment graph of sl2-gr: 4 vertices")
    assert 4 == len(json.loads(capsys.readouterr().out)["vertices"])


def test_run_psi_with_loop_rotation(clean_inputs, capsys, sl2_rotation_graph):
    status, _ = WorkbenchAction(["psi", "--bound", "3", "--loop-rotation", "--w", "1"]).run()

    assert True == status
    psi = parse(capsys.readouterr().out)
    assert sl2_rotation_graph == psi.graph


def test_run_decompose(clean_inputs, capsys):
    status, message = WorkbenchAction(["decompose", "--group", "sl2", "--bound", "1", "--w", "1;1"]).run()

    assert True == status
    assert "Product decomposed into 1 psi functions." == message


def test_run_decompose_on_the_shell(clean_inputs, caplog, capsys):
    status, message = WorkbenchAction(["decompose", "--group", "sl2-affine", "--bound", "1", "--w", "1;1"]).run()

    assert False == status
    assert message.startswith("Error: f has a ψ_")
    assert "boundary shell of bound 1" in message
    assert "decompose failed" in caplog.text
    assert "" == capsys.readouterr().out


def test_run_diffop_logs_commutator(clean_inputs, caplog, capsys):
    caplog.set_level(logging.INFO)

    status, _ = WorkbenchAction(["diffop", "--n", "2", "--n-max", "3"]).run()

    assert True == status
    assert "In the shift algebra [y, x^2] = x^2*(2*hbar)" in caplog.text
    assert 7 == len(parse(capsys.readouterr().out).entries)


def test_run_vertex_outside_graph(clean_inputs, caplog):
    status, message = WorkbenchAction(["psi", "--bound", "1", "--w", "1,0"]).run()

    assert False == status
    assert message.startswith("Error: ")
    assert "psi failed" in caplog.text


def test_run_unwritable_output(clean_inputs, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("", encoding="utf-8")

    status, message = WorkbenchAction(["witt", "--n", "3", "--out", str(blocker / "witt.json")]).run()

    assert False == status
    assert f"Error: cannot write '{blocker / 'witt.json'}'." == message


def test_run_verify_all_sets_output(clean_inputs, mocker, tmp_path, caplog):
    caplog.set_level(logging.INFO)
    output = tmp_path / "github_output"
    clean_inputs.setenv("GITHUB_OUTPUT", str(output))
    results = (
        CheckResult("witt", "inverse", "verified", "1/1", "1/1"),
        CheckResult("gkm", "psi", "mismatch", "x", "0"),
    )
    report = VerificationReport(1, 1, results)
    mock_verify = mocker.patch("gkm_workbench.workbench_action.verify_all", return_value=report)

    argv = ["verify-all", "--seed", "1", "--trials", "1", "--out", str(tmp_path / "r.json")]

    status, message = WorkbenchAction(argv).run()

    mock_verify.assert_called_once_with(1, 1)
    assert False == status
    assert "Error: 1 of 2 relations are a mismatch." == message
    assert "status=mismatch" in output.read_text(encoding="utf-8")
    assert "case | verified | mismatch" in caplog.text
