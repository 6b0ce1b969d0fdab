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

import pytest

from gkm_workbench.gkm_engine import build_moment_graph
from gkm_workbench.group_law import GroupLaw
from gkm_workbench.root_system import build_root_datum


@pytest.fixture
def mock_logging_setup(mocker):
    """Fixture to mock the basic logging setup using pytest-mock."""
    mock_log_config = mocker.patch("logging.basicConfig")
    yield mock_log_config


@pytest.fixture
def clean_inputs(monkeypatch):
    """Fixture to remove every INPUT_* variable so flag defaults are the built-in ones."""
    for name in ("GROUP", "LAW", "BOUND", "SEED", "TRIALS", "OUT", "FORMAT", "W", "N", "DIM", "N_MAX", "ORDER"):
        monkeypatch.delenv(f"INPUT_{name}", raising=False)
    monkeypatch.delenv("INPUT_LOOP_ROTATION", raising=False)
    monkeypatch.delenv("GITHUB_OUTPUT", raising=False)
    return monkeypatch


@pytest.fixture
def sl2():
    return build_root_datum("SL2")


@pytest.fixture
def sl2_finite_graph(sl2):
    """The two-vertex moment graph of the finite SL2 flag variety."""
    return build_moment_graph(sl2, (), GroupLaw.additive(), 1, affine=False)


@pytest.fixture
def sl2_rotation_graph(sl2):
    """The affine SL2 flag variety with loop rotation, up to length 3."""
    return build_moment_graph(sl2, (), GroupLaw.additive(), 3, loop_rotation=True)
