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
This module provides the runtime inputs and failure signalling shared by the shell and the GitHub Action surface.
"""

import os
import sys
from typing import Optional


def get_action_input(name: str, default: Optional[str] = None) -> str:
    """
    Read a workbench setting from the environment.

    @param name: The setting name, e.g. "n-max"; it is looked up as INPUT_N_MAX.
    @param default: Value used when the variable is unset or empty.
    @return: The value, or an empty string when neither is available.
    """
    value = os.getenv(f'INPUT_{name.replace("-", "_").upper()}', default="")
    return value if value else (default or "")


def set_action_output(name: str, value: str) -> None:
    """
    Publish a step output when running inside a GitHub workflow; no-op elsewhere.

    @param name: The output name.
    @param value: A single-line value.
    @return: None
    """
    path = os.getenv("GITHUB_OUTPUT", "")
    if not path:
        return
    with open(path, "a", encoding="utf-8") as output:
        output.write(f"{name}={value}\n")


def set_action_failed(message: str) -> None:
    """
    Report a failed run and exit with code 1.

    @param message: The error message to be displayed.
    @return: None
    """
    print(f"::error::{message}")
    sys.exit(1)
