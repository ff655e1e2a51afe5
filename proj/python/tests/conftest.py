# Copyright 2026 The qschmidt Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def qs():
    return pytest.importorskip("qschmidt")


@pytest.fixture(scope="session")
def schema():
    path = pathlib.Path(os.environ.get("QSCHMIDT_SCHEMA", ROOT / "docs" / "report.schema.json"))
    return json.loads(path.read_text())


@pytest.fixture(scope="session")
def cli_path():
    path = os.environ.get("QSCHMIDT_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("QSCHMIDT_CLI not set")
    return path


@pytest.fixture(scope="session")
def data_dir():
    return ROOT / "tests" / "data"
