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
import subprocess

import pytest

jsonschema = pytest.importorskip("jsonschema")


def run(cli_path, *args, env=None):
    return subprocess.run([cli_path, *args], capture_output=True, text=True, env=env)


CASES = [
    ["analyze", "--state", "1/2(|00>+|01>+|10>+|11>)"],
    ["analyze", "--state", "1/sqrt(3)(|001>+|010>+|100>)", "--partition", "2"],
    ["analyze", "--state", "3|00> + 4i|11>"],
    ["teleport", "--state", "0.6|0> + 0.8i|1>", "--seed", "11"],
    ["teleport", "--state", "|1>", "--shots", "500"],
    ["witness", "--target", "1/sqrt(2)(|00>+|11>)", "--test", "1/sqrt(2)(|00>+|11>)"],
]


@pytest.mark.parametrize("args", CASES, ids=lambda a: " ".join(a[:2]))
def test_json_reports_match_schema(cli_path, schema, args):
    proc = run(cli_path, *args, "--format", "json")
    assert proc.returncode == 0, proc.stderr
    jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)


def test_matrix_file_witness(cli_path, schema, data_dir):
    proc = run(cli_path, "witness", "--target", str(data_dir / "phi_plus.json"), "--test",
               str(data_dir / "maximally_mixed.json"), "--format", "json")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
    assert doc["verdict"] == "not_detected"


def test_exit_codes(cli_path, data_dir):
    assert run(cli_path, "analyze", "--state", "|0> + |2>").returncode == 2
    assert run(cli_path, "witness", "--target", str(data_dir / "non_hermitian.json"), "--test", "|00>").returncode == 2
    assert run(cli_path, "analyze", "--state", "|00>", "--threshold", "2").returncode == 3


def test_output_is_deterministic(cli_path):
    args = ("teleport", "--state", "0.6|0> + 0.8i|1>", "--seed", "5", "--shots", "20", "--format", "json")
    assert run(cli_path, *args).stdout == run(cli_path, *args).stdout
