# Copyright 2026 The normtrace Authors
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

"""Runs ntcodes over the fixture files, validates --json output against the
shipped schema and checks exit codes."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(binary, args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    binary, schema_path, data_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    validator = jsonschema.Draft202012Validator(json.loads(schema_path.read_text()))
    failures = []

    def expect_json(args, code=0):
        rc, out, err = run(binary, [*args, "--json"])
        if rc != code:
            failures.append(f"{args}: exit {rc}, expected {code}: {err.strip()}")
            return None
        doc = json.loads(out)
        errors = sorted(validator.iter_errors(doc), key=str)
        if errors:
            failures.append(f"{args}: {errors[0].message}")
        return doc

    square_u = {"f9_staircase10", "f9_degree4", "f16_staircase12", "f16_selfdual_box", "f4_hermitian",
                "f9_m23", "f9_m21", "f81_onepoint1539", "f9_full", "f9_len15_dim12", "f9_constants"}
    repairable = {"f9_staircase10", "f9_degree4", "f16_staircase12", "f4_hermitian", "f9_constants"}
    for spec in sorted(data_dir.glob("*.spec")):
        for cmd in ["points", "params", "gen-matrix", "dual", "classify"]:
            expect_json([cmd, str(spec)])
        if spec.stem in square_u:
            expect_json(["hull", str(spec)])
        if spec.stem in repairable:
            expect_json(["repair-sim", str(spec), "--trials", "2", "--seed", "3"])

    doc = expect_json(["params", str(data_dir / "f9_staircase10.spec"), "--brute", "--witness"])
    if doc and (doc["d"] != 15 or doc["brute"]["status"] != "budget_exceeded" or not doc["witness"]["verified"]):
        failures.append("f9_staircase10: expected d = 15, witness verified, brute force over budget")
    doc = expect_json(["params", str(data_dir / "f4_hermitian.spec"), "--brute", "--witness"])
    if doc and (doc["d"] != 2 or doc["brute"]["status"] != "match" or not doc["witness"]["verified"]):
        failures.append("f4_hermitian: expected d = 2 on all routes")
    doc = expect_json(["classify", str(data_dir / "f16_selfdual_box.spec")])
    if doc and (doc["classification"] != "self-dual" or doc["k"] != 24):
        failures.append("f16_selfdual_box: expected self-dual, k = 24")
    doc = expect_json(["dual", str(data_dir / "f9_full.spec")])
    if doc and doc["complement_size"] != 0:
        failures.append("f9_full: dual should be the zero code")
    doc = expect_json(["repair-sim", str(data_dir / "f4_hermitian.spec"), "--trials", "5"])
    if doc and (doc["max_bandwidth"] != 9 or doc["baseline"] != 14 or doc["success_rate"] != 1.0):
        failures.append("f4_hermitian: expected max bandwidth 9, baseline 14")
    doc = expect_json(["repair-sim", str(data_dir / "f16_staircase12.spec"), "--trials", "0"])
    if doc and (doc["bound"] != 37 or doc["baseline"] != 124 or "runs" in doc):
        failures.append("f16_staircase12: trials=0 should report only the bounds")
    first = run(binary, ["repair-sim", str(data_dir / "f4_hermitian.spec"), "--json", "--seed", "11"])[1]
    second = run(binary, ["repair-sim", str(data_dir / "f4_hermitian.spec"), "--json", "--seed", "11"])[1]
    if first != second:
        failures.append("repair-sim output differs between identical runs")
    doc = expect_json(["verify-paper"])
    if doc and (len(doc["criteria"]) != 13 or not doc["ok"]):
        failures.append("verify-paper: expected 13 passing criteria")
    doc = expect_json(["table1"])
    if doc and (len(doc["rows"]) != 11 or not doc["ok"]):
        failures.append("table1: expected 11 matching rows")

    with tempfile.TemporaryDirectory() as tmp:
        bad = Path(tmp) / "bad.spec"
        bad.write_text("q=3 r=2 u=4\n0 0\n2 0\n")
        for cmd in ["params", "dual"]:
            rc, _, err = run(binary, [cmd, str(bad)])
            if rc != 2 or "divisibility" not in err:
                failures.append(f"{cmd} on a non-decreasing set: exit {rc}, stderr {err.strip()!r}")
        nonsquare = Path(tmp) / "nonsquare.spec"
        nonsquare.write_text("q=7 r=3 u=3\nfamily degree:1\n")
        rc, _, _ = run(binary, ["hull", str(nonsquare)])
        if rc != 2:
            failures.append(f"hull with non-square u: exit {rc}, expected 2")
        rc, _, _ = run(binary, ["repair-sim", str(data_dir / "f9_full.spec")])
        if rc != 2:
            failures.append(f"repair-sim on an ineligible set: exit {rc}, expected 2")
        rc, _, _ = run(binary, ["params", str(Path(tmp) / "missing.spec")])
        if rc != 2:
            failures.append(f"missing spec file: exit {rc}, expected 2")

    for f in failures:
        print("FAIL:", f)
    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
