"""Validate CLI outputs and data fixtures against the schemas in docs/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
docs = root / "docs"


def schema(name):
    return json.loads((docs / f"{name}.schema.json").read_text())


def cli_json(*args):
    done = subprocess.run([cli, *args], check=True, capture_output=True, text=True)
    return json.loads(done.stdout)


failures = 0


def check(instance, name, label):
    global failures
    try:
        jsonschema.validate(instance, schema(name), cls=jsonschema.Draft202012Validator)
        print(f"ok   {label}")
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"FAIL {label}: {e.message} at /{'/'.join(map(str, e.absolute_path))}")


# (points, full-dimensional); normal fans need a full-dimensional polytope.
point_sets = [
    ("[[0],[3]]", True),
    ("[[0,1],[1,0],[1,2],[2,0],[2,1]]", True),
    ("[[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]", True),
    ("[[0,0,0],[2,2,0]]", False),
    ("[[5,5]]", False),
]
for pts, full in point_sets:
    check(cli_json("hull", "--points", pts), "hull", f"hull {pts}")
    check(cli_json("minkowski-sum", "--points", pts, "--points", pts), "hull", f"minkowski-sum {pts}")
    if full:
        check(cli_json("normal-fan", "--points", pts), "normal-fan", f"normal-fan {pts}")

for pts in ["[[3,0],[2,1],[1,2],[0,3]]", "[[2],[3]]", "[[0],[2],[3]]", "[[0,0],[1,0],[0,1],[1,1]]"]:
    check(cli_json("toric-ideal", "--points", pts), "toric-ideal", f"toric-ideal {pts}")
    check(cli_json("toric-ideal", "--points", pts, "--order", "lex"), "toric-ideal", f"toric-ideal lex {pts}")

for path in sorted((root / "data").glob("*.json")):
    instance = json.loads(path.read_text())
    name = "system" if "polynomials" in instance else "support"
    check(instance, name, f"data/{path.name}")

try:
    jsonschema.validate({"dim": 2, "points": "nope"}, schema("support"))
    failures += 1
    print("FAIL support schema accepted a malformed document")
except jsonschema.ValidationError:
    print("ok   support schema rejects a malformed document")

sys.exit(1 if failures else 0)
