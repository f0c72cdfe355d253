"""Runs the CLI on a set of commands and validates every JSON report
against the shipped schema. Also checks repeat runs are byte-identical."""
import json
import pathlib
import subprocess
import sys

import jsonschema

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

runs = [
    ["analyze", "--builtin", "cycle:6"],
    ["analyze", "--builtin", "butterfly"],
    ["limits", "--builtin", "butterfly", "--from", "y", "--nmax", "30", "--exact", "--format", "json"],
    ["limits", "--builtin", "complete:4", "--nmax", "40", "--format", "json"],
    ["limits", "--builtin", "cycle:4", "--walk", "srw", "--nmax", "10", "--format", "json"],
    ["spectral", "--builtin", "petersen", "--nmax", "30"],
    ["spectral", "--builtin", "grid_Z2", "--nmax", "60"],
    ["spectral", "--builtin", "free_group:2", "--to", "aaaaaaa", "--nmax", "7", "--exact"],
    ["spectral", "--builtin", "complete:4", "--walk", "srw"],
    ["cogrowth", "--builtin", "complete:4", "--nmax", "12", "--exact", "--check-functional-equation",
     "--format", "json"],
    ["cogrowth", "--builtin", "free_group:2", "--nmax", "6", "--mode", "weighted", "--format", "json"],
    ["cogrowth", "--builtin", "butterfly", "--from", "x", "--to", "y", "--nmax", "9", "--format", "json"],
    ["simulate", "--builtin", "complete:4", "--nmax", "5", "--trials", "20000", "--seed", "3"],
    ["simulate", "--builtin", "grid_Z2", "--nmax", "6", "--trials", "2000", "--seed", "3"],
    ["amenability", "--builtin", "grid_Z2", "--nmax", "60", "--rmax", "10", "--k", "6"],
    ["amenability", "--builtin", "free_group:2", "--nmax", "8", "--rmax", "5", "--k", "6"],
    ["check", "--builtin", "petersen", "--nmax", "10"],
    ["check", "--builtin", "cycle:5", "--nmax", "8"],
]

failures = 0
for args in runs:
    first = subprocess.run([binary, *args], capture_output=True, text=True)
    second = subprocess.run([binary, *args], capture_output=True, text=True)
    label = " ".join(args)
    if first.returncode != 0:
        print(f"FAIL {label}: exit {first.returncode}: {first.stderr.strip()}")
        failures += 1
        continue
    if first.stdout != second.stdout:
        print(f"FAIL {label}: output differs between identical runs")
        failures += 1
        continue
    doc = json.loads(first.stdout)
    schema = json.loads((schema_dir / f"{args[0]}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
        print(f"ok   {label}")
    except jsonschema.ValidationError as e:
        print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
        failures += 1

sys.exit(1 if failures else 0)
