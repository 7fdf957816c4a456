"""Validate CLI JSON outputs against docs/output-schema-v1.json.

usage: python3 tools/check_schema.py path/to/infoweight
"""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CASES = [
    ("report", ["report", "--dist", "pareto(2,1)", "--side", "right"]),
    ("report", ["report", "--dist", "cauchy(0,1)"]),
    ("tail_report", ["tails", "--dist", "pareto(2,1)", "--side", "left", "--hill-n", "1000"]),
    ("joint_check", ["joint-check", "--dist-x", "exponential(1)", "--dist-y", "uniform(0,1)", "--grid", "5"]),
    ("table", ["moments", "--format", "json"]),
]


def main(binary):
    with open(os.path.join(ROOT, "docs", "output-schema-v1.json")) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    checker = jsonschema.FormatChecker()

    def check(doc, name):
        sub = {k: v for k, v in schema.items() if k != "anyOf"}
        sub["$ref"] = "#/$defs/" + name
        jsonschema.validate(doc, sub, format_checker=checker)

    for name, args in CASES:
        out = subprocess.run([binary, *args], check=True, capture_output=True, text=True).stdout
        check(json.loads(out), name)
        print("ok", name, " ".join(args))
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "s.json")
        subprocess.run([binary, "sample", "--dist", "normal", "--n", "3", "--format", "json", "--out", path], check=True)
        with open(path) as f:
            check(json.load(f), "table")
        with open(path + ".manifest.json") as f:
            check(json.load(f), "manifest")
        print("ok sample + manifest")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(ROOT, "target", "debug", "infoweight"))
