#!/usr/bin/env python3
"""Runs a spread of folkman commands and validates every JSON document
against the published schema.

usage: validate_schema.py <folkman-binary> <schema.json>
Exits 77 (ctest skip) when the jsonschema package is unavailable.
"""

import json
import pathlib
import subprocess
import sys
import tempfile

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)


def main() -> int:
    exe, schema_path = sys.argv[1:3]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    tmp = pathlib.Path(tempfile.mkdtemp(prefix="folkman_schema_"))
    ledger = str(tmp / "ledger.json")
    stream = tmp / "stream.g6"
    stream.write_text("Dhc\nDLo\nELrw\n")

    commands = [
        (["invariants", "--graph", "Q"], 0),
        (["invariants", "--family", "K2+C5+C5+C5"], 0),
        (["construct", "--circulant", "13:1,5"], 0),
        (["construct", "--graph", "C5"], 0),
        (["classify", "--family", "K1+Q"], 0),
        (["classify", "--graph", "K7"], 0),
        (["arrows", "--graph", "K5", "--targets", "3,3", "--q", "4"], 0),
        (["arrows", "--graph", "K6", "--targets", "3,3"], 0),
        (["arrows", "--graph", "K9", "--targets", "3,4", "--budget-nodes", "5"], 3),
        (["ramsey", "--targets", "3,3", "--ledger", ledger], 0),
        (["verify", "dirac", "--max-n", "6"], 0),
        (["verify", "gap-three", "--max-n", "5", "--inject", "Q", "--inject", "C5+C5+C5"], 0),
        (["scan", "--file", str(stream), "--predicate", "f>=1"], 0),
        (["export-cnf", "--graph", "K5", "--targets", "3,3", "--cnf", str(tmp / "k5.cnf")], 0),
        (["ledger", "seed", "--ledger", ledger], 0),
        (["ramsey", "--targets", "3,3", "--ledger", ledger, "--record"], 0),
        (["ledger", "show", "--ledger", ledger], 0),
        (["ledger", "audit", "--ledger", ledger], 0),
        (["ledger", "bound", "--targets", "4,4", "--ledger", ledger], 0),
        (["ledger", "family-test", "--targets", "3,4", "--ledger", ledger], 0),
        (["ledger", "family-test", "--targets", "3,3,3", "--ledger", ledger], 0),
    ]

    failures = 0
    documents = []
    for args, expected_code in commands:
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        if proc.returncode != expected_code:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}, expected {expected_code}\n{proc.stderr}")
            failures += 1
            continue
        documents.append((" ".join(args), json.loads(proc.stdout)))

    for name, doc in documents:
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {name}")
            for e in errors[:5]:
                print(f"  {list(e.path)}: {e.message[:300]}")
        else:
            print(f"ok   {name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
