#!/usr/bin/env python3
"""Validate qrainbow JSON documents against the shipped schemas.

Usage:
    validate_schemas.py <schema-name> <document> [<document> ...]
    validate_schemas.py --self-test <qrainbow-binary>

<schema-name> is a file in the schemas/ directory next to this script's
parent, e.g. report.schema.json. --self-test runs the CLI on small inputs in
a temp directory and validates everything it emits.
"""
import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

SCHEMA_DIR = pathlib.Path(__file__).resolve().parent.parent / "schemas"


def registry():
    resources = []
    for f in SCHEMA_DIR.glob("*.schema.json"):
        s = json.loads(f.read_text())
        resources.append((s["$id"], Resource.from_contents(s)))
    return Registry().with_resources(resources)


def validate(schema_name, doc_path, reg):
    schema = json.loads((SCHEMA_DIR / schema_name).read_text())
    doc = json.loads(pathlib.Path(doc_path).read_text())
    errors = list(Draft202012Validator(schema, registry=reg).iter_errors(doc))
    for e in errors:
        print(f"{doc_path}: {e.json_path}: {e.message}", file=sys.stderr)
    print(f"{doc_path} vs {schema_name}: {'OK' if not errors else 'FAIL'}")
    return not errors


def self_test(binary):
    reg = registry()
    ok = True
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        (tmp / "chain.json").write_text(
            '{"pairs": 2, "J": [1.0, 0.01], "h": [0.0, 0.0]}\n')
        (tmp / "target.json").write_text(
            '{"targets": {"S": [0.2, 0.6]}, "J": [1.0, 0.1]}\n')
        run = lambda *a: subprocess.run([binary, *a], cwd=tmp, check=True,
                                        capture_output=True)
        run("simulate", "chain.json", "--out", "sim.json")
        run("design", "target.json", "--out", "des")
        ok &= validate("chain_spec.schema.json", tmp / "chain.json", reg)
        ok &= validate("design_target.schema.json", tmp / "target.json", reg)
        ok &= validate("report.schema.json", tmp / "sim.json", reg)
        ok &= validate("report.schema.json", tmp / "des.report.json", reg)
        ok &= validate("chain_spec.schema.json", tmp / "des.spec.json", reg)
    return ok


def main():
    args = sys.argv[1:]
    if not args:
        print(__doc__, file=sys.stderr)
        return 2
    if args[0] == "--self-test":
        return 0 if self_test(args[1]) else 1
    reg = registry()
    ok = all(validate(args[0], doc, reg) for doc in args[1:])
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
