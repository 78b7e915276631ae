"""Validates every JSON-emitting subcommand against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

chs, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(body)) for name, body in schemas.items()
)

cases = [
    ("curve-props.schema.json", ["curve-props", "--n", "7", "--d", "3", "--a", "1/4"]),
    ("curve-props.schema.json", ["curve-props", "--n", "2", "--d", "9", "--a", "0"]),
    ("polynomial.schema.json", ["curve-implicit", "--n", "3", "--d", "2", "--a", "1/2"]),
    ("surface-classify.schema.json",
     ["surface-classify", "--n", "9", "--d", "2", "--a", "2", "--q", "-1", "--h", "1"]),
    ("surface-classify.schema.json", ["surface-classify", "--n", "3", "--d", "1", "--cx", "-1"]),
    ("figure.schema.json", ["figure", "7b", "--format", "json"]),
    ("verify.schema.json", ["verify", "table2", "--format", "json", "--n", "4", "--d", "3"]),
    ("verify.schema.json", ["verify", "residual", "--format", "json", "--n", "7", "--d", "3", "--a", "1/4"]),
]

failures = 0
for name, args in cases:
    out = subprocess.run([chs, *args], capture_output=True, text=True, check=True).stdout
    validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
    errors = list(validator.iter_errors(json.loads(out)))
    status = "ok" if not errors else "FAILED"
    print(f"{status:6} {name:30} {' '.join(args)}")
    for e in errors:
        print("   ", e.message)
    failures += bool(errors)

sys.exit(1 if failures else 0)
