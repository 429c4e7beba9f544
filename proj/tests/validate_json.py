"""Run a command and validate its stdout against a JSON schema.

usage: validate_json.py SCHEMA EXPECTED_EXIT -- COMMAND...
"""
import json
import subprocess
import sys

import jsonschema


def main():
    schema_path, expected, sep, *cmd = sys.argv[1:]
    assert sep == "--", "missing -- before the command"
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != int(expected):
        sys.exit(f"exit {proc.returncode}, expected {expected}\n{proc.stderr}")
    with open(schema_path) as f:
        schema = json.load(f)
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
    # Stable key order: serializing the parsed document reproduces the output.
    if json.dumps(doc, indent=2, ensure_ascii=False) + "\n" != proc.stdout:
        sys.exit("output is not in canonical key order")
    print(f"{schema_path}: ok")


if __name__ == "__main__":
    main()
