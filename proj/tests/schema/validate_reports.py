"""Runs qtrunc with --json for each command and validates the output."""

import json
import os
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, schema_path, corpus = sys.argv[1:4]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    commands = [
        ["verify", "LIU-T1", "--range", "1..4"],
        ["verify", "--all", "--range", "1..3"],
        ["multisum", "W", "3", "--range", "1..3", "--check-closed-form"],
        ["multisum", "U", "2", "--range", "1..3", "--check-recurrence"],
        ["multisum", "U", "4", "--range", "1..2"],
        ["multisum", "GZ1", "3", "--range", "0..2", "--check-closed-form"],
        ["expand", "eta", "20"],
        ["expand", "gauss", "0"],
        ["dsl", os.path.join(corpus, "ez.qid"), "--param", "n=4"],
        ["dsl", os.path.join(corpus, "new_b_trunc.qid"), "--range", "L=1..3"],
        ["list"],
    ]
    failures = 0
    for env_verbosity in (None, "timing"):
        env = dict(os.environ)
        env.pop("QTRUNC_VERBOSITY", None)
        if env_verbosity:
            env["QTRUNC_VERBOSITY"] = env_verbosity
        for args in commands:
            proc = subprocess.run([binary, "--json", *args], capture_output=True, text=True, env=env, check=False)
            label = " ".join(args) + (f" [{env_verbosity}]" if env_verbosity else "")
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
            if errors:
                print(f"FAIL {label}: {errors[0].message}")
                failures += 1
            else:
                print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
