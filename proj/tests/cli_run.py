"""Runs the CLI and checks its exit code and output.

usage: cli_run.py EXIT_CODE [--expect REGEX]... [--schema FILE] [--twice] -- COMMAND...
"""
import json
import re
import subprocess
import sys


def main():
    args = sys.argv[1:]
    sep = args.index("--")
    opts, cmd = args[:sep], args[sep + 1:]
    want = int(opts[0])
    expects, schema, twice = [], None, False
    i = 1
    while i < len(opts):
        if opts[i] == "--expect":
            expects.append(opts[i + 1])
            i += 2
        elif opts[i] == "--schema":
            schema = opts[i + 1]
            i += 2
        elif opts[i] == "--twice":
            twice = True
            i += 1
        else:
            sys.exit(f"unknown option {opts[i]}")

    run = subprocess.run(cmd, capture_output=True, text=True)
    out = run.stdout + run.stderr
    print(out)
    ok = True
    if run.returncode != want:
        print(f"exit code {run.returncode}, expected {want}")
        ok = False
    for pattern in expects:
        if not re.search(pattern, out, re.MULTILINE):
            print(f"missing output matching {pattern!r}")
            ok = False
    if schema:
        import jsonschema

        with open(schema) as f:
            jsonschema.validate(json.loads(run.stdout), json.load(f))
        print("report validates against the schema")
    if twice:
        again = subprocess.run(cmd, capture_output=True, text=True)
        if again.stdout != run.stdout:
            print("second run produced a different report")
            ok = False
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
