#!/usr/bin/env python3
"""End-to-end checks of the heckd command-line interface."""

import json
import os
import subprocess
import sys
import tempfile

BIN = os.environ.get("HECKD_BIN", "heckd")
failures = 0


def run(*args, expect_code=0):
    global failures
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode} != {expect_code}\n"
              f"  stdout: {proc.stdout!r}\n  stderr: {proc.stderr!r}")
    return proc


def check(cond, label):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {label}")


# mult
out = run("mult", "--d", "3", "Trho * T1 * Trho").stdout.strip()
check(out == "[T0]", f"mult relation output: {out!r}")

out = run("mult", "--d", "3", "T1 * T1").stdout.strip()
check(out == "v^2*[e] + (-1 + v^2)*[T1]", f"mult quadratic output: {out!r}")

out = run("mult", "--d", "3", "[w=1,2,3,4,5,6] * T2").stdout.strip()
check(out == "[T2]", f"mult window-literal output: {out!r}")

doc = json.loads(run("--machine", "mult", "--d", "3", "T1 * T1").stdout)
check(doc["d"] == 3 and len(doc["terms"]) == 2, "mult machine record")

# factor
out = run("factor", "--d", "3", "--w", "7,2,3,4,5,0", "--replay").stdout.strip()
check(out.startswith("Trho * T1 * "), f"factor output: {out!r}")
check(len(out.split(" * ")) == 5, f"factor word length: {out!r}")

out = run("factor", "--d", "3", "--w", "1,2,3,4,5,6").stdout.strip()
check(out == "1", f"factor identity output: {out!r}")

out = run("factor", "--d", "3", "--w", "0,2,4,3,5,7").stdout.strip()
check(out == "Trho", f"factor rho output: {out!r}")

doc = json.loads(
    run("--machine", "factor", "--d", "3", "--w", "7,2,3,4,5,0").stdout)
check(doc["rho_prefix"] is True and len(doc["word"]) == 4,
      "factor machine record")

# length
out = run("length", "--d", "3", "--w", "7,2,3,4,5,0").stdout.strip()
check(out == "4", f"length output: {out!r}")

# bruhat
out = run("bruhat", "--d", "3", "--y", "1,2,3,4,5,6", "--w",
          "2,1,3,4,6,5").stdout.strip()
check(out == "true", f"bruhat e <= s1: {out!r}")
out = run("bruhat", "--d", "3", "--y", "2,1,3,4,6,5", "--w",
          "1,3,2,5,4,6").stdout.strip()
check(out == "false", f"bruhat s1 vs s2: {out!r}")

# check
out = run("check", "--d", "3").stdout
check("all checks passed" in out, "check d=3 summary")
run("check", "--d", "4")
out = run("check", "--d", "3", "--verify", "--upto-length", "2").stdout
check("bar-fixpoint" in out, "check --verify runs the oracle suites")

# compositions
out = run("compositions", "--n", "4", "--d", "3").stdout.strip().splitlines()
check(out == ["0,3,3,0", "1,2,2,1", "2,1,1,2", "3,0,0,3"],
      f"compositions rows: {out!r}")

# kl + cache round trip, byte-identical across two runs
with tempfile.TemporaryDirectory() as tmp:
    first = run("--machine", "kl", "--d", "3", "--upto-length", "2").stdout
    second = run("--machine", "kl", "--d", "3", "--upto-length", "2").stdout
    check(first == second and first, "kl machine output is byte-stable")

    cache = os.path.join(tmp, "table.jsonl")
    run("kl", "--d", "3", "--upto-length", "2", "--cache", cache)
    with open(cache, "r", encoding="ascii") as fh:
        check(fh.read() == first, "cache file matches machine output")
    run("cache", cache)

    merged = os.path.join(tmp, "merged.jsonl")
    run("cache", cache, cache, "--out", merged)
    with open(merged, "r", encoding="ascii") as fh:
        check(fh.read() == first, "merge of identical caches is stable")

    # malformed cache -> invariant exit, machine error record
    broken = os.path.join(tmp, "broken.jsonl")
    with open(broken, "w", encoding="ascii") as fh:
        fh.write('{"d":3,"y":[1,2,3,4,5,6],"w":[1,2,3')
    proc = run("--machine", "cache", broken, expect_code=3)
    doc = json.loads(proc.stdout)
    check(doc["error"]["kind"] == "malformed-record" and
          doc["error"]["index"] == 1, "machine error record for bad cache")

# exit-code contract
run("mult", "--d", "3", "T1 *", expect_code=2)            # parse error
run("mult", "--d", "3", "T9", expect_code=2)              # unknown generator
run("length", "--d", "3", "--w", "2,1,3,4,5,6", expect_code=3)  # bad window
run("length", "--d", "2", "--w", "1,2,3,4", expect_code=3)      # rank gate
run("nonsense", expect_code=2)                             # unknown command
proc = run("--machine", "length", "--d", "3", "--w", "2,1,3,4,5,6",
           expect_code=3)
doc = json.loads(proc.stdout)
check(doc["error"]["kind"] == "symmetry-violation", "machine invariant record")

if failures:
    print(f"{failures} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")
