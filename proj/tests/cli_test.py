"""End-to-end checks of theta-tool: exit codes, JSON output and the cap."""
import json
import os
import subprocess
import sys

TOOL = sys.argv[1]
failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("THETA_TOOL_CAP", None)
    e.update(env or {})
    return subprocess.run([TOOL, *args], capture_output=True, text=True, env=e)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


r = run("report", "E", "7", "EV")
check(r.returncode == 0 and "components    2" in r.stdout, "report E 7 EV gives 2 components")

r = run("--format", "json", "report", "D", "4", "DI(4,4)")
rep = json.loads(r.stdout)
check(rep["components"] == 4 and rep["schema"] == 1, "split D4 has four components")
check(rep["dims"] == {"g": 28, "k": 12, "p": 16, "a": 4, "m": 0}, "split D4 dimensions")

r = run("--format", "json", "report", "E", "8", "EVIII")
rep = json.loads(r.stdout)
check(r.returncode == 0 and rep["weyl_order"] is None and rep["poincare"] is None, "E8 report is partial")
check(any("W_A too large" in w for w in rep["warnings"]), "E8 report warns about W_A")

r = run("report", "B", "3", "BI(3)", env={"THETA_TOOL_CAP": "10"})
check(r.returncode == 0 and "W_A too large" in r.stdout, "THETA_TOOL_CAP lowers the cap")
r = run("--cap", "100", "report", "B", "3", "BI(3)", env={"THETA_TOOL_CAP": "10"})
check("W_A too large" not in r.stdout, "--cap overrides the environment")

r = run("list", "A", "1")
labels = [line.split()[0] for line in r.stdout.splitlines()[1:]]
check(labels == ["AI"], "list A 1 has only AI")

r = run("--format", "json", "list", "E", "6")
entries = json.loads(r.stdout)["entries"]
check(len(entries) == 4, "E6 has four classes")
check(any(e["quasi_split"] and not e["split"] for e in entries), "E6 has a quasi-split non-split class")
check(any(not e["inner"] for e in entries), "E6 has outer classes")

r = run("report", "E", "7", "EX")
check(r.returncode == 2 and "EV EVI EVII" in r.stderr, "unknown label lists the available ones")
r = run("list", "D", "3")
check(r.returncode == 2, "D3 is rejected")
r = run("report", "A", "2")
check(r.returncode == 2, "missing argument is a usage error")
r = run("--prime", "4", "verify", "centdim")
check(r.returncode == 2, "composite prime is a usage error")

r = run("--format", "json", "verify", "w0", "proposition")
out = json.loads(r.stdout)
check(r.returncode == 0 and [s["suite"] for s in out["suites"]] == ["w0", "proposition"], "verify runs named suites")
check(all(s["passed"] for s in out["suites"]), "verify suites pass")

sys.exit(1 if failures else 0)
