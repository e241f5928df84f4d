import io
import json
import subprocess
import sys

import pytest

from bfx.cli import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


def test_analyze_examples():
    code, d = run_json("analyze", "maj:3")
    assert code == EXIT_OK and d["d"] == 3
    assert run_json("analyze", "and:3")[1]["rank"] == 1
    code, d = run_json("analyze", "hex:2:6")
    assert (d["deg"], d["d"]) == (2, 2)


def test_analyze_formats():
    code, text = run("analyze", "xor:2", "--format", "csv")
    header, row = text.strip().splitlines()
    assert header.startswith("f,n,s,bs") and row.startswith("hex:2:6,2,2,2")
    code, text = run("analyze", "xor:2", "--format", "text")
    assert code == EXIT_OK and "hex:2:6" in text and "ok" in text


def test_report_many():
    code, rows = run_json("report", "and:2", "or:2", "xor:2")
    assert code == EXIT_OK and [r["f"] for r in rows] == ["hex:2:8", "hex:2:e", "hex:2:6"]


def test_exit_codes():
    assert run("analyze", "foo:3")[0] == EXIT_USAGE
    assert run("analyze", "hex:21:0")[0] == EXIT_CAP
    assert run("bogus")[0] == EXIT_USAGE
    assert run()[0] == EXIT_USAGE
    assert run("enumerate", "all")[0] == EXIT_USAGE
    assert run("enumerate", "all", "n=5")[0] == EXIT_CAP
    assert run("zebra", "hex:2:2")[0] == EXIT_USAGE  # not a zebra function
    assert run("graph", "v=4", "edge-12")[0] == EXIT_FAIL  # not a graph property


def test_enumerate_examples():
    code, d = run_json("enumerate", "all", "n=3")
    assert code == EXIT_OK and d["count"] == 256 and d["failures"] == []
    code, text = run("enumerate", "graph-properties", "v=3", "--format", "csv")
    assert code == EXIT_OK and len(text.strip().splitlines()) == 1 + 16
    code, d = run_json("enumerate", "zebra", "n=2")
    assert code == EXIT_OK and d["count"] == 12
    names = {c["name"] for r in d["rows"] for c in r["checks"]}
    assert {"partition", "parity identity"} <= names
    assert all(c["ok"] for r in d["rows"] for c in r["checks"])


def test_enumerate_is_deterministic_across_threads():
    a = run("enumerate", "all", "n=3", "--checks", "certalg,zebra", "--threads", "1")[1]
    b = run("enumerate", "all", "n=3", "--checks", "certalg,zebra", "--threads", "2")[1]
    assert a == b


def test_dispatchers():
    code, d = run_json("zebra", "xor:3")
    assert code == EXIT_OK and len(d["stripes"]) == 4
    code, d = run_json("certalg", "alg1", "or:3")
    assert code == EXIT_OK and d["iterations"] == 1 and d["certificate"] == {"1": 1}
    code, d = run_json("certalg", "alg3", "and:2", "--input", "01")
    assert code == EXIT_OK and d["queries"]["01"] == 1
    code, d = run_json("lift", "check-bs", "xor:2", "--m", "1")
    assert code == EXIT_OK
    code, d = run_json("lift", "check-deg", "xor:2", "xor:3")
    assert code == EXIT_OK and d["deg_fg"] == 6
    code, d = run_json("lift", "simulate", "and:4", "--alice=1,2", "--input", "1111")
    assert code == EXIT_OK and d["max_bits"] == 2
    code, d = run_json("graph", "v=4", "classes=K3,P4")
    assert code == EXIT_OK and d["case"] == 1


def test_schema():
    code, text = run("--schema")
    assert code == EXIT_OK and "fbs_num" in text


@pytest.mark.parametrize("argv, code", [(["analyze", "maj:3"], 0), (["analyze", "nope"], 2)])
def test_console_script(argv, code):
    proc = subprocess.run([sys.executable, "-m", "bfx.cli", *argv], capture_output=True, text=True)
    assert proc.returncode == code
