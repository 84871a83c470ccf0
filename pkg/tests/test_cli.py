import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from chowq.cli import run_command

from cli_cases import CASES, USAGE_ERRORS

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("CHOWQ_REGEN_GOLDEN") == "1"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    status = run_command(argv, out, err)
    return status, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name,argv,status", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, status):
    got_status, out, err = run(argv)
    assert got_status == status, err
    path = GOLDEN / f"{name}.out"
    if REGEN:
        path.write_bytes(out.encode())
    assert out.encode() == path.read_bytes()


@pytest.mark.parametrize("argv", USAGE_ERRORS, ids=lambda a: " ".join(a) or "empty")
def test_usage_errors_exit_2(argv):
    status, out, err = run(argv)
    assert status == 2
    assert out == ""
    assert err.startswith("error: ")


def test_error_codes_in_message():
    _, _, err = run(USAGE_ERRORS[0])
    assert "UNKNOWN_GENERATOR" in err
    _, _, err = run(USAGE_ERRORS[1])
    assert "SYNTAX_ERROR" in err


def test_verification_failure_exits_1(monkeypatch):
    import chowq.cli as cli
    from chowq.report import Report

    def broken(n):
        rep = Report("euler_axioms", {"n": n})
        rep.fail(part="forced")
        return rep

    monkeypatch.setattr(cli.V, "euler_axioms_check", broken)
    status, out, _ = run(["verify", "--suite", "euler", "--json"])
    assert status == 1
    assert json.loads(out)[0]["status"] == "FAIL"


def test_json_outputs_parse():
    for name, argv, _ in CASES:
        if "--json" in argv:
            json.loads(run(argv)[1])


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chowq", "normalize", "--kind",
                           "quadric_point_even", "--n", "2", "--expr", "h^2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2*h*e\n"
