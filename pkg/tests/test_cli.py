import json
import subprocess
import sys

import pytest

from symfunc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_text(capsys):
    code, out, err = run_cli(capsys, "expand", "--basis", "h", "e[2]")
    assert code == 0
    assert out == "h[1,1] - h[2]\n"
    assert err == ""


def test_expand_default_basis_is_power(capsys):
    code, out, _ = run_cli(capsys, "expand", "h[1]")
    assert code == 0
    assert out == "p[1]\n"


def test_expand_json(capsys):
    code, out, _ = run_cli(capsys, "expand", "--basis", "m", "--json", "h[1]*h[1]")
    assert code == 0
    doc = json.loads(out)
    assert doc["basis"] == "m"
    assert doc["terms"] == [
        {"partition": [1, 1], "coeff": "2"},
        {"partition": [2], "coeff": "1"},
    ]


def test_apply_cs(capsys):
    code, out, _ = run_cli(
        capsys, "apply", "--op", "CS", "--a", "0", "--k", "2", "h[1]^4", "--basis", "s"
    )
    assert code == 0
    assert out == "2*s[2,2] + 3*s[3,1] + s[4]\n"


def test_apply_tx(capsys):
    code, out, _ = run_cli(capsys, "apply", "--op", "TX", "p[2] + 3")
    assert code == 0
    assert out == "3\n"


def test_apply_missing_parameter(capsys):
    code, out, err = run_cli(capsys, "apply", "--op", "CS", "--a", "0", "h[1]")
    assert code == 2
    assert "requires --k" in err


def test_inner(capsys):
    code, out, _ = run_cli(capsys, "inner", "h[2,1]", "m[2,1]")
    assert code == 0
    assert out == "1\n"
    code, out, _ = run_cli(capsys, "inner", "p[2]", "p[2]")
    assert out == "2\n"


def test_count(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "4", "--k", "2")
    assert code == 0
    assert out == "14\n"


@pytest.mark.parametrize("method", ["closed", "det", "brute"])
def test_count_methods(capsys, method):
    code, out, _ = run_cli(capsys, "count", "--n", "5", "--k", "3", "--method", method)
    assert code == 0
    # 5! = 120 pairs in all, minus 4^2 for (2,1,1,1) and 1 for (1,1,1,1,1)
    assert out == "103\n"


def test_count_verbose_terms(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "2", "--k", "2", "--verbose")
    assert code == 0
    first, rest = out.split("\n", 1)
    assert first == "2"
    terms = json.loads(rest)
    assert {tuple(t["composition"]) for t in terms} == {(2, 0), (1, 1), (0, 2)}
    total = sum(int(t["term"]) for t in terms)
    assert total == 2


def test_parse_error_exit_code(capsys):
    code, out, err = run_cli(capsys, "expand", "h[2,")
    assert code == 2
    assert out == ""
    assert "position" in err


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "partitions", "--max-degree", "3")
    assert code == 0
    assert "ok   partitions:" in out
    assert "FAIL" not in out


def test_json_byte_stability(capsys):
    runs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "expand", "--basis", "s", "--json", "h[2]*e[1]")
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]


def test_installed_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "symfunc.cli", "count", "--n", "3", "--k", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "5\n"


def test_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "symfunc.cli", "count", "--n", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
