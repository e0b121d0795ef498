"""Command-line interface: subcommands, exit codes, and determinism."""

from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from emergent.checks import SuiteResult
from emergent.cli import main, render_check_report

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lattice_json(capsys):
    code, out, _ = run_cli(
        capsys, ["lattice", "--input", str(FIXTURES / "s3.json")]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 3
    assert payload["node_count"] == 6
    assert len(payload["nodes"]) == 6
    assert sorted(n["order"] for n in payload["nodes"]) == [1, 2, 2, 2, 3, 6]
    assert sum(n["self_commutant"] for n in payload["nodes"]) == 4
    for node in payload["nodes"]:
        assert len(node["members"]) == node["order"]
        assert 0 <= node["commutant"] < 6
    assert len(payload["hasse"]) == 8


def test_lattice_dot(capsys):
    code, out, _ = run_cli(
        capsys,
        ["lattice", "--input", str(FIXTURES / "s3.json"), "--format", "dot"],
    )
    assert code == 0
    assert out.startswith("digraph lattice {")
    assert out.rstrip().endswith("}")
    assert "rankdir=BT" in out
    assert out.count("peripheries=2") == 4
    assert out.count("style=dashed") == 1
    assert out.count("->") == 9


def test_systems(capsys):
    code, out, _ = run_cli(
        capsys, ["systems", "--input", str(FIXTURES / "s3.json")]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 3
    assert sorted(s["order"] for s in payload["systems"]) == [1, 2, 2, 2, 6]
    by_order = {s["order"]: s for s in payload["systems"]}
    assert by_order[1]["pure_states"] == [[0, 1, 2]]
    assert by_order[6]["pure_states"] == [[0], [1], [2]]
    assert len(payload["compatible"]) == 12
    for i, j, witness in payload["compatible"]:
        assert 0 <= i < 5 and 0 <= j < 5
        assert witness in (0, 1, 2)


def test_scan_mixed(capsys):
    code, out, _ = run_cli(
        capsys, ["scan-mixed", "--input", str(FIXTURES / "s3.json")]
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["nodes"]) == 6
    # Only the three reflection subgroups have both a pure fixed point
    # and mixed moved points.
    both = [payload["nodes"][i] for i in payload["nodes_with_both"]]
    assert len(both) == 3
    for node in both:
        assert node["order"] == 2
        assert len(node["pure_points"]) == 1
        assert len(node["mixed_points"]) == 2
    for node in payload["nodes"]:
        assert sorted(node["pure_points"] + node["mixed_points"]) == [0, 1, 2]


def test_check_all_clean(capsys):
    code, out, _ = run_cli(
        capsys,
        ["check", "--input", str(FIXTURES / "s3.json"), "--suite", "all"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert len(payload["suites"]) == 5
    for suite in payload["suites"]:
        assert suite["ok"] is True
        assert suite["violations"] == []


def test_check_single_suite(capsys):
    code, out, _ = run_cli(
        capsys,
        ["check", "--input", str(FIXTURES / "s3.json"), "--suite", "lattice"],
    )
    assert code == 0
    payload = json.loads(out)
    assert [s["name"] for s in payload["suites"]] == ["lattice"]


def test_check_report_flags_violations():
    results = (
        SuiteResult(name="lattice", violations=(), notices=()),
        SuiteResult(name="states", violations=("broken",), notices=("n",)),
    )
    text, code = render_check_report(results)
    assert code == 1
    payload = json.loads(text)
    assert payload["ok"] is False
    assert payload["suites"][1]["violations"] == ["broken"]


def test_quantum_multiplicative(capsys):
    code, out, _ = run_cli(capsys, ["quantum", "--decomposition", "2x3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "purely_multiplicative"
    assert payload["decomposition"] == "2x3"
    assert payload["commutant"] == "3x2"
    assert payload["centre_rank"] == 0
    assert payload["system_count"] == 1
    assert payload["group_dimension"] == 3
    assert payload["total_dimension"] == 6
    assert payload["claims"] == {
        "orthogonal": True,
        "orthocomplementary": True,
        "join": "6x1",
        "join_full": True,
    }


def test_quantum_additive(capsys):
    code, out, _ = run_cli(capsys, ["quantum", "--decomposition", "3x1+1x2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "purely_additive"
    assert payload["commutant"] == "2x1 + 1x3"
    assert payload["centre_rank"] == 1
    assert payload["system_count"] == 2
    assert payload["claims"] == {
        "orthogonal": True,
        "orthocomplementary": False,
        "join": "3x1 + 2x1",
        "join_full": False,
    }


def test_quantum_general(capsys):
    code, out, _ = run_cli(capsys, ["quantum", "--decomposition", "2x2+1x3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "general"
    assert payload["claims"] is None
    assert "note" in payload


@pytest.mark.parametrize("text", ["garbage", "1x1", "0x2", "2x"])
def test_quantum_bad_input(capsys, text):
    code, _, err = run_cli(capsys, ["quantum", "--decomposition", text])
    assert code == 2
    assert "error:" in err


@pytest.mark.parametrize(
    "fixture",
    [
        "bad_syntax.json",
        "bad_permutation.json",
        "not_transitive.json",
        "not_centreless.json",
        "no_such_file.json",
    ],
)
def test_bad_theory_exits_2(capsys, fixture):
    code, _, err = run_cli(
        capsys, ["lattice", "--input", str(FIXTURES / fixture)]
    )
    assert code == 2
    assert "error:" in err


def test_resource_cap_exits_3(capsys):
    code, _, err = run_cli(
        capsys, ["lattice", "--input", str(FIXTURES / "s3_capped.json")]
    )
    assert code == 3
    assert "error:" in err


def test_max_order_flag(capsys):
    s3 = str(FIXTURES / "s3.json")
    code, _, _ = run_cli(capsys, ["lattice", "--input", s3, "--max-order", "2"])
    assert code == 3
    code, out, _ = run_cli(capsys, ["lattice", "--input", s3, "--max-order", "6"])
    assert code == 0
    assert json.loads(out)["node_count"] == 6


def _subprocess_run(argv, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    proc = subprocess.run(
        [sys.executable, "-m", "emergent.cli", *argv],
        capture_output=True,
        env=env,
        cwd=str(FIXTURES.parent),
    )
    return proc.returncode, proc.stdout


@pytest.mark.parametrize(
    "argv",
    [
        ["lattice", "--input", "fixtures/s3x3.json"],
        ["systems", "--input", "fixtures/s3.json"],
        ["scan-mixed", "--input", "fixtures/s3_diagonal.json"],
        ["quantum", "--decomposition", "2x2+3x1+1x4"],
    ],
)
def test_output_bytes_deterministic(argv):
    runs = [_subprocess_run(argv, seed) for seed in (0, 1, 31337)]
    codes = {code for code, _ in runs}
    outputs = {out for _, out in runs}
    assert codes == {0}
    assert len(outputs) == 1
