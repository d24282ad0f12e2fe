import json
import os
import subprocess

import pytest

CLI = os.environ.get("CY2_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="CY2_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_count_verify():
    p = run("count", "--family", "D", "--n", "2", "--t", "1", "--verify")
    assert p.returncode == 0
    assert json.loads(p.stdout) == {
        "spec": "D_{2,1}", "formula": 56, "enumerated": 56, "agree": True}


def test_enumerate_round_trip(tmp_path):
    out = tmp_path / "a21.json"
    assert run("enumerate", "--family", "A", "--n", "2", "--t", "1", "--out", str(out)).returncode == 0
    records = json.loads(out.read_text())
    assert len(records) == 20
    assert len({tuple(r["x"]) for r in records}) == 20


def test_verify_lines():
    p = run("verify")
    assert p.returncode == 0
    lines = p.stdout.strip().splitlines()
    assert len(lines) == 7
    assert all(line.startswith("PASS") for line in lines)


def test_bad_input():
    assert run("perp", "--family", "A", "--n", "2", "--t", "2", "--set", "nonsense").returncode == 2
