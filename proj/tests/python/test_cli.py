import json
import os
import subprocess

import pytest

CLI = os.environ.get("TAMEKERNEL_CLI", "tamekernel")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def test_lvalue():
    r = run("lvalue", "--disc", "12")
    assert r.returncode == 0
    assert r.stdout.strip() == "-2/1 v2=1"
    r = run("lvalue", "--disc", "28860")
    assert r.stdout.strip() == "-240480/1 v2=5"


@pytest.mark.parametrize("args", [["lvalue", "--disc", "20"], ["k2", "--disc", "8"], ["scan", "--family", "thm1-n3", "--max", "10"]])
def test_domain_errors_exit_1(args):
    r = run(*args)
    assert r.returncode == 1
    assert r.stderr.startswith("error:")


@pytest.mark.parametrize("args", [[], ["lvalue"], ["lvalue", "--disc", "x"], ["frobnicate"], ["scan", "--family", "thm2-1", "--max", "-1"]])
def test_usage_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_k2_json():
    r = run("k2", "--disc", "28860")
    assert r.returncode == 0
    j = json.loads(r.stdout)
    assert j["k2_order"] == "480960"
    assert j["structure"] == ["2", "2", "2", "8"]
    assert j["delta"] == "3"


def test_identity_json():
    j = json.loads(run("identity", "--disc", "28860", "--factors", "60,481").stdout)
    assert j["report"]["equal"] is True


def test_scan_reference_table(tmp_path):
    out = tmp_path / "table.csv"
    r = run("scan", "--family", "thm1-n4", "--max", str(4 * 990015), "--out", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "D,D_over_4,p1,p2,p3,p4,neg_L,delta"
    assert len(lines) == 62
    assert lines[1] == "28860,7215,3,5,13,37,240480,3"


def test_scan_json_lines():
    r = run("scan", "--family", "thm2-1", "--max", "100", "--format", "json")
    rows = [json.loads(line) for line in r.stdout.splitlines()]
    assert [row["D"] for row in rows] == ["5", "13", "29", "37", "53", "61"]


def test_selftest():
    r = run("selftest")
    assert r.returncode == 0
    assert "PASS" in r.stdout
