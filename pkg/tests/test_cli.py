"""CLI behavior: outputs, exit codes, byte-level reproducibility."""

import json
import subprocess
import sys

import pytest

BIN = [sys.executable, "-m", "focal_ugb.cli"]


def run_cli(*args, env=None):
    return subprocess.run(BIN + list(args), capture_output=True, text=True,
                          env=env)


def test_complex_counts_stdout():
    r = run_cli("complex", "--n", "4", "--which", "delta", "--counts")
    assert r.returncode == 0
    assert json.loads(r.stdout)["count"] == 648


def test_focals_count(tmp_path):
    out = tmp_path / "f.json"
    r = run_cli("focals", "--n", "3", "--seed", "5", "--out", str(out))
    assert r.returncode == 0
    data = json.loads(out.read_text())
    assert data["count"] == 30 and data["seed"] == 5


def test_matroid_u24(tmp_path):
    r = run_cli("matroid", "--n", "4", "--which", "delta", "--u24-witness")
    assert r.returncode == 0
    d = json.loads(r.stdout)
    assert d["ground_rank"] == 7
    assert d["u24_witness"]["pairs_independent"]
    assert d["u24_witness"]["triples_dependent"]


def test_verify_exit_zero(tmp_path):
    out = tmp_path / "v.json"
    r = run_cli("verify", "--n", "4", "--which", "multiview", "--seed", "1",
                "--out", str(out))
    assert r.returncode == 0
    d = json.loads(out.read_text())
    assert d["all_pass"] and d["n"] == 4 and d["seed"] == 1


def test_usage_error_exit_two():
    r = run_cli("frobnicate")
    assert r.returncode == 2
    r = run_cli("verify", "--n", "4", "--which", "nonsense")
    assert r.returncode == 2
    r = run_cli("verify", "--n", "3")
    assert r.returncode == 2  # n < 4 rejected as usage error


def test_exhaustive_flag_forms(tmp_path):
    out = tmp_path / "v.json"
    r = run_cli("verify", "--n", "4", "--seed", "1", "--exhaustive=false",
                "--out", str(out))
    assert r.returncode == 0
    assert "exhaustive" not in json.loads(out.read_text())
    r = run_cli("verify", "--n", "4", "--seed", "1", "--exhaustive=true",
                "--out", str(out))
    assert r.returncode == 0
    d = json.loads(out.read_text())
    assert d["exhaustive"]["total"] == 648 == d["exhaustive"]["passed"]


def test_verify_with_embedded_basecase(tmp_path):
    out = tmp_path / "v.json"
    r = run_cli("verify", "--n", "4", "--seed", "1", "--basecase-orders", "1",
                "--prune", "gm", "--out", str(out))
    assert r.returncode == 0
    d = json.loads(out.read_text())
    assert d["base_case"]["all_pass"]
    assert len(d["base_case"]["orders"]) == 1


def test_prime_env_override(tmp_path):
    import os
    out = tmp_path / "v.json"
    env = dict(os.environ, FOCAL_UGB_PRIME="4611686018427387817")
    r = run_cli("verify", "--n", "4", "--seed", "2", "--out", str(out),
                env=env)
    assert r.returncode == 0
    assert json.loads(out.read_text())["prime"] == 4611686018427387817


@pytest.mark.parametrize("args", [
    ("cameras", "--n", "3", "--seed", "11"),
    ("focals", "--n", "3", "--seed", "11"),
    ("focals", "--n", "3", "--mode", "symbolic"),
    ("complex", "--n", "5", "--which", "delta", "--counts"),
    ("complex", "--n", "4", "--which", "tilde", "--counts"),
    ("matroid", "--n", "4", "--u24-witness"),
    ("verify", "--n", "4", "--which", "multiview", "--seed", "3"),
    ("verify", "--n", "4", "--which", "universal", "--seed", "3"),
    ("basecase", "--orders", "1", "--seed", "3", "--prune", "gm"),
])
def test_byte_reproducibility(args, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    r1 = run_cli(*args, "--out", str(out1))
    r2 = run_cli(*args, "--out", str(out2))
    assert r1.returncode == r2.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_facet_stream_reproducible(tmp_path):
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    assert run_cli("complex", "--n", "4", "--facets", str(a)).returncode == 0
    assert run_cli("complex", "--n", "4", "--facets", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert len(lines) == 648
    assert json.loads(lines[0]) == sorted(json.loads(lines[0]))
