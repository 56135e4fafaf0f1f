import csv
import json
import subprocess
import sys

import numpy as np
import pytest

from nchilbert.algebra import Operator, TracedAlgebra
from nchilbert.checks import CHECKS
from nchilbert.cli import main
from nchilbert.matrixio import read_matrix, write_matrix


@pytest.fixture
def m22_file(tmp_path, m22):
    path = tmp_path / "a.json"
    write_matrix(m22, path)
    return path


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_hilbert(tmp_path, m22_file, capsys):
    out = tmp_path / "t.json"
    assert main(["hilbert", str(m22_file), "-o", str(out)]) == 0
    assert np.array_equal(read_matrix(out).entries, 1j * np.array([[0, -2], [3, 0]]))
    text = capsys.readouterr().out
    assert "in H^inf: True" in text and "||a~||_2" in text


def test_hilbert_default_output_and_diagonal(tmp_path):
    path = tmp_path / "d.json"
    write_matrix(Operator(TracedAlgebra.flag(3), np.diag([1.0, 2, 3])), path)
    assert main(["hilbert", str(path)]) == 0
    assert read_matrix(tmp_path / "d_hilbert.json").max_abs() == 0.0


def test_riesz_and_decompose(tmp_path, m22_file):
    assert main(["riesz", str(m22_file), "-o", str(tmp_path / "r.json")]) == 0
    assert np.allclose(read_matrix(tmp_path / "r.json").entries, [[1, 2], [0, 4]])
    assert main(["decompose", str(m22_file), "-o", str(tmp_path / "dec")]) == 0
    a1 = read_matrix(tmp_path / "dec" / "a_a1.json")
    a2 = read_matrix(tmp_path / "dec" / "a_a2.json")
    d = read_matrix(tmp_path / "dec" / "a_d.json")
    assert np.array_equal((a1 + a2.adj + d).entries, [[1, 2], [3, 4]])


def test_partition_override(tmp_path, m22_file):
    out = tmp_path / "t.json"
    assert main(["hilbert", str(m22_file), "--partition", "single", "-o", str(out)]) == 0
    assert read_matrix(out).algebra.partition == (2,)
    assert read_matrix(out).max_abs() == 0.0


@pytest.mark.parametrize("argv", [
    ["verify", "bogus"],
    ["verify"],
    ["verify", "hoelder", "--exponents", "2,2,2"],
    ["verify", "weak_lp", "--weak-p", "1.5"],
    ["verify", "--all", "--n", "4", "--partition", "3,3"],
])
def test_config_errors(tmp_path, argv):
    assert main(argv + ["--out", str(tmp_path / "o")]) == 2


def test_parse_errors(tmp_path, m22_file):
    bad = tmp_path / "bad.json"
    bad.write_text("{bad")
    assert main(["hilbert", str(bad)]) == 2
    assert main(["hilbert", str(tmp_path / "missing.json")]) == 2
    assert main(["hilbert", str(m22_file), "--partition", "3,3"]) == 2


def test_bad_seed_env(tmp_path, monkeypatch):
    monkeypatch.setenv("NCH_SEED", "seven")
    assert main(["verify", "duality", "--trials", "2", "--out", str(tmp_path)]) == 2


def test_seed_env_is_default(tmp_path, monkeypatch):
    monkeypatch.setenv("NCH_SEED", "7")
    main(["verify", "duality", "--trials", "3", "--no-figures", "--out", str(tmp_path / "a")])
    main(["verify", "duality", "--trials", "3", "--seed", "7", "--no-figures",
          "--out", str(tmp_path / "b")])
    ra = (tmp_path / "a" / "reports" / "duality.json").read_bytes()
    assert ra == (tmp_path / "b" / "reports" / "duality.json").read_bytes()
    assert json.loads(ra)["config"]["master_seed"] == 7


def test_verify_outputs(tmp_path):
    out = tmp_path / "res"
    assert main(["verify", "--all", "--n", "6", "--trials", "10", "--seed", "3",
                 "--out", str(out)]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["command"] == "verify"
    assert manifest["config"]["ensemble"]["master_seed"] == 3
    for rel in manifest["artifact_paths"]:
        assert (out / rel).is_file()
    assert "verify_summary.png" in manifest["artifact_paths"]
    rows = read_csv(out / "verify_summary.csv")
    assert [r["check"] for r in rows] == list(CHECKS)
    assert all(r["violations"] == "0" for r in rows)
    rep = json.loads((out / "reports" / "hoelder.json").read_text())
    assert rep["check"] == "hoelder" and rep["violations"] == 0
    witness = read_matrix(out / rep["witness_file"])
    assert witness.n == 6
    assert len(rep["witness_files"]) == 4


def test_verify_violation_exit_code(tmp_path):
    # an impossible ceiling for the conjugate forces violations
    argv = ["verify", "weak_type", "--ceiling", "1e-6", "--trials", "5", "--no-figures",
            "--out", str(tmp_path)]
    assert main(argv) == 1
    rep = json.loads((tmp_path / "reports" / "weak_type.json").read_text())
    assert rep["violations"] > 0


def test_verify_trivial_partition(tmp_path):
    assert main(["verify", "h2_contraction", "weak_type", "llogl", "--partition", "n",
                 "--trials", "5", "--no-figures", "--out", str(tmp_path)]) == 0
    rows = read_csv(tmp_path / "verify_summary.csv")
    assert all(float(r["worst_ratio"]) == 0.0 for r in rows)


def test_constants(tmp_path):
    out = tmp_path / "c"
    assert main(["constants", "--k-max", "3", "--p", "2,4", "--n", "3", "--restarts", "2",
                 "--iterations", "40", "--out", str(out)]) == 0
    rows = read_csv(out / "constants.csv")
    assert [int(r["k"]) for r in rows] == [1, 2, 3]
    assert abs(float(rows[0]["K_2k"]) - 2 ** 0.5) <= 1e-10
    assert abs(float(rows[1]["K_2k"]) - (3 + 11 ** 0.5) ** 0.5) <= 1e-9
    assert all(float(r["residual"]) <= 1e-10 for r in rows)
    scan = read_csv(out / "scan.csv")
    assert list(scan[0]) == ["p", "estimate", "pq_ratio", "restarts", "iterations", "seed"]
    assert float(scan[0]["pq_ratio"]) == pytest.approx(0.25, abs=1e-6)
    for name in ("constants.json", "constants.png", "scan.png", "manifest.json"):
        assert (out / name).is_file()


def test_scan_ceiling(tmp_path):
    argv = ["scan", "--p", "2", "--n", "3", "--restarts", "1", "--iterations", "20",
            "--no-figures", "--out", str(tmp_path)]
    assert main(argv) == 0
    assert main(argv + ["--m-ceiling", "0.1"]) == 1
    assert main(["scan", "--p", "0.5", "--out", str(tmp_path)]) == 2


def test_kolmogorov(tmp_path):
    assert main(["kolmogorov", "--n", "8", "--trials", "40", "--s-grid", "0.01:100:9",
                 "--out", str(tmp_path)]) == 0
    rows = read_csv(tmp_path / "kolmogorov.csv")
    assert len(rows) == 9
    assert all(float(r["max_ratio"]) <= 4.0 for r in rows)
    assert float(rows[-1]["max_ratio"]) == 0.0
    assert (tmp_path / "kolmogorov.png").is_file()


def test_kolmogorov_trivial_partition(tmp_path):
    assert main(["kolmogorov", "--n", "6", "--partition", "single", "--trials", "20",
                 "--s-grid", "0.1,1,10", "--no-figures", "--out", str(tmp_path)]) == 0
    rows = read_csv(tmp_path / "kolmogorov.csv")
    assert all(float(r["max_ratio"]) <= 1.0 for r in rows)


def test_truncation_growth(tmp_path):
    assert main(["truncation-growth", "--n-list", "2,8,64", "--out", str(tmp_path)]) == 0
    rows = read_csv(tmp_path / "truncation_growth.csv")
    vals = [float(r["ratio"]) for r in rows]
    assert vals[0] == pytest.approx(1.0) and vals[0] < vals[1] < vals[2]
    assert main(["truncation-growth", "--n-list", "8,2", "--no-figures",
                 "--out", str(tmp_path)]) == 1


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "nchilbert", "truncation-growth",
                           "--n-list", "2,4", "--no-figures", "--out", str(tmp_path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "n=4" in proc.stdout
