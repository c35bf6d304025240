import json
import subprocess
import sys

import pytest

from unitalblocks.cli import main


def run(*args):
    return main([str(a) for a in args])


def test_build_and_verify_unital(tmp_path, capsys):
    assert run("build-unital", "--q", 2, "--out", tmp_path / "F.txt") == 0
    assert run("verify-unital", "--in", tmp_path / "F.txt", "--out", tmp_path / "v.json") == 0
    assert json.loads((tmp_path / "v.json").read_text())["passed"] is True


def test_verify_fails_on_corrupt_input(tmp_path):
    run("build-unital", "--q", 2, "--out", tmp_path / "F.txt")
    lines = (tmp_path / "F.txt").read_text().splitlines()
    lines[1] = lines[1].rsplit(" ", 1)[0]
    (tmp_path / "F.txt").write_text("\n".join(lines) + "\n")
    assert run("verify-unital", "--in", tmp_path / "F.txt", "--out", tmp_path / "v.json") == 1


def test_block_alpha_and_free(tmp_path, capsys):
    assert run("build-block", "--q", 3, "--s", 2, "--seed", 1, "--out", tmp_path) == 0
    g = tmp_path / "H_q3_s2_seed1.graph"
    assert run("alpha", "--in", g, "--s", 2, "--method", "greedy", "--out", tmp_path / "a.json") == 0
    assert json.loads((tmp_path / "a.json").read_text())["exact"] is False
    assert run("verify-free", "--q", 3, "--s", 3, "--seed", 0, "--out", tmp_path / "f.json") == 0


def test_containers_and_count_bound(tmp_path):
    assert run("containers", "--q", 3, "--s", 2, "--seed", 0, "--threshold", 31, "--out", tmp_path / "c.json") == 0
    assert run("count-bound", "--q", 2, "--s", 2, "--seed", 0, "--t", 3, "--exact", "--out", tmp_path / "b.json") == 0
    rep = json.loads((tmp_path / "b.json").read_text())
    assert rep["bound_holds"] and int(rep["bound"]) >= rep["exact"]


def test_containers_abort_exit_code(tmp_path):
    # q = 2 with a tiny threshold runs out of good scales
    code = run("containers", "--q", 2, "--s", 2, "--seed", 0, "--threshold", 3, "--out", tmp_path / "c.json")
    data = json.loads((tmp_path / "c.json").read_text())
    assert code == 3 and data["status"] == "aborted" and data["cause"]


def test_lemma22_and_diagnose(tmp_path):
    assert run("lemma22", "--s", 3, "--out", tmp_path / "l.json") == 0
    assert run("diagnose", "--q", 3, "--s", 2, "--samples", 3, "--niceness-csv", tmp_path / "n.csv",
               "--out", tmp_path / "d.json") == 0
    assert (tmp_path / "n.csv").read_text().startswith("size,gamma,good_y")


def test_experiment_is_deterministic(tmp_path):
    for d in ("e1", "e2"):
        assert run("experiment", "--q", "3,5", "--s", 2, "--trials", 2, "--out", tmp_path / d) == 0
    assert (tmp_path / "e1/records.csv").read_bytes() == (tmp_path / "e2/records.csv").read_bytes()


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "unitalblocks", "lemma22", "--s", "2"], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["passed"]


def test_missing_arguments():
    with pytest.raises(SystemExit):
        run("verify-unital")
