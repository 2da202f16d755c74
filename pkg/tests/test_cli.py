import json

import pytest

from polysparse.cli import main
from polysparse.core import read_poly, equal
from polysparse.families import make_simplex_family


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def simplex_file(tmp_path, capsys):
    path = tmp_path / "s.hpoly"
    assert main(["family", "simplex", "--n", "2", "--t", "1", "--out", str(path)]) == 0
    return path


def test_family_and_closure(tmp_path, capsys, simplex_file):
    assert equal(read_poly(simplex_file), make_simplex_family(1, 2))
    out = tmp_path / "c.hpoly"
    code, _, _ = run(capsys, "closure", "--input", str(simplex_file), "-k", "1", "--out", str(out))
    assert code == 0
    assert read_poly(out).contains_point((1, 1))


def test_hausdorff_and_gap(tmp_path, capsys, simplex_file):
    box = tmp_path / "box.hpoly"
    box.write_text("H 2 4\n-1 0 <= 0\n0 -1 <= 0\n1 0 <= 1\n0 1 <= 1\n")
    code, out, _ = run(capsys, "hausdorff", "--inner", str(simplex_file), "--outer", str(box))
    assert code == 0 and json.loads(out)["sq_dist"] == "1/2"
    code, out, _ = run(capsys, "gap", str(simplex_file), str(box), "--direction", "1 1")
    assert code == 0 and json.loads(out)["gap"] == "1"
    code, _, err = run(capsys, "hausdorff", str(box), str(simplex_file))
    assert code == 2 and "not contained" in err


def test_symmetrize_and_budgeted(tmp_path, capsys, simplex_file):
    code, out, _ = run(capsys, "symmetrize", str(simplex_file), "--format", "json")
    assert code == 0 and json.loads(out)["dim"] == 2
    cuts = tmp_path / "d.hpoly"
    cuts.write_text("H 2 1\n1 1 <= 1\n")
    code, _, _ = run(capsys, "budgeted-closure", str(simplex_file), "-k", "1", "--cuts", str(cuts))
    assert code == 0
    cuts.write_text("H 2 1\n1 1 <= 1/2\n")
    code, _, err = run(capsys, "budgeted-closure", str(simplex_file), "-k", "1", "--cuts", str(cuts))
    assert code == 1 and "cut #0" in err


def test_exit_codes(tmp_path, capsys):
    assert run(capsys, "experiment", "lp-relax", "--n", "8")[0] == 3
    assert run(capsys, "experiment", "lp-relax", "--n", "3")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    bad = tmp_path / "bad.hpoly"
    bad.write_text("H 1 1\n0.5 <= 1\n")
    assert run(capsys, "closure", str(bad), "-k", "1")[0] == 2
    assert run(capsys, "closure", str(tmp_path / "missing.hpoly"), "-k", "1")[0] == 2
    assert run(capsys, "verify", "--max-n", "2", "--inject-bug")[0] == 1


def test_experiment_formats(capsys):
    code, out, _ = run(capsys, "experiment", "directional", "--n", "20", "--t", "2", "--k", "2",
                       "--samples", "50", "--seed", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "bin_hi,bin_lo,count"
    code, out, _ = run(capsys, "experiment", "dense-budget", "--n", "4", "--k", "2", "--d", "3",
                       "--samples", "20", "--format", "json")
    assert code == 0 and json.loads(out)["summary"]["samples"] == 20
    code, out, _ = run(capsys, "verify", "--max-n", "2")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[0]["type"] == "header" and lines[-1]["passed"] is True


def test_seed_must_be_u64(capsys):
    assert run(capsys, "experiment", "lp-relax", "--n", "4", "--seed", "-1")[0] == 2
