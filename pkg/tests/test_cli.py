"""Command-line interface tests (driving main() in-process)."""

import csv
import io
import json
import math

import pytest

from hypervol.cli import (
    EXIT_INVALID,
    EXIT_NOT_REALIZABLE,
    EXIT_OK,
    main,
)

SPHERE_11 = 5.11093270570828898
REGULAR_IDEAL = 1.01494160640965363


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.strip()]


def test_vol_sphere(capsys):
    code, recs = run(capsys, "vol", "sphere", "--x", "1")
    assert code == EXIT_OK
    assert recs[0]["volume"] == pytest.approx(SPHERE_11, rel=1e-12)
    assert recs[0]["method"] == "closed-form"
    assert recs[0]["shape"] == "sphere"


def test_vol_milnor(capsys):
    third = repr(math.pi / 3)
    code, recs = run(capsys, "vol", "milnor", "--A", third, "--B", third, "--C", third)
    assert code == EXIT_OK
    assert recs[0]["volume"] == pytest.approx(REGULAR_IDEAL, abs=1e-10)


def test_vol_invalid_param_exit_2(capsys):
    assert main(["vol", "sphere", "--x", "-1"]) == EXIT_INVALID
    capsys.readouterr()
    assert main(["vol", "sphere"]) == EXIT_INVALID  # missing parameter
    capsys.readouterr()
    assert main(["vol", "sphere", "--x", "1", "--b", "2"]) == EXIT_INVALID  # stray
    capsys.readouterr()


def test_vol_degrees(capsys):
    code, recs = run(capsys, "vol", "milnor", "--A", "60", "--B", "60", "--C", "60",
                     "--degrees")
    assert code == EXIT_OK
    assert recs[0]["volume"] == pytest.approx(REGULAR_IDEAL, abs=1e-9)


def test_k_scaling(capsys):
    _, r1 = run(capsys, "vol", "sphere", "--x", "2", "--k", "2")
    _, r2 = run(capsys, "vol", "sphere", "--x", "1", "--k", "1")
    assert r1[0]["volume"] == pytest.approx(8.0 * r2[0]["volume"], rel=1e-10)
    _, t1 = run(capsys, "vol", "triangle-2d", "--a", "2", "--b", "2", "--k", "2")
    _, t2 = run(capsys, "vol", "triangle-2d", "--a", "1", "--b", "1", "--k", "1")
    assert t1[0]["volume"] == pytest.approx(4.0 * t2[0]["volume"], rel=1e-8)


def test_vol_ndim(capsys):
    code, recs = run(capsys, "vol", "ndim-orthoscheme", "--edges", "1.0,1.0,1.0")
    assert code == EXIT_OK
    assert recs[0]["volume"] == pytest.approx(0.098404718929, abs=1e-7)


def test_convert_round_trip(capsys):
    code, recs = run(capsys, "convert", "edges-to-angles",
                     "--a", "1", "--b", "1", "--c", "1")
    assert code == EXIT_OK
    rec = recs[0]
    assert rec["z"] == pytest.approx(math.acosh(math.cosh(1.0) ** 3), abs=1e-10)
    code2, recs2 = run(
        capsys, "convert", "angles-to-edges",
        "--alpha", repr(rec["alpha"]), "--beta", repr(rec["beta"]),
        "--gamma", repr(rec["gamma"]),
    )
    assert code2 == EXIT_OK
    for key in ("a", "b", "c"):
        assert recs2[0][key] == pytest.approx(1.0, abs=1e-9)


def test_convert_symmetric_edges(capsys):
    _, recs = run(capsys, "convert", "edges-to-angles", "--a", "0.8", "--b", "1.1",
                  "--c", "0.8")
    assert recs[0]["alpha"] == pytest.approx(recs[0]["gamma"], abs=1e-14)


def test_convert_not_realizable_exit_3(capsys):
    assert main(["convert", "angles-to-edges", "--alpha", "0.3", "--beta", "1.5",
                 "--gamma", "0.3"]) == EXIT_NOT_REALIZABLE
    capsys.readouterr()


def test_mc_sphere_and_determinism(capsys):
    code, recs = run(capsys, "mc", "sphere", "--x", "1", "--samples", "100000",
                     "--seed", "42")
    assert code == EXIT_OK
    assert abs(recs[0]["z_score"]) <= 4.0
    _, recs2 = run(capsys, "mc", "sphere", "--x", "1", "--samples", "100000",
                   "--seed", "42")
    assert recs2[0]["mc_mean"] == recs[0]["mc_mean"]


def test_mc_unsupported_shape_exit_2(capsys):
    assert main(["mc", "milnor", "--A", "1.0", "--B", "1.0", "--C", "1.14",
                 "--samples", "10000"]) == EXIT_INVALID
    capsys.readouterr()


def test_csv_output(capsys):
    code = main(["vol", "sphere", "--x", "1", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert float(rows[0]["volume"]) == pytest.approx(SPHERE_11, rel=1e-10)
    assert json.loads(rows[0]["params"]) == {"x": 1.0}


def test_out_file(tmp_path, capsys):
    path = tmp_path / "rec.json"
    code = main(["vol", "sphere", "--x", "1", "--out", str(path)])
    capsys.readouterr()
    assert code == EXIT_OK
    rec = json.loads(path.read_text().strip())
    assert rec["volume"] == pytest.approx(SPHERE_11, rel=1e-12)


def test_crosscheck_solids(capsys):
    code, recs = run(capsys, "crosscheck", "solids", "--grid", "coarse")
    assert code == EXIT_OK
    assert len(recs) == 15
    assert all(r["pass"] for r in recs)


def test_crosscheck_orthoscheme(capsys):
    code, recs = run(capsys, "crosscheck", "orthoscheme", "--grid", "coarse")
    assert code == EXIT_OK
    assert len(recs) >= 20
    assert all(r["pass"] for r in recs)


def test_batch(tmp_path, capsys):
    jobs = [
        {"shape": "sphere", "x": 1.0},
        {"shape": "milnor", "A": math.pi / 3, "B": math.pi / 3, "C": math.pi / 3},
        {"shape": "sphere", "x": 0.5, "k": 2.0,
         "mc": {"samples": 50000, "seed": 3}},
    ]
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps(jobs))
    code, recs = run(capsys, "batch", str(path))
    assert code == EXIT_OK
    assert len(recs) == 3
    assert recs[0]["volume"] == pytest.approx(SPHERE_11, rel=1e-10)
    assert "mc_mean" in recs[2]


def test_batch_validation_blocks_all_output(tmp_path, capsys):
    jobs = [{"shape": "sphere", "x": 1.0}, {"shape": "sphere"}]
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps(jobs))
    code = main(["batch", str(path)])
    out = capsys.readouterr().out
    assert code == EXIT_INVALID
    assert out.strip() == ""


def test_batch_missing_file(capsys):
    assert main(["batch", "/nonexistent/jobs.json"]) == 5
    capsys.readouterr()
