import argparse
import io
import json

import numpy as np
import polars as pl
import pytest
from numpy.testing import assert_allclose

from monopole_spectra import _checks, get_config
from monopole_spectra._checks import CheckResult
from monopole_spectra.cli import _join_negative_values, main, parse_m_range


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_towers_csv(capsys):
    """Test the tower lines of the sector F=0 for 0 <= q <= 3."""
    code, out, _ = run(
        capsys,
        "towers",
        "--q-min",
        "0",
        "--q-max",
        "3",
        "--steps",
        "61",
        "--sector",
        "0",
        "--m",
        "-2..4",
        "--format",
        "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "q,m,family,gamma,class"
    df = pl.read_csv(io.StringIO(out))
    assert df.height == 61 * 7 * 2
    df_half = df.filter(
        (pl.col("q") == 0.5) & (pl.col("class") == "SingularNormalizable")
    )
    assert df_half["m"].sort().to_list() == [-1, 0]
    df_plain = df.filter(pl.col("family") == "Plain")
    assert_allclose(
        df_plain["gamma"].to_numpy(),
        (df_plain["q"] - df_plain["m"] - 1).to_numpy(),
        atol=1e-11,
    )


def test_towers_output_is_deterministic(capsys, tmp_path):
    argv = ["towers", "--q-min", "0.25", "--q-max", "1.75", "--steps", "7"]
    _, first, _ = run(capsys, *argv, "--format", "json")
    _, second, _ = run(capsys, *argv, "--format", "json")
    assert first == second
    records = json.loads(first)
    assert list(records[0]) == ["q", "m", "family", "gamma", "class"]

    paths = [tmp_path / "a.svg", tmp_path / "b.svg"]
    for path in paths:
        code, out, _ = run(capsys, *argv, "--format", "svg", "--output", str(path))
        assert code == 0
        assert out == ""
    svg = paths[0].read_text(encoding="utf-8")
    assert "<svg" in svg
    assert "SingularNormalizable" in svg
    assert svg == paths[1].read_text(encoding="utf-8")


def test_hermiticity_json(capsys):
    code, out, _ = run(capsys, "hermiticity", "--q", "0.5", "--m", "0", "--n", "0")
    assert code == 0
    result = json.loads(out)
    assert result["overlap"] == pytest.approx(2 * np.pi, abs=1e-8)
    assert result["defect_magnitude"] == pytest.approx(np.pi, abs=1e-8)
    assert result["eigenvalues"] == [0.5, 0]
    assert_allclose(result["substitution_defect"], result["defect"], atol=1e-8)


def test_spectrum_csv(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--q", "1", "--sector", "0", "--m", "-2..2", "--n-max", "2"
    )
    assert code == 0
    assert out.splitlines()[0] == "sector,m,family,n,lambda,gamma,class"
    df = pl.read_csv(io.StringIO(out))
    assert df.filter(pl.col("lambda") == 2).height == 3
    assert set(df["sector"].to_list()) == {0}


def test_index_and_flux(capsys):
    code, out, _ = run(capsys, "index", "--q", "-2")
    assert code == 0
    result = json.loads(out)
    assert result["index"] == -2
    assert result["zero_modes"] == {"0": 0, "1": 2}

    code, out, _ = run(capsys, "flux", "--q", "1/2")
    assert code == 0
    assert json.loads(out) == {"q": 0.5, "flux": 0.5}


def test_susy_witness(capsys):
    code, out, _ = run(
        capsys,
        "susy",
        "--q",
        "1/2",
        "--policy",
        "RegularOnly",
        "--lambda-cutoff",
        "4",
        "--witness",
    )
    assert code == 0
    result = json.loads(out)
    assert result["policy"] == "RegularOnly"
    assert "index" not in result
    regular, square = result["witnesses"]
    assert regular["policy"] == "RegularOnly"
    assert regular["reason"] == "image singular"
    assert regular["image"]["gamma"] == -0.5
    assert square["policy"] == "SquareIntegrable"
    assert square["image"]["gamma"] == -1.5


def test_oracle(capsys):
    code, out, _ = run(
        capsys, "oracle", "--q", "1", "--m", "0", "--count", "3", "--grid-size", "512"
    )
    assert code == 0
    result = json.loads(out)
    assert result["grid_size"] == 512
    assert_allclose(result["eigenvalues"], [0, 2, 6], atol=1e-2)
    # the grid size is restored after the run
    assert get_config()["grid_size"] == 2048

    code, out, _ = run(capsys, "oracle", "--problem", "witten", "--omega", "2.5")
    assert code == 0
    assert json.loads(out)["ground_energy"] == pytest.approx(-2.5, abs=1e-6)


def test_dry_run(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--q", "1/2", "--quad-points", "32", "--dry-run"
    )
    assert code == 0
    result = json.loads(out)
    assert result["command"] == "spectrum"
    assert result["q"] == 0.5
    assert result["quad_points"] == 32
    assert result["grid_size"] == 2048
    assert result["n_max"] == 4
    assert result["policy"] == "SquareIntegrable"
    assert result["format"] == "csv"
    assert result["options"] == {}


def test_check_suite(capsys, monkeypatch):
    code, out, _ = run(capsys, "check", "--suite", "index")
    assert code == 0
    result = json.loads(out)
    assert result["passed"] is True
    assert [r["suite"] for r in result["results"]] == ["index"]

    failing = CheckResult("index", "witten_index", 1.0, 0.0, passed=False)
    monkeypatch.setitem(_checks.SUITES, "index", lambda: [failing])
    code, out, _ = run(capsys, "check", "--suite", "index", "--format", "csv")
    assert code == 2
    assert out.splitlines() == [
        "suite,name,value,tolerance,passed",
        "index,witten_index,1.0,0.0,false",
    ]


def test_check_suite_footnotes(capsys):
    """Test that footnotes runs the counterexample suite."""
    code, out, _ = run(capsys, "check", "--suite", "footnotes")
    assert code == 0
    result = json.loads(out)
    assert result["passed"] is True
    names = {r["name"] for r in result["results"]}
    assert "s3_eigenvalue" in names
    assert {r["suite"] for r in result["results"]} == {"counterexamples"}


@pytest.mark.parametrize(
    ("argv", "msg"),
    [
        (["flux", "--q", "1", "--unknown"], "unrecognized arguments"),
        (["towers", "--m", "3..1"], "is empty"),
        (["flux", "--q", "abc"], "expected a real number"),
        (["flux", "--q", "1", "--quad-points", "0"], "The quad_points must be"),
        (["hermiticity", "--q", "1/2", "--format", "svg"], "supports the formats"),
        (["index", "--q", "1/2"], "requires an integer flux"),
        (["spectrum", "--q", "1/2", "--policy", "BundleSections"], "only admissible"),
    ],
)
def test_invalid_arguments(capsys, argv, msg):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert msg in err


def test_help_exits_with_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "hermiticity" in out


def test_join_negative_values():
    argv = ["towers", "--m", "-2..4", "--q-min", "-1", "--steps", "3"]
    assert _join_negative_values(argv) == [
        "towers",
        "--m=-2..4",
        "--q-min=-1",
        "--steps",
        "3",
    ]


@pytest.mark.parametrize("text", ["a..b", "1..", "2..-1"])
def test_parse_m_range_raises(text):
    with pytest.raises(argparse.ArgumentTypeError):
        parse_m_range(text)
