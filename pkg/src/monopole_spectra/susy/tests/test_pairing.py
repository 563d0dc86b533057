import json
from fractions import Fraction

import polars as pl
import pytest

from monopole_spectra.modes import Family, canonical_key
from monopole_spectra.operators import apply_Q
from monopole_spectra.susy import (
    HilbertPolicy,
    UnpairedReason,
    pairing_report,
)


def test_integer_flux_pairs_all_excited_levels():
    report = pairing_report(2, "BundleSections", lambda_cutoff=30)
    assert report.unpaired_excited == []
    assert report.zero_modes == {0: 2, 1: 0}
    assert report.index == 2
    assert len(report.pairs) > 0
    assert all(u.reason is UnpairedReason.ZERO_MODE for u in report.unpaired)


def test_pairs_are_supercharge_images():
    report = pairing_report("1/2", "SquareIntegrable", lambda_cutoff=10)
    for pair in report.pairs:
        assert pair.f0.sector == 0
        assert pair.f1.sector == 1
        assert pair.f0.eigenvalue == pair.f1.eigenvalue == pair.eigenvalue
        assert canonical_key(apply_Q(pair.f0)) == canonical_key(pair.f1)
        assert pair.eigenvalue <= 10


def test_half_flux_regular_ground_state_unpaired():
    """Test that the regular q = 1/2 ground state has a singular partner."""
    report = pairing_report("1/2", "RegularOnly", lambda_cutoff=2)
    found = [
        u
        for u in report.unpaired
        if u.entry.sector == 0
        and u.entry.m == 0
        and u.entry.n == 0
        and u.entry.family is Family.TILDE
    ]
    assert len(found) == 1
    assert found[0].reason is UnpairedReason.IMAGE_SINGULAR
    assert found[0].image_gamma == Fraction(-1, 2)
    assert report.index is None


def test_report_to_dict():
    report = pairing_report("1/2", "SquareIntegrable", lambda_cutoff=5)
    result = json.loads(json.dumps(report.to_dict()))
    assert result["policy"] == "SquareIntegrable"
    assert result["q"] == 0.5
    assert "index" not in result
    assert len(result["pairs"]) == len(report.pairs)
    assert {"lambda", "f0", "f1"} == set(result["pairs"][0])
    assert {"entry", "reason", "image_gamma"} == set(result["unpaired"][0])

    result = pairing_report(1, "BundleSections", lambda_cutoff=5).to_dict()
    assert result["index"] == 1


def test_pairs_table():
    report = pairing_report(1, HilbertPolicy.BUNDLE_SECTIONS, lambda_cutoff=6)
    df = report.pairs_table()
    assert isinstance(df, pl.DataFrame)
    assert df.columns == ["lambda", "m0", "family0", "n0", "m1", "family1", "n1"]
    assert df.height == len(report.pairs)
    assert (df["m1"] == df["m0"] + 1).all()


def test_pairing_report_raises():
    with pytest.raises(ValueError, match="lambda_cutoff must be > 0"):
        pairing_report(1, lambda_cutoff=0)
