from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

from monopole_spectra._exceptions import OutOfRange
from monopole_spectra.modes import (
    Family,
    NormClass,
    build_families,
    canonical_key,
    enumerate_monopole_harmonics,
    family_eigenvalue,
    harmonic_level,
    inner_product,
    monopole_eigenvalue,
    monopole_harmonic,
    normalize,
)


@pytest.mark.parametrize(
    ("q", "m", "n", "expected"),
    [(1, 2, 1, 12), (1, 0, 0, 0), (2, -1, 1, 8), (2, 0, 0, 0), (0, 0, 0, 1)],
)
def test_monopole_eigenvalue(q, m, n, expected):
    assert monopole_eigenvalue(q, m, n) == expected
    level = harmonic_level(q, m, n)
    assert level * (level + q) == expected


def test_monopole_harmonic_unit_flux():
    entry = monopole_harmonic(1, 0, 2, 1)
    assert entry.eigenvalue == 12
    assert entry.norm_class is NormClass.REGULAR
    assert entry.descriptor.a_exp == 1
    assert entry.descriptor.b_exp == 1


@pytest.mark.parametrize(("q", "m"), [(3, 2), (2, 1), (1, 0), (-1, -2)])
def test_monopole_harmonic_section(q, m):
    """Test that m + 2 kappa = 0 gives a section at the puncture."""
    entry = monopole_harmonic(q, 0, m, 0)
    assert entry.gamma == 0
    assert entry.norm_class is NormClass.SECTION


@pytest.mark.parametrize(
    ("q", "n", "msg"),
    [
        (0.5, 0, "require an integer flux"),
        (1, -1, "must be a nonnegative integer"),
    ],
)
def test_monopole_harmonic_raises(q, n, msg):
    with pytest.raises(OutOfRange, match=msg):
        monopole_harmonic(q, 0, 0, n)


@pytest.mark.parametrize(("q", "level"), [(0, 0), (0.5, 1), (-2, 2)])
def test_enumerate_monopole_harmonics_raises(q, level):
    with pytest.raises(OutOfRange):
        enumerate_monopole_harmonics(q, level)


@pytest.mark.parametrize("sector", [0, 1])
@pytest.mark.parametrize("q", [-3, -2, -1, 0, 1, 2, 3])
def test_enumeration_multiplicity(q, sector):
    """Test that level n' holds 2n' + q harmonics with eigenvalue n'(n' + q)."""
    q_eff = q if sector == 0 else -q
    lowest = 0 if q_eff > 0 else 1 - q_eff
    for level in range(lowest, lowest + 4):
        entries = enumerate_monopole_harmonics(q, level, sector=sector)
        assert len(entries) == 2 * level + q_eff
        assert len({e.m for e in entries}) == len(entries)
        for e in entries:
            assert e.eigenvalue == level * (level + q_eff)
            assert e.sector == sector
            assert e.norm_class in (NormClass.REGULAR, NormClass.SECTION)


@pytest.mark.parametrize("sector", [0, 1])
@pytest.mark.parametrize("q", [-2, 0, 1, 2, 3])
def test_harmonics_are_family_members(q, sector):
    """Test that each harmonic coincides with the family mode of its label."""
    q_eff = q if sector == 0 else -q
    lowest = 0 if q_eff > 0 else 1 - q_eff
    for level in range(lowest, lowest + 3):
        for e in enumerate_monopole_harmonics(q, level, sector=sector):
            assert e.eigenvalue == family_eigenvalue(e.config, e.m, e.n, e.family)
            members = dict(zip(Family, build_families(e.config, e.m, e.n)))
            assert canonical_key(members[e.family]) == canonical_key(e)


def test_lambda_closed_form_when_signs_agree():
    """Test (|m+k|+n+k)(|m+k|+n+1-k) where m and m+2k share their sign."""
    for q in (1, 2, 3, -1):
        kappa = Fraction(1 - q, 2)
        for m in range(-3, 4):
            if m * (m + 2 * kappa) < 0:
                continue
            for n in range(3):
                s = abs(m + kappa)
                expected = (s + n + kappa) * (s + n + 1 - kappa)
                assert monopole_eigenvalue(q, m, n) == expected


@pytest.mark.parametrize(("q", "m"), [(1, 0), (2, 1), (2, -1), (3, 0)])
def test_harmonics_orthonormal(q, m):
    """Test that harmonics with equal m and distinct eigenvalues are orthogonal."""
    entries = [normalize(monopole_harmonic(q, 0, m, n)) for n in range(5)]
    gram = np.array([[inner_product(a, b) for b in entries] for a in entries])
    assert_allclose(gram, np.eye(5), atol=1e-10)
