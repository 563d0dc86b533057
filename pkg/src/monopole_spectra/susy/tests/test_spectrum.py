import pytest

from monopole_spectra._exceptions import InadmissiblePolicyError
from monopole_spectra.modes import Family, NormClass, canonical_key
from monopole_spectra.susy import HilbertPolicy, assemble_spectrum, check_policy


def test_check_policy():
    assert check_policy("1/2", "RegularOnly") is HilbertPolicy.REGULAR_ONLY
    assert check_policy(2, HilbertPolicy.BUNDLE_SECTIONS) is (
        HilbertPolicy.BUNDLE_SECTIONS
    )
    with pytest.raises(InadmissiblePolicyError, match="must be one of"):
        check_policy(1, "Everything")
    with pytest.raises(InadmissiblePolicyError, match="only admissible for integer"):
        check_policy("1/2", "BundleSections")


def test_admitted_classes():
    assert HilbertPolicy.REGULAR_ONLY.admitted_classes == {NormClass.REGULAR}
    assert HilbertPolicy.BUNDLE_SECTIONS.admitted_classes == {
        NormClass.REGULAR,
        NormClass.SECTION,
    }
    assert NormClass.SINGULAR_NORMALIZABLE in (
        HilbertPolicy.SQUARE_INTEGRABLE.admitted_classes
    )
    assert NormClass.NON_NORMALIZABLE not in (
        HilbertPolicy.SQUARE_INTEGRABLE.admitted_classes
    )


@pytest.mark.parametrize("level", [0, 1, 2, 3])
def test_bundle_sections_degeneracy_unit_flux(level):
    """Test that the level L(L+1) at q = 1 is (2L+1)-fold degenerate."""
    spectrum = assemble_spectrum(1, n_max=3, policy="BundleSections")
    count = sum(1 for e in spectrum[0] if e.eigenvalue == level * (level + 1))
    assert count == 2 * level + 1


def test_square_integrable_contains_singular_modes():
    square = assemble_spectrum("1/2", (-2, 2), 2, "SquareIntegrable")
    regular = assemble_spectrum("1/2", (-2, 2), 2, "RegularOnly")
    m0_square = {e.family for e in square[0] if e.m == 0 and e.n == 0}
    m0_regular = {e.family for e in regular[0] if e.m == 0 and e.n == 0}
    assert m0_square == {Family.PLAIN, Family.TILDE}
    assert m0_regular == {Family.TILDE}
    assert any(e.m == -1 and e.family is Family.TILDE for e in square[0])


@pytest.mark.parametrize("q", ["1/2", "2.7", "-1.5", 2])
@pytest.mark.parametrize("policy", list(HilbertPolicy))
def test_spectrum_entries_admitted_and_sorted(q, policy):
    if policy is HilbertPolicy.BUNDLE_SECTIONS and q != 2:
        pytest.skip("BundleSections needs integer flux.")
    spectrum = assemble_spectrum(q, n_max=3, policy=policy)
    for sector, entries in spectrum.items():
        eigenvalues = [e.eigenvalue for e in entries]
        assert eigenvalues == sorted(eigenvalues)
        assert all(e.sector == sector for e in entries)
        assert all(policy.admits(e) for e in entries)
        keys = [canonical_key(e) for e in entries]
        assert len(keys) == len(set(keys))
        if policy is not HilbertPolicy.SQUARE_INTEGRABLE:
            assert all(e.eigenvalue >= 0 for e in entries)


def test_assemble_spectrum_raises():
    with pytest.raises(ValueError, match="n_max must be a nonnegative integer"):
        assemble_spectrum(1, n_max=-1)
    with pytest.raises(ValueError, match="m_min <= m_max"):
        assemble_spectrum(1, (2, 1))
