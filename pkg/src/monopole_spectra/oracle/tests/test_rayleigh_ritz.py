import numpy as np
import pytest
from numpy.testing import assert_allclose

from monopole_spectra._exceptions import SectorMismatchError, SingularGramMatrixError
from monopole_spectra.modes import FluxConfig, build_families
from monopole_spectra.oracle import rayleigh_ritz_eigen


def test_two_states_half_flux():
    """Test the non-orthogonal pair with eigenvalues 0 and 1/2."""
    config = FluxConfig("1/2")
    plain, tilde = build_families(config, 0, 0)
    result = rayleigh_ritz_eigen(config, 0, [plain, tilde])
    assert_allclose(result.eigenvalues, [0, 0.5], atol=1e-10)
    assert result.gram_matrix[0, 1] == pytest.approx(2 * np.pi, abs=1e-8)
    assert not result.gram_is_diagonal
    h = result.hamiltonian_matrix
    assert abs(h[0, 1] - h[1, 0]) == pytest.approx(np.pi, abs=1e-8)
    assert result.asymmetry == pytest.approx(np.pi, abs=1e-8)


def test_unit_flux_harmonics():
    config = FluxConfig(1)
    basis = [build_families(config, 0, n)[0] for n in range(5)]
    result = rayleigh_ritz_eigen(config, 0, basis)
    assert result.gram_is_diagonal
    assert_allclose(result.eigenvalues, [0, 2, 6, 12, 20], atol=1e-8)
    assert result.asymmetry <= 1e-10 * np.max(np.abs(result.hamiltonian_matrix))


def test_singular_state_breaks_symmetry():
    config = FluxConfig("1/2")
    regular = [build_families(config, 0, n)[1] for n in range(4)]
    result = rayleigh_ritz_eigen(config, 0, regular)
    assert result.asymmetry <= 1e-9
    expected = [float(e.eigenvalue) for e in regular]
    assert_allclose(result.eigenvalues, expected, rtol=1e-10)

    plain, _ = build_families(config, 0, 0)
    result = rayleigh_ritz_eigen(config, 0, [*regular, plain])
    assert result.asymmetry >= 1e-2


def test_single_mode_rayleigh_quotient():
    config = FluxConfig(2.7)
    _, tilde = build_families(config, 2, 1)
    result = rayleigh_ritz_eigen(config, 2, [tilde])
    assert result.eigenvalues[0] == pytest.approx(5.2, rel=1e-10)


def test_rayleigh_ritz_raises():
    config = FluxConfig("1/2")
    _, tilde0 = build_families(config, 0, 0)
    _, tilde1 = build_families(config, 1, 0)
    with pytest.raises(SectorMismatchError, match="m=0"):
        rayleigh_ritz_eigen(config, 0, [tilde0, tilde1])
    with pytest.raises(SectorMismatchError):
        rayleigh_ritz_eigen(FluxConfig("1/2", 1), 0, [tilde0])
    with pytest.raises(ValueError, match="at least one mode"):
        rayleigh_ritz_eigen(config, 0, [])
    with pytest.raises(SingularGramMatrixError):
        rayleigh_ritz_eigen(config, 0, [tilde0, tilde0])
