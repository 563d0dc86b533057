from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import integrate

from monopole_spectra._exceptions import (
    DivergentAtNorthPoleOfMap,
    DivergentIntegralError,
    SectorMismatchError,
)
from monopole_spectra.modes import (
    Family,
    FluxConfig,
    ModeDescriptor,
    NormClass,
    build_families,
    canonical_form,
    canonical_key,
    classify,
    evaluate,
    family_gamma,
    gamma_exponent,
    inner_product,
    normalize,
    radial_part,
    reduce_negative_m,
    to_grid_function,
)
from monopole_spectra.specialfn import JacobiSpec, jacobi_eval


@pytest.mark.parametrize(
    ("q", "expected"),
    [
        (0.5, Fraction(1, 2)),
        ("2.7", Fraction(27, 10)),
        (Fraction(-3, 2), -1.5),
        (2, 2),
    ],
)
def test_flux_config_exact(q, expected):
    """Test that FluxConfig stores the flux exactly."""
    config = FluxConfig(q)
    assert config.q == expected
    assert config.kappa == (1 - config.q) / 2
    assert config.effective_kappa == config.kappa
    mirrored = config.partner()
    assert mirrored.sector == 1
    assert mirrored.effective_q == -config.q
    assert mirrored.effective_kappa == (1 + config.q) / 2
    assert mirrored.effective_m(3) == -3


def test_flux_config_raises():
    with pytest.raises(ValueError, match="The sector must be 0 or 1"):
        FluxConfig(1, sector=2)
    with pytest.raises(ValueError, match="finite real number"):
        FluxConfig(float("nan"))


def test_build_families_half_flux_m0():
    """Test the two n=0 states at q=1/2 and m=0."""
    plain, tilde = build_families(FluxConfig("1/2"), 0, 0)
    assert plain.family is Family.PLAIN
    assert plain.descriptor.a_exp == 0
    assert plain.descriptor.b_exp == Fraction(-1, 4)
    assert plain.eigenvalue == 0
    assert plain.norm_class is NormClass.SINGULAR_NORMALIZABLE
    assert tilde.descriptor.b_exp == Fraction(1, 4)
    assert tilde.eigenvalue == Fraction(1, 2)
    assert tilde.norm_class is NormClass.REGULAR


def test_build_families_half_flux_m1():
    plain, tilde = build_families(FluxConfig("1/2"), 1, 0)
    assert tilde.descriptor.b_exp == Fraction(3, 4)
    assert tilde.eigenvalue == 3
    assert plain.norm_class is NormClass.NON_NORMALIZABLE


@pytest.mark.parametrize("n", range(6))
def test_build_families_unit_flux(n):
    """Test that the spectrum at q=1 and m=0 is l(l+1)."""
    plain, tilde = build_families(FluxConfig(1), 0, n)
    assert plain.eigenvalue == n * (n + 1)
    assert tilde.eigenvalue == n * (n + 1)


@pytest.mark.parametrize(
    ("m", "n", "msg"),
    [
        (1.5, 0, "The angular momentum m must be an integer"),
        (0, -1, "The label n must be a nonnegative integer"),
    ],
)
def test_build_families_raises(m, n, msg):
    with pytest.raises(ValueError, match=msg):
        build_families(FluxConfig(1), m, n)


def test_reduce_negative_m_half_flux():
    """Test the reduced m=-1 modes at q=1/2."""
    plain, tilde = build_families(FluxConfig("1/2"), -1, 1)
    d = plain.descriptor
    assert (d.a_exp, d.b_exp) == (Fraction(1, 2), Fraction(1, 4))
    assert d.jacobi == JacobiSpec(0, 1, Fraction(1, 2))
    assert plain.eigenvalue == Fraction(3, 2)
    d = tilde.descriptor
    assert (d.a_exp, d.b_exp) == (Fraction(1, 2), Fraction(-1, 4))
    assert d.jacobi == JacobiSpec(0, 1, Fraction(-1, 2))
    assert d.coeff == pytest.approx(-0.25)
    assert tilde.norm_class is NormClass.SINGULAR_NORMALIZABLE


@pytest.mark.parametrize("sector", [0, 1])
def test_reduce_negative_m_divergent(sector):
    m = -1 if sector == 0 else 1
    with pytest.raises(DivergentAtNorthPoleOfMap, match="diverges at z=1"):
        build_families(FluxConfig("1/2", sector), m, 0)


def test_reduce_negative_m_raises_for_nonnegative_m():
    plain, _ = build_families(FluxConfig("1/2"), 1, 2)
    with pytest.raises(ValueError, match="must have a negative effective m"):
        reduce_negative_m(plain)


@pytest.mark.parametrize("q", ["1/2", "2.7", "-1.3", "0.3"])
@pytest.mark.parametrize("m", [-1, -2, -3])
@pytest.mark.parametrize("family", list(Family))
def test_reduce_negative_m_equivalence(q, m, family):
    """Test that the reduced mode equals the unreduced formula pointwise."""
    config = FluxConfig(q)
    kappa = config.kappa
    z = np.array([-0.7, -0.1, 0.3, 0.8])
    for n in range(-m, -m + 4):
        if family is Family.PLAIN:
            b_exp = -Fraction(m, 2) - kappa
            jacobi = JacobiSpec(n, m, -m - 2 * kappa)
        else:
            b_exp = Fraction(m, 2) + kappa
            jacobi = JacobiSpec(n, m, m + 2 * kappa)
        raw = ModeDescriptor(m, family, n, Fraction(m, 2), b_exp, jacobi, 1, config)
        entry = dict(zip(Family, build_families(config, m, n)))[family]
        assert entry.descriptor.a_exp == Fraction(-m, 2)
        assert entry.descriptor.jacobi.n == n + m
        assert_allclose(evaluate(entry, z), evaluate(raw, z), rtol=1e-10, atol=1e-12)


def test_reduction_in_sector_one():
    """Test that F=1 reduces positive physical m."""
    plain, tilde = build_families(FluxConfig("1/2", sector=1), 1, 2)
    for e in (plain, tilde):
        assert e.m == 1
        assert e.descriptor.a_exp == Fraction(1, 2)
        assert e.descriptor.jacobi.n == 1
    plain, _ = build_families(FluxConfig("1/2", sector=1), -1, 0)
    assert plain.descriptor.jacobi.n == 0
    assert plain.descriptor.a_exp == Fraction(1, 2)


@pytest.mark.parametrize(
    ("q", "m", "family", "expected"),
    [
        ("1/2", 0, Family.PLAIN, Fraction(-1, 2)),
        ("1/2", 0, Family.TILDE, Fraction(1, 2)),
        ("2.7", 1, Family.PLAIN, Fraction(7, 10)),
        ("2.7", 2, Family.PLAIN, Fraction(-3, 10)),
    ],
)
def test_gamma_exponent_examples(q, m, family, expected):
    entry = dict(zip(Family, build_families(FluxConfig(q), m, 0)))[family]
    assert gamma_exponent(entry) == expected
    assert entry.gamma == expected


@pytest.mark.parametrize("sector", [0, 1])
def test_gamma_exponent_closed_forms(sector):
    """Test gamma = q-1-m (Plain) and m+1-q (Tilde), mirrored in F=1."""
    rng = np.random.default_rng(42)
    for _ in range(40):
        q = Fraction(int(rng.integers(-20, 31)), 10) + Fraction(1, 20)
        config = FluxConfig(q, sector)
        m = int(rng.integers(-4, 5))
        n = abs(m) + int(rng.integers(0, 3))
        plain, tilde = build_families(config, m, n)
        sign = 1 if sector == 0 else -1
        assert gamma_exponent(plain) == sign * (q - m) - 1
        assert gamma_exponent(tilde) == sign * (m - q) + 1
        assert plain.gamma == family_gamma(config, m, Family.PLAIN)
        assert tilde.gamma == family_gamma(config, m, Family.TILDE)


def test_gamma_exponent_counts_jacobi_zero():
    """Test that a zero of the Jacobi factor at z=-1 raises gamma."""
    config = FluxConfig(1)
    d = ModeDescriptor(0, Family.PLAIN, 3, 0, 0, JacobiSpec(3, 1, -2), 1, config)
    assert gamma_exponent(d) == 4


@pytest.mark.parametrize(
    ("gamma", "expected"),
    [
        (Fraction(1, 2), NormClass.REGULAR),
        (0, NormClass.SECTION),
        (Fraction(-1, 2), NormClass.SINGULAR_NORMALIZABLE),
        (-0.999, NormClass.SINGULAR_NORMALIZABLE),
        (-1, NormClass.NON_NORMALIZABLE),
        (-3, NormClass.NON_NORMALIZABLE),
    ],
)
def test_classify(gamma, expected):
    assert classify(gamma) is expected


def test_classify_section_requires_integer_flux():
    assert classify(0, q=2) is NormClass.SECTION
    with pytest.raises(RuntimeError, match="cannot occur at non-integer flux"):
        classify(0, q=Fraction(1, 2))


def test_constant_mode_is_section():
    plain, _ = build_families(FluxConfig(1), 0, 0)
    assert plain.gamma == 0
    assert plain.norm_class is NormClass.SECTION


def test_evaluate_examples():
    plain, tilde = build_families(FluxConfig("1/2"), 0, 0)
    assert evaluate(plain, 0.0, 0.0) == pytest.approx(1)
    assert evaluate(tilde, 1.0, 0.0) == pytest.approx(2**0.25)
    _, tilde = build_families(FluxConfig("1/2"), 1, 0)
    ratio = evaluate(tilde, 0.2, np.pi) / evaluate(tilde, 0.2, 0.0)
    assert ratio == pytest.approx(-1)
    values = evaluate(tilde, np.array([-0.5, 0.5]), np.array([0.0, np.pi / 2]))
    assert values.shape == (2,)
    assert values[1].real == pytest.approx(0, abs=1e-15)


def test_inner_product_examples():
    """Test the volume, the non-orthogonality at q=1/2 and phase orthogonality."""
    constant, _ = build_families(FluxConfig(1), 0, 0)
    assert inner_product(constant, constant) == pytest.approx(2 * np.pi, rel=1e-12)

    plain, tilde = build_families(FluxConfig("1/2"), 0, 0)
    assert inner_product(tilde, plain) == pytest.approx(2 * np.pi, rel=1e-10)
    assert inner_product(plain, tilde) == pytest.approx(2 * np.pi, rel=1e-10)

    _, tilde_m1 = build_families(FluxConfig("1/2"), 1, 0)
    assert inner_product(tilde, tilde_m1) == 0


def test_inner_product_integer_flux_negative_beta():
    """Test the norm of a regular mode whose Jacobi beta is a negative integer."""
    plain, _ = build_families(FluxConfig(1), 2, 3)
    d = plain.descriptor
    assert (d.b_exp, d.jacobi.beta) == (-1, -2)
    assert plain.norm_class is NormClass.REGULAR
    norm = inner_product(plain, plain)
    expected, _ = integrate.quad(lambda z: abs(radial_part(plain, z)) ** 2, -1, 1)
    assert norm.real > 0
    assert norm == pytest.approx(np.pi * expected, rel=1e-10)
    assert inner_product(normalize(plain), normalize(plain)) == pytest.approx(1)


def test_inner_product_divergent():
    plain, _ = build_families(FluxConfig("1/2"), 1, 0)
    with pytest.raises(DivergentIntegralError, match="diverges"):
        inner_product(plain, plain)


def test_inner_product_sector_mismatch():
    e0, _ = build_families(FluxConfig("1/2", 0), 0, 0)
    e1, _ = build_families(FluxConfig("1/2", 1), 0, 0)
    with pytest.raises(SectorMismatchError):
        inner_product(e0, e1)


def test_inner_product_coefficients():
    """Test sesquilinearity in the coefficients."""
    _, tilde = build_families(FluxConfig("1/2"), 0, 1)
    base = inner_product(tilde, tilde)
    scaled = tilde.descriptor.scale(2j)
    assert inner_product(scaled, tilde) == pytest.approx(-2j * base)
    assert inner_product(tilde, scaled) == pytest.approx(2j * base)


def test_classify_matches_norm_convergence():
    """Test that exactly the NonNormalizable modes have a divergent norm."""
    rng = np.random.default_rng(7)
    for _ in range(30):
        q = Fraction(int(rng.integers(-25, 35)), 10) + Fraction(1, 30)
        sector = int(rng.integers(0, 2))
        m = int(rng.integers(-3, 4))
        n = abs(m) + int(rng.integers(0, 3))
        for entry in build_families(FluxConfig(q, sector), m, n):
            if entry.norm_class is NormClass.NON_NORMALIZABLE:
                with pytest.raises(DivergentIntegralError):
                    inner_product(entry, entry)
            else:
                assert inner_product(entry, entry).real > 0


@pytest.mark.parametrize("q", range(-2, 4))
@pytest.mark.parametrize("sector", [0, 1])
def test_classify_matches_norm_convergence_integer_flux(q, sector):
    """Test that at integer flux every mode but the NonNormalizable ones has a norm."""
    config = FluxConfig(q, sector)
    checked = 0
    for m in range(-3, 4):
        for n in range(abs(m), abs(m) + 4):
            for entry in build_families(config, m, n):
                if entry.descriptor.is_zero:
                    continue
                checked += 1
                if entry.norm_class is NormClass.NON_NORMALIZABLE:
                    with pytest.raises(DivergentIntegralError):
                        inner_product(entry, entry)
                else:
                    norm = inner_product(entry, entry)
                    assert np.isfinite(norm)
                    assert norm.real > 0
    assert checked > 0


def test_normalize():
    _, tilde = build_families(FluxConfig("1/2"), 2, 3)
    unit = normalize(tilde)
    assert inner_product(unit, unit) == pytest.approx(1, rel=1e-12)
    assert unit.eigenvalue == tilde.eigenvalue


def test_normalize_zero_mode_raises():
    _, tilde = build_families(FluxConfig(1), -1, 1)
    assert tilde.descriptor.is_zero
    with pytest.raises(ValueError, match="cannot be normalized"):
        normalize(tilde)


@pytest.mark.parametrize(
    ("q", "m", "n_tilde", "n_plain"),
    [
        (1, 1, 1, 2),
        (1, 2, 0, 2),
        (2, 2, 0, 1),
        (2, 3, 1, 3),
        (-1, 0, 0, 2),
        (3, -1, 4, 1),
    ],
)
def test_integer_flux_family_collapse(q, m, n_tilde, n_plain):
    """Test that at integer flux Tilde and Plain modes coincide up to a shift of n."""
    config = FluxConfig(q)
    _, tilde = build_families(config, m, n_tilde)
    plain, _ = build_families(config, m, n_plain)
    assert canonical_key(plain) == canonical_key(tilde)
    assert plain.eigenvalue == tilde.eigenvalue
    z = np.array([-0.83, -0.37, 0.21, 0.66])
    ratio = evaluate(plain, z) / evaluate(tilde, z)
    assert_allclose(ratio, ratio[0], rtol=1e-9)


def test_canonical_form_is_equivalent():
    config = FluxConfig(2)
    plain, _ = build_families(config, 2, 3)
    reduced = canonical_form(plain)
    assert reduced.jacobi.beta >= 0
    z = np.linspace(-0.8, 0.8, 5)
    d = plain.descriptor
    raw = (
        d.coeff
        * (1 - z) ** float(d.a_exp)
        * (1 + z) ** float(d.b_exp)
        * jacobi_eval(d.jacobi, z)
    )
    assert_allclose(evaluate(reduced, z), raw, rtol=1e-10, atol=1e-13)
    assert_allclose(evaluate(plain, z), raw, rtol=1e-10, atol=1e-13)


def test_to_grid_function():
    _, tilde = build_families(FluxConfig("1/2"), 1, 2)
    nodes = np.linspace(-0.9, 0.9, 11)
    grid = to_grid_function(tilde, nodes)
    assert grid.a_exp == tilde.descriptor.a_exp
    assert_allclose(grid.evaluate(nodes, 0.3), evaluate(tilde, nodes, 0.3), rtol=1e-12)
