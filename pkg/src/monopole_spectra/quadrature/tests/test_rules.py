import warnings

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import integrate, special

from monopole_spectra import config_context
from monopole_spectra._exceptions import DivergentIntegralError
from monopole_spectra.quadrature import (
    GridFunction,
    gauss_jacobi_rule,
    integrate_product,
)
from monopole_spectra.specialfn import JacobiSpec, jacobi_eval


def test_gauss_jacobi_rule_midpoint():
    rule = gauss_jacobi_rule(1, 0, 0)
    assert_allclose(rule.nodes, [0], atol=1e-15)
    assert_allclose(rule.weights, [2])
    assert rule.npoints == 1
    assert rule.weight_exponents == (0.0, 0.0)


@pytest.mark.parametrize(
    ("npoints", "a", "b"),
    [(2, 0, 0), (5, 0.5, -0.5), (16, -0.9, 2), (64, 1.25, -0.75)],
)
def test_gauss_jacobi_rule_against_scipy(npoints, a, b):
    rule = gauss_jacobi_rule(npoints, a, b)
    # scipy uses the weight (1-x)^alpha (1+x)^beta as well
    nodes, weights = special.roots_jacobi(npoints, a, b)
    assert_allclose(rule.nodes, nodes, rtol=1e-12, atol=1e-13)
    assert_allclose(rule.weights, weights, rtol=1e-10)


@pytest.mark.parametrize("npoints", [1, 3, 8, 33])
@pytest.mark.parametrize(("a", "b"), [(0, 0), (0.3, -0.6), (-0.9, 2), (2.5, 1)])
def test_gauss_jacobi_rule_invariants(npoints, a, b):
    rule = gauss_jacobi_rule(npoints, a, b)
    assert np.all(np.diff(rule.nodes) > 0)
    assert np.all(np.abs(rule.nodes) < 1)
    assert np.all(rule.weights > 0)
    total = 2 ** (a + b + 1) * special.beta(a + 1, b + 1)
    assert rule.weights.sum() == pytest.approx(total, rel=1e-12)


def test_gauss_jacobi_rule_examples():
    rule = gauss_jacobi_rule(8, 0, -0.5)
    assert rule.weights.sum() == pytest.approx(2 * np.sqrt(2), rel=1e-12)
    rule = gauss_jacobi_rule(12, 1, 0.5)
    reference, _ = integrate.quad(lambda z: z**2, -1, 1, weight="alg", wvar=(0.5, 1))
    assert rule.integrate(rule.nodes**2) == pytest.approx(reference, rel=1e-12)


def test_gauss_jacobi_rule_cached_and_read_only():
    rule = gauss_jacobi_rule(10, 0.25, 0.5)
    assert gauss_jacobi_rule(10, 0.25, 0.5) is rule
    with pytest.raises(ValueError):
        rule.nodes[0] = 0.0


def test_gauss_jacobi_rule_uses_config():
    with config_context(quad_points=7):
        assert gauss_jacobi_rule(a=0.5, b=0.5).npoints == 7


@pytest.mark.parametrize(("a", "b"), [(-1, 0), (0, -1.5)])
def test_gauss_jacobi_rule_raises(a, b):
    with pytest.raises(DivergentIntegralError, match="diverges"):
        gauss_jacobi_rule(4, a, b)


@pytest.mark.parametrize("npoints", [0, 2.5])
def test_gauss_jacobi_rule_raises_npoints(npoints):
    with pytest.raises(ValueError, match="Argument npoints must be a positive"):
        gauss_jacobi_rule(npoints, 0, 0)


def test_exactness_on_random_polynomials():
    rng = np.random.default_rng(1234)
    for _ in range(20):
        npoints = int(rng.integers(1, 9))
        a, b = rng.uniform(-0.9, 2, size=2)
        coef = rng.normal(size=2 * npoints)
        rule = gauss_jacobi_rule(npoints, a, b)
        approx = rule.integrate(np.polynomial.polynomial.polyval(rule.nodes, coef))
        # adaptive reference with the algebraic endpoint weight (1+z)^b (1-z)^a
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            exact, _ = integrate.quad(
                lambda z, coef=coef: np.polynomial.polynomial.polyval(z, coef),
                -1,
                1,
                weight="alg",
                wvar=(b, a),
                epsabs=1e-14,
                epsrel=1e-14,
            )
        assert approx == pytest.approx(exact, rel=1e-10, abs=1e-11)


def test_convergence_on_smooth_integrand():
    def f(z):
        return 1 / (1.5 - z)

    values = [integrate_product(f, 1, 0.5, -0.3, npoints=n) for n in (8, 16, 32)]
    assert abs(values[2] - values[1]) * 1e3 <= abs(values[1] - values[0])


@pytest.mark.parametrize(("alpha", "beta"), [(0, 0), (0.5, -0.5), (-0.7, 1.3), (2, 3)])
def test_orthogonality_reproduction(alpha, beta):
    gram = np.empty((6, 6))
    for i in range(6):
        for j in range(6):
            gram[i, j] = integrate_product(
                lambda z, i=i: jacobi_eval(JacobiSpec(i, alpha, beta), z),
                lambda z, j=j: jacobi_eval(JacobiSpec(j, alpha, beta), z),
                alpha,
                beta,
                npoints=16,
            )
    diag = np.sqrt(np.diag(gram))
    normalized = gram / np.outer(diag, diag)
    assert_allclose(normalized, np.eye(6), atol=1e-10)


def test_integrate_product_examples():
    assert integrate_product(1, 1, 0, 0, npoints=3) == pytest.approx(2)
    assert integrate_product(1, 1, 0, 0.5) == pytest.approx(4 / 3 * np.sqrt(2))
    nodes = gauss_jacobi_rule(5, 0, 0).nodes
    f = GridFunction(0, nodes, np.ones(5), a_exp=0, b_exp=0.25)
    g = GridFunction(0, nodes, np.ones(5), a_exp=0, b_exp=-0.25)
    assert integrate_product(f, g) == pytest.approx(2)


def test_integrate_product_complex():
    result = integrate_product(lambda z: 1j * z, lambda z: z, 0, 0, npoints=4)
    assert isinstance(result, complex)
    assert result == pytest.approx(2j / 3)


def test_integrate_product_divergent():
    nodes = gauss_jacobi_rule(5, 0, 0).nodes
    f = GridFunction(0, nodes, np.ones(5), b_exp=-0.75)
    with pytest.raises(DivergentIntegralError) as excinfo:
        integrate_product(f, f)
    assert excinfo.value.b == pytest.approx(-1.5)
