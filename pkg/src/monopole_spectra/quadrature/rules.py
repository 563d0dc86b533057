"""Gauss-Jacobi quadrature on (-1, 1) with endpoint weights (1-z)^a (1+z)^b."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Union

import numpy as np
import numpy.typing as npt
from scipy import linalg, special

from monopole_spectra._config import resolve_quad_points
from monopole_spectra._exceptions import DivergentIntegralError

from .grid import GridFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule for the weight (1-z)^a (1+z)^b on (-1, 1).

    Attributes
    ----------
    nodes : ndarray
        Strictly increasing nodes in (-1, 1), read-only.
    weights : ndarray
        Positive weights, read-only.
    weight_exponents : tuple of float
        The exponents (a, b) of the absorbed weight.
    """

    nodes: np.ndarray
    weights: np.ndarray
    weight_exponents: tuple[float, float]

    @property
    def npoints(self) -> int:
        return self.nodes.shape[0]

    def integrate(self, values: npt.ArrayLike):
        """Return sum_i weights_i * values_i."""
        return np.dot(self.weights, np.asarray(values))


def _recurrence_coefficients(npoints: int, a: float, b: float):
    """Diagonal and off-diagonal of the Jacobi matrix of monic Jacobi polynomials."""
    k = np.arange(npoints, dtype=float)
    ab = a + b
    diag = np.empty(npoints)
    diag[0] = (b - a) / (ab + 2.0)
    if npoints > 1:
        kk = k[1:]
        diag[1:] = (b * b - a * a) / ((2 * kk + ab) * (2 * kk + ab + 2.0))
    off = np.empty(max(npoints - 1, 0))
    if npoints > 1:
        off[0] = 4.0 * (1 + a) * (1 + b) / ((2 + ab) ** 2 * (3 + ab))
        kk = k[2:]
        off[1:] = (
            4.0
            * kk
            * (kk + a)
            * (kk + b)
            * (kk + ab)
            / ((2 * kk + ab) ** 2 * (2 * kk + ab + 1.0) * (2 * kk + ab - 1.0))
        )
    return diag, np.sqrt(off)


@lru_cache(maxsize=128)
def _cached_rule(npoints: int, a: float, b: float) -> QuadratureRule:
    logger.debug("Building Gauss-Jacobi rule npoints=%d, a=%s, b=%s", npoints, a, b)
    diag, off = _recurrence_coefficients(npoints, a, b)
    if npoints == 1:
        nodes = diag.copy()
        vectors = np.ones((1, 1))
    else:
        nodes, vectors = linalg.eigh_tridiagonal(diag, off)
    mu0 = 2.0 ** (a + b + 1.0) * special.beta(a + 1.0, b + 1.0)
    weights = mu0 * vectors[0, :] ** 2
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, weight_exponents=(a, b))


def gauss_jacobi_rule(npoints: Optional[int] = None, a=0.0, b=0.0) -> QuadratureRule:
    r"""Gauss-Jacobi rule for the weight (1-z)^a (1+z)^b.

    The rule is built by the Golub-Welsch algorithm: the nodes are the eigenvalues
    of the symmetric tridiagonal Jacobi matrix of the recurrence coefficients, the
    weights are \(\mu_0 v_{0,i}^2\) with the first components of the normalized
    eigenvectors and \(\mu_0 = 2^{a+b+1} B(a+1, b+1)\).
    Rules are immutable and cached.

    Parameters
    ----------
    npoints : int or None
        Number of nodes. If None, the configured `quad_points` is used.
    a : float
        Exponent of (1 - z), a > -1.
    b : float
        Exponent of (1 + z), b > -1.

    Returns
    -------
    rule : QuadratureRule
        Integrates (1-z)^a (1+z)^b p(z) exactly for polynomials p of degree
        <= 2 npoints - 1.

    Examples
    --------
    >>> rule = gauss_jacobi_rule(1, 0, 0)
    >>> rule.nodes, rule.weights
    (array([0.]), array([2.]))
    """
    npoints = resolve_quad_points(npoints)
    a, b = float(a), float(b)
    if a <= -1 or b <= -1:
        raise DivergentIntegralError(a, b)
    return _cached_rule(npoints, a, b)


def _values_at(f, nodes: np.ndarray) -> np.ndarray:
    if isinstance(f, GridFunction):
        return f.smooth(nodes)
    if callable(f):
        return np.asarray(f(nodes))
    value = complex(f) if isinstance(f, complex) else float(f)
    return np.full(nodes.shape, value)


def integrate_product(
    f: Union[GridFunction, Callable, float],
    g: Union[GridFunction, Callable, float],
    a=0.0,
    b=0.0,
    npoints: Optional[int] = None,
):
    r"""Weighted integral of a product on (-1, 1).

    Computes

    \[
    \int_{-1}^{1} (1-z)^a (1+z)^b f(z) g(z) \, dz.
    \]

    Endpoint exponents of [`GridFunction`][monopole_spectra.quadrature.GridFunction]
    arguments are absorbed into the weight, only their smooth parts are sampled.

    Parameters
    ----------
    f, g : GridFunction, callable or scalar
        The factors. Callables are evaluated at the quadrature nodes.
    a, b : float
        Exponents of the weight.
    npoints : int or None
        Number of quadrature nodes. If None, the configured `quad_points` is used.

    Returns
    -------
    integral : float or complex

    Raises
    ------
    DivergentIntegralError
        If the total exponent at an endpoint is <= -1.

    Examples
    --------
    >>> abs(integrate_product(1, 1, 0, 0.5) - 4 / 3 * 2**0.5) < 1e-12
    True
    """
    a_tot, b_tot = a, b
    for h in (f, g):
        if isinstance(h, GridFunction):
            a_tot += h.a_exp
            b_tot += h.b_exp
    if a_tot <= -1 or b_tot <= -1:
        raise DivergentIntegralError(a_tot, b_tot)
    rule = gauss_jacobi_rule(npoints, a_tot, b_tot)
    values = _values_at(f, rule.nodes) * _values_at(g, rule.nodes)
    result = rule.integrate(values)
    if np.iscomplexobj(result):
        return complex(result)
    return float(result)
