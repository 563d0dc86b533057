r"""Numerical eigenvalues of the radial problem for fixed angular momentum.

Dividing the endpoint factor of a tower out of F leaves a Jacobi operator for
the polynomial part P. In theta = arccos z it is the Sturm-Liouville problem

\[
-\frac{d}{d\theta}\Big(S \frac{dP}{d\theta}\Big) = \mu S P, \qquad
S(\theta) = \sin^{2\alpha+1}(\theta/2)\cos^{2\beta+1}(\theta/2),
\]

with lambda = c + mu and the tower offset c, the eigenvalue of its lowest member.
It is discretized by a cell-centered finite volume scheme on a uniform grid with
vanishing flux through both ends.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from numpy.polynomial import legendre
from scipy import linalg

from monopole_spectra._config import scaled_tolerance
from monopole_spectra._exceptions import ConvergenceError
from monopole_spectra.modes import (
    Family,
    FluxConfig,
    NormClass,
    build_families,
    classify,
    family_eigenvalue,
    family_gamma,
)

from .discretization import Boundary, DiscretizationSpec, Method
from .rayleigh_ritz import rayleigh_ritz_eigen

logger = logging.getLogger(__name__)

ADMITTED = {
    Boundary.REGULAR_BOTH_ENDS: frozenset({NormClass.REGULAR, NormClass.SECTION}),
    Boundary.NORMALIZABLE_ONLY: frozenset(
        {NormClass.REGULAR, NormClass.SECTION, NormClass.SINGULAR_NORMALIZABLE}
    ),
}


@dataclass(frozen=True)
class RadialTower:
    """A family tower of angular momentum m with its Jacobi parameters."""

    config: FluxConfig
    m: int
    family: Family
    base_label: int
    alpha: float
    beta: float
    offset: Fraction

    def exact_eigenvalues(self, count: int) -> list[Fraction]:
        return [
            family_eigenvalue(self.config, self.m, self.base_label + k, self.family)
            for k in range(count)
        ]

    def members(self, count: int) -> list:
        index = 0 if self.family is Family.PLAIN else 1
        entries = [
            build_families(self.config, self.m, self.base_label + k)[index]
            for k in range(count)
        ]
        return [e for e in entries if not e.descriptor.is_zero]


@dataclass(frozen=True)
class SturmLiouvilleResult:
    """Lowest eigenvalues of one sector m.

    Attributes
    ----------
    eigenvalues : ndarray
        Numerical eigenvalues, ascending.
    exact : ndarray
        Closed-form eigenvalues of the same towers.
    families : tuple of Family
        Towers that entered the spectrum.
    self_adjoint : bool
        False if more than one tower was needed, i.e. the spectrum is not that
        of a single self-adjoint problem.
    residual : float
        max |lambda - lambda_exact| / max(1, |lambda_exact|).
    """

    eigenvalues: np.ndarray
    exact: np.ndarray
    families: tuple
    self_adjoint: bool
    residual: float
    method: Method
    grid_size: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "method": self.method.value,
            "grid_size": self.grid_size,
            "families": [f.value for f in self.families],
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "exact": [float(x) for x in self.exact],
            "self_adjoint": self.self_adjoint,
            "residual": self.residual,
        }


def admissible_towers(
    config: FluxConfig, m: int, boundary=Boundary.REGULAR_BOTH_ENDS
) -> list[RadialTower]:
    """Towers of angular momentum m whose class is admitted by the boundary."""
    boundary = Boundary(boundary)
    m_eff = config.effective_m(m)
    base_label = -m_eff if m_eff < 0 else 0
    entries = build_families(config, m, base_label)
    towers = {}
    for entry in entries:
        gamma = family_gamma(config, m, entry.family)
        if classify(gamma, q=config.q) not in ADMITTED[boundary]:
            continue
        jacobi = entry.descriptor.jacobi
        tower = RadialTower(
            config=config,
            m=m,
            family=entry.family,
            base_label=base_label,
            alpha=float(jacobi.alpha),
            beta=float(jacobi.beta),
            offset=entry.eigenvalue,
        )
        # the families coincide at integer flux
        towers.setdefault((tower.alpha, tower.beta, tower.offset), tower)
    if not towers:
        msg = f"No tower with m={m} is admitted by {boundary.value} for {config}."
        raise ValueError(msg)
    return list(towers.values())


def _theta_weight(theta: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    half = theta / 2
    return np.sin(half) ** (2 * alpha + 1) * np.cos(half) ** (2 * beta + 1)


def jacobi_fd_eigenvalues(
    alpha: float, beta: float, count: int, grid_size: int
) -> np.ndarray:
    """Lowest eigenvalues mu of -(S P')' = mu S P by finite volumes in theta.

    The cell masses integrate S with a 4-point Gauss-Legendre rule per cell, the
    fluxes use S at the interior faces.
    """
    h = np.pi / grid_size
    centers = h * (np.arange(grid_size) + 0.5)
    x, w = legendre.leggauss(4)
    points = centers[:, None] + 0.5 * h * x[None, :]
    mass = 0.5 * h * (_theta_weight(points, alpha, beta) @ w)
    faces = h * np.arange(1, grid_size)
    flux = _theta_weight(faces, alpha, beta) / h

    diag = np.zeros(grid_size)
    diag[:-1] += flux
    diag[1:] += flux
    diag /= mass
    off = -flux / np.sqrt(mass[:-1] * mass[1:])
    return linalg.eigh_tridiagonal(
        diag, off, eigvals_only=True, select="i", select_range=(0, count - 1)
    )


def sturm_liouville_eigen(
    config: FluxConfig,
    m: int,
    count: int,
    spec: Optional[DiscretizationSpec] = None,
    tol: Optional[float] = None,
) -> SturmLiouvilleResult:
    """Lowest eigenvalues of the radial problem with angular momentum m.

    Parameters
    ----------
    config : FluxConfig
    m : int
        Physical angular momentum.
    count : int
        Number of eigenvalues.
    spec : DiscretizationSpec or None
        Method and boundary behaviour. Defaults to finite differences with the
        configured grid size and RegularBothEnds.
    tol : float or None
        If given, a residual above tol times the configured tolerance scale raises.

    Returns
    -------
    result : SturmLiouvilleResult

    Raises
    ------
    ConvergenceError
        If the residual exceeds the tolerance.

    Examples
    --------
    >>> result = sturm_liouville_eigen(FluxConfig(1), 0, 4)
    >>> bool(np.allclose(result.eigenvalues, [0, 2, 6, 12], atol=1e-3))
    True
    """
    if spec is None:
        spec = DiscretizationSpec()
    if not (isinstance(count, int) and count >= 1):
        msg = f"Argument count must be a positive integer, got {count}."
        raise ValueError(msg)
    towers = admissible_towers(config, m, spec.boundary)

    if spec.method is Method.FINITE_DIFFERENCE_THETA:
        grid_size = spec.resolved_grid_size
        if count > grid_size:
            msg = f"Argument count={count} exceeds the grid capacity {grid_size}."
            raise ValueError(msg)
        logger.debug("Finite differences for m=%s on %d cells.", m, grid_size)
        values = np.concatenate(
            [
                float(t.offset)
                + jacobi_fd_eigenvalues(t.alpha, t.beta, count, grid_size)
                for t in towers
            ]
        )
    else:
        grid_size = None
        if spec.basis_size < count + 5:
            msg = (
                f"The basis_size={spec.basis_size} must be at least count + 5 = "
                f"{count + 5}."
            )
            raise ValueError(msg)
        basis = [e for t in towers for e in t.members(spec.basis_size)]
        values = np.real(rayleigh_ritz_eigen(config, m, basis).eigenvalues)

    eigenvalues = np.sort(values)[:count]
    exact = np.sort(
        np.array([float(x) for t in towers for x in t.exact_eigenvalues(count)])
    )[:count]
    residual = float(
        np.max(np.abs(eigenvalues - exact) / np.maximum(1, np.abs(exact)))
    )
    result = SturmLiouvilleResult(
        eigenvalues=eigenvalues,
        exact=exact,
        families=tuple(t.family for t in towers),
        self_adjoint=len(towers) == 1,
        residual=residual,
        method=spec.method,
        grid_size=grid_size,
    )
    if tol is not None and residual > scaled_tolerance(tol):
        msg = (
            f"The {spec.method.value} eigenvalues for m={m} deviate by {residual:.3g} "
            f"from the closed form, tolerance {scaled_tolerance(tol):.3g}."
        )
        raise ConvergenceError(msg, residual)
    return result
