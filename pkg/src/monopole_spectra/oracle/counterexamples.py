"""Two small systems whose spectra lose a symmetry at a singular point.

- The radial Laplacian on S^3 has the singular eigenfunction sqrt(f),
  f = 1 + r^2/4, with eigenvalue -3/4, not orthogonal to the constant.
- The bosonic sector of Witten's model with superpotential W' = -omega x + 1/x
  has a ground state of negative energy unless Psi(0) = 0 is imposed.
"""

import logging
from dataclasses import asdict, dataclass

import numpy as np
from numpy.polynomial import Chebyshev
from scipy import linalg

from monopole_spectra.quadrature import gauss_jacobi_rule

logger = logging.getLogger(__name__)

S3_EIGENVALUE = -0.75
# window of cos(chi) in which the singular state is interpolated
S3_WINDOW = (-0.5, 1.0)
GAUSSIAN_NOTE = (
    "The stated ground state exp(-omega^2 x^2/2) coincides with the oscillator "
    "ground state exp(-omega x^2/2) only for omega = 1. The energies are those of "
    "the latter."
)


@dataclass(frozen=True)
class S3LaplacianReport:
    """Checks of the singular eigenfunction of the S^3 Laplacian.

    Attributes
    ----------
    grid_size : int
    eigenvalue : float
        Rayleigh quotient of H Psi_2 on the grid.
    residual : float
        max |H Psi_2 + 3/4 Psi_2| / max |Psi_2| on the grid.
    constant_residual : float
        max |H 1| on the grid.
    overlap : float
        <1|2> with the measure of S^3.
    defect : float
        <1|H|2> - <2|H|1> with H applied to the kets.
    substitution_defect : float
        The same difference with the eigenvalues substituted.
    """

    grid_size: int
    eigenvalue: float
    residual: float
    constant_residual: float
    overlap: float
    defect: float
    substitution_defect: float

    def to_dict(self) -> dict:
        return asdict(self)


def _s3_radius(zeta):
    """r = 2 tan(chi/2) for zeta = cos(chi)."""
    return 2 * np.sqrt((1 - zeta) / (1 + zeta))


def _s3_singular_state(zeta):
    """Psi_2 = sqrt(f) with the conformal factor f = 1 + r^2/4."""
    return np.sqrt(1 + _s3_radius(zeta) ** 2 / 4)


def _s3_hamiltonian(series: Chebyshev, zeta):
    """-Laplacian of S^3 on radial functions, -(1-zeta^2) d^2 + 3 zeta d."""
    return -(1 - zeta**2) * series.deriv(2)(zeta) + 3 * zeta * series.deriv(1)(zeta)


def _s3_power_image(coeff: float, power: float, zeta):
    """H applied to coeff (1+zeta)^power, in closed form."""
    return coeff * (
        -(1 - zeta) * power * (power - 1) * (1 + zeta) ** (power - 1)
        + 3 * zeta * power * (1 + zeta) ** (power - 1)
    )


def _s3_integral(values_times_root, npoints: int = 64) -> float:
    """4 pi int (1-zeta^2)^(1/2) g, given (1+zeta)^(1/2) g at the rule nodes."""
    rule = gauss_jacobi_rule(npoints, 0.5, 0)
    return float(4 * np.pi * rule.integrate(values_times_root(rule.nodes)))


def s3_laplacian_check(grid_size: int = 256) -> S3LaplacianReport:
    """Verify the singular eigenstate of the radial Laplacian on S^3.

    The compactified radius r = 2 tan(chi/2) maps chi in (0, pi) onto [0, inf),
    the grid consists of the cell centers of grid_size cells in chi. Psi_2 is
    interpolated by a Chebyshev series in zeta = cos(chi) away from the
    singular point and differentiated spectrally.

    Examples
    --------
    >>> report = s3_laplacian_check()
    >>> round(report.eigenvalue, 6), round(report.defect / np.pi, 6)
    (-0.75, -8.0)
    """
    if not (isinstance(grid_size, int) and grid_size >= 256):
        msg = f"Argument grid_size must be an integer >= 256, got {grid_size}."
        raise ValueError(msg)
    chi = np.pi * (np.arange(grid_size) + 0.5) / grid_size
    zeta = np.cos(chi)
    zeta = zeta[(zeta >= S3_WINDOW[0]) & (zeta <= S3_WINDOW[1])]

    series = Chebyshev.interpolate(_s3_singular_state, 48, domain=list(S3_WINDOW))
    psi = _s3_singular_state(zeta)
    h_psi = _s3_hamiltonian(series, zeta)
    eigenvalue = float(np.dot(h_psi, psi) / np.dot(psi, psi))
    residual = float(np.max(np.abs(h_psi - S3_EIGENVALUE * psi)) / np.max(psi))
    constant = Chebyshev.interpolate(np.ones_like, 2, domain=list(S3_WINDOW))
    constant_residual = float(np.max(np.abs(_s3_hamiltonian(constant, zeta))))

    # Psi_2 = sqrt(2) (1+zeta)^(-1/2), Psi_1 = 1
    root2 = np.sqrt(2)
    overlap = _s3_integral(lambda z: np.full_like(z, root2))
    h12 = _s3_integral(lambda z: np.sqrt(1 + z) * _s3_power_image(root2, -0.5, z))
    h21 = _s3_integral(lambda z: root2 * _s3_power_image(1.0, 0.0, z))
    report = S3LaplacianReport(
        grid_size=grid_size,
        eigenvalue=eigenvalue,
        residual=residual,
        constant_residual=constant_residual,
        overlap=overlap,
        defect=h12 - h21,
        # lambda_1 = 0
        substitution_defect=S3_EIGENVALUE * overlap,
    )
    logger.debug("S3 check: %s", report)
    return report


@dataclass(frozen=True)
class WittenReport:
    """Ground states of the bosonic sector of Witten's model.

    Attributes
    ----------
    omega : float
    npoints : int
        Points of the sinc grid on the full line.
    ground_energy : float
        Lowest eigenvalue on the full line, -omega.
    restricted_ground_energy : float
        Lowest eigenvalue with Psi(0) = 0, zero.
    overlap_oscillator : float
        |<Psi_0|exp(-omega x^2/2)>| of normalized functions.
    overlap_stated : float
        |<Psi_0|exp(-omega^2 x^2/2)>| of normalized functions.
    restricted_overlap : float
        |<Psi_0'|x exp(-omega x^2/2)>| for the restricted ground state.
    note : str
    """

    omega: float
    npoints: int
    ground_energy: float
    restricted_ground_energy: float
    overlap_oscillator: float
    overlap_stated: float
    restricted_overlap: float
    note: str = GAUSSIAN_NOTE

    def to_dict(self) -> dict:
        return asdict(self)


def _sinc_kinetic(k: np.ndarray, dx: float) -> np.ndarray:
    """Kinetic matrix elements p^2/2 of the sinc basis for index differences k."""
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    k_safe = np.where(k == 0, 1, k)
    values = np.where(k == 0, np.pi**2 / 3, 2 * sign / k_safe**2)
    return values / (2 * dx**2)


def _overlap(v: np.ndarray, g: np.ndarray) -> float:
    return float(abs(np.dot(v, g)) / (np.linalg.norm(v) * np.linalg.norm(g)))


def witten_sqm_check(omega: float = 1.0, npoints: int = 401) -> WittenReport:
    """Ground energies of H_B = p^2/2 + omega^2 x^2/2 - 3 omega/2.

    H_B is discretized by the sinc basis on [-L, L], L = 10/sqrt(omega). The
    restriction Psi(0) = 0 keeps the odd functions, i.e. the half-line basis
    with the kinetic elements T(i-j) - T(i+j).

    Parameters
    ----------
    omega : float
        Oscillator frequency, > 0.
    npoints : int
        Odd number of grid points on the full line, >= 33.

    Returns
    -------
    report : WittenReport

    Examples
    --------
    >>> report = witten_sqm_check(1.0)
    >>> e0, e0_restricted = report.ground_energy, report.restricted_ground_energy
    >>> abs(e0 + 1) < 1e-6, abs(e0_restricted) < 1e-6
    (True, True)
    """
    if not omega > 0:
        msg = f"Argument omega must be > 0, got {omega}."
        raise ValueError(msg)
    if not (isinstance(npoints, int) and npoints >= 33 and npoints % 2 == 1):
        msg = f"Argument npoints must be an odd integer >= 33, got {npoints}."
        raise ValueError(msg)
    omega = float(omega)
    half_width = 10 / np.sqrt(omega)
    x = np.linspace(-half_width, half_width, npoints)
    dx = x[1] - x[0]
    shift = -1.5 * omega

    idx = np.arange(npoints)
    ham = _sinc_kinetic(idx[:, None] - idx[None, :], dx)
    ham += np.diag(0.5 * omega**2 * x**2 + shift)
    energy, vectors = linalg.eigh(ham, subset_by_index=[0, 0])
    ground = vectors[:, 0]

    i = np.arange(1, (npoints - 1) // 2 + 1)
    x_half = i * dx
    ham_half = _sinc_kinetic(i[:, None] - i[None, :], dx) - _sinc_kinetic(
        i[:, None] + i[None, :], dx
    )
    ham_half += np.diag(0.5 * omega**2 * x_half**2 + shift)
    energy_half, vectors_half = linalg.eigh(ham_half, subset_by_index=[0, 0])

    report = WittenReport(
        omega=omega,
        npoints=npoints,
        ground_energy=float(energy[0]),
        restricted_ground_energy=float(energy_half[0]),
        overlap_oscillator=_overlap(ground, np.exp(-omega * x**2 / 2)),
        overlap_stated=_overlap(ground, np.exp(-(omega**2) * x**2 / 2)),
        restricted_overlap=_overlap(
            vectors_half[:, 0], x_half * np.exp(-omega * x_half**2 / 2)
        ),
    )
    logger.debug("Witten check: %s", report)
    return report
