"""Supercharges Q and Qbar acting on closed-form modes and on grid functions.

Q maps the sector F=0 into F=1 and Qbar maps F=1 back into F=0. On the radial
factor F of wbar^m F both act as

    -i [(1+z) F'(z) + kappa F]

with the effective m and kappa of the input sector, while the angular momentum is
raised (Q) or lowered (Qbar) by one. The Grassmann factor only enters through the
sector tag.
"""

import logging
from fractions import Fraction
from typing import NamedTuple, Optional, Union

import numpy as np

from monopole_spectra._config import resolve_quad_points
from monopole_spectra._exceptions import SectorMismatchError
from monopole_spectra.modes import (
    FluxConfig,
    ModeDescriptor,
    SpectrumEntry,
    radial_part,
)
from monopole_spectra.modes.descriptors import _make_entry
from monopole_spectra.quadrature import GridFunction, gauss_jacobi_rule
from monopole_spectra.specialfn import (
    JacobiSpec,
    derivative_identity,
    weighted_derivative_alpha,
    weighted_derivative_beta,
    weighted_derivative_both,
)

from ._radial import f_exponents, smooth_derivatives
from .hamiltonian import apply_hamiltonian

logger = logging.getLogger(__name__)


class SusyResiduals(NamedTuple):
    """Max-norm residuals of the supersymmetry algebra on one state."""

    q_squared: float
    qbar_squared: float
    anticommutator: float


def _bracket_image(d: ModeDescriptor):
    """Coefficient c and (A', B', jacobi') of (1+z) F' + kappa F.

    The bracket equals c (1-z)^A' (1+z)^B' P'(z) whenever A is 0 or alpha and
    B + kappa is 0 or beta.
    """
    config = d.config
    m_eff = config.effective_m(d.m)
    kappa = config.effective_kappa
    A, B = f_exponents(d.a_exp, d.b_exp, m_eff)
    spec = d.jacobi
    at_one = A == 0
    at_minus_one = B + kappa == 0
    if at_one and at_minus_one:
        c, jacobi = derivative_identity(spec)
        if jacobi is None:
            jacobi = JacobiSpec(0, spec.alpha + 1, spec.beta + 1)
        return c, A, B + 1, jacobi
    if at_one and B + kappa == spec.beta:
        c, jacobi = weighted_derivative_beta(spec)
        return c, A, B, jacobi
    if A == spec.alpha and at_minus_one:
        c, jacobi = weighted_derivative_alpha(spec)
        return c, A - 1, B + 1, jacobi
    if A == spec.alpha and B + kappa == spec.beta:
        c, jacobi = weighted_derivative_both(spec)
        return c, A - 1, B, jacobi
    msg = (
        f"The supercharge image of the mode m={d.m}, a={d.a_exp}, b={d.b_exp}, "
        f"{spec} is not a single closed-form mode."
    )
    raise RuntimeError(msg)


def _apply_supercharge(entry: SpectrumEntry) -> SpectrumEntry:
    d = entry.descriptor
    config = d.config
    m_eff = config.effective_m(d.m)
    c, a_prime, b_prime, jacobi = _bracket_image(d)

    target = config.partner()
    m_target_eff = -(m_eff + 1)
    label = jacobi.n + (-m_target_eff if m_target_eff < 0 else 0)
    image = ModeDescriptor(
        m=target.effective_m(m_target_eff),
        family=d.family.other(),
        n=label,
        a_exp=a_prime + Fraction(m_eff + 1, 2),
        b_exp=b_prime - Fraction(m_eff + 1, 2),
        jacobi=jacobi,
        coeff=d.coeff * (-1j) * float(c),
        config=target,
    )
    if image.is_zero:
        logger.debug("Mode %s is annihilated by the supercharge.", entry.label)
    return _make_entry(image, entry.eigenvalue)


def apply_Q(entry: SpectrumEntry) -> SpectrumEntry:
    """Apply the supercharge Q to a mode of the sector F=0.

    The image is a single closed-form mode of the sector F=1 with m + 1, the
    other family and the same eigenvalue. Its exponent gamma and class are
    recomputed, zero modes give a zero descriptor.

    Raises
    ------
    SectorMismatchError
        If the entry is not in the sector F=0.

    Examples
    --------
    >>> from monopole_spectra.modes import FluxConfig, build_families
    >>> _, tilde = build_families(FluxConfig("1/2"), 0, 0)
    >>> image = apply_Q(tilde)
    >>> image.sector, image.m, image.gamma, image.norm_class.value
    (1, 1, Fraction(-1, 2), 'SingularNormalizable')
    >>> image.descriptor.coeff == -0.5j
    True
    """
    if entry.sector != 0:
        msg = f"Q acts on the sector F=0, got the mode {entry.label}."
        raise SectorMismatchError(msg)
    return _apply_supercharge(entry)


def apply_Qbar(entry: SpectrumEntry) -> SpectrumEntry:
    """Apply the supercharge Qbar to a mode of the sector F=1.

    The image is a single closed-form mode of the sector F=0 with m - 1.

    Raises
    ------
    SectorMismatchError
        If the entry is not in the sector F=1.
    """
    if entry.sector != 1:
        msg = f"Qbar acts on the sector F=1, got the mode {entry.label}."
        raise SectorMismatchError(msg)
    return _apply_supercharge(entry)


def _supercharge_grid(grid: GridFunction, config: FluxConfig) -> GridFunction:
    m_eff = config.effective_m(grid.m)
    kappa = config.effective_kappa
    A, B = f_exponents(grid.a_exp, grid.b_exp, m_eff)
    z = grid.nodes
    s, ds = smooth_derivatives(grid, z, order=1)
    kA, kB = float(A), float(B + kappa)
    # factor the zeros of the bracket at the endpoints into the exponents
    if A == 0 and B + kappa == 0:
        g, a_prime, b_prime = ds, A, B + 1
    elif A == 0:
        g, a_prime, b_prime = kB * s + (1 + z) * ds, A, B
    elif B + kappa == 0:
        g, a_prime, b_prime = -kA * s + (1 - z) * ds, A - 1, B + 1
    else:
        g = -kA * (1 + z) * s + kB * (1 - z) * s + (1 - z) * (1 + z) * ds
        a_prime, b_prime = A - 1, B
    target = config.partner()
    return GridFunction(
        target.effective_m(-(m_eff + 1)),
        z,
        -1j * g,
        a_prime + Fraction(m_eff + 1, 2),
        b_prime - Fraction(m_eff + 1, 2),
        max_degree=grid.max_degree,
    )


def apply_Q_grid(grid: GridFunction, config: FluxConfig) -> GridFunction:
    """Apply Q to a sampled state of the sector F=0 by spectral differentiation."""
    if config.sector != 0:
        msg = f"Q acts on the sector F=0, got the config {config}."
        raise SectorMismatchError(msg)
    return _supercharge_grid(grid, config)


def apply_Qbar_grid(grid: GridFunction, config: FluxConfig) -> GridFunction:
    """Apply Qbar to a sampled state of the sector F=1 by spectral differentiation."""
    if config.sector != 1:
        msg = f"Qbar acts on the sector F=1, got the config {config}."
        raise SectorMismatchError(msg)
    return _supercharge_grid(grid, config)


def _grading_residual(op, entry: SpectrumEntry) -> float:
    # the first application changes the sector, so the second one is rejected
    try:
        twice = op(op(entry))
    except SectorMismatchError:
        return 0.0
    return float(abs(twice.descriptor.coeff))


def susy_algebra_residuals(
    entry: Union[SpectrumEntry, ModeDescriptor], npoints: Optional[int] = None
) -> SusyResiduals:
    """Residuals of Q^2 = 0, Qbar^2 = 0 and {Q, Qbar} = H on a mode.

    Q^2 and Qbar^2 vanish by the fermion grading. The anticommutator reduces to
    Qbar Q on F=0 and to Q Qbar on F=1. Its residual is the max-norm of
    {Q, Qbar} psi - H psi on Gauss-Legendre nodes, relative to max(1, |H psi|).

    Examples
    --------
    >>> from monopole_spectra.modes import FluxConfig, build_families
    >>> plain, _ = build_families(FluxConfig(1), 0, 0)
    >>> susy_algebra_residuals(plain)
    SusyResiduals(q_squared=0.0, qbar_squared=0.0, anticommutator=0.0)
    """
    if isinstance(entry, ModeDescriptor):
        entry = _make_entry(entry, 0)
    if entry.sector == 0:
        both = apply_Qbar(apply_Q(entry))
    else:
        both = apply_Q(apply_Qbar(entry))
    z = gauss_jacobi_rule(resolve_quad_points(npoints)).nodes
    h_psi = apply_hamiltonian(entry, nodes=z).evaluate(z)
    diff = radial_part(both, z) - h_psi
    scale = max(1.0, float(np.max(np.abs(h_psi))))
    residual = float(np.max(np.abs(diff))) / scale
    return SusyResiduals(
        q_squared=_grading_residual(apply_Q, entry),
        qbar_squared=_grading_residual(apply_Qbar, entry),
        anticommutator=residual,
    )

