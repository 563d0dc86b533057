"""The Hamiltonian in the z-representation and its matrix elements."""

import logging
from fractions import Fraction
from typing import Optional, Union

import numpy as np
import numpy.typing as npt

from monopole_spectra._config import resolve_quad_points
from monopole_spectra._exceptions import DivergentIntegralError, SectorMismatchError
from monopole_spectra.modes import (
    FluxConfig,
    ModeDescriptor,
    SpectrumEntry,
    canonical_form,
)
from monopole_spectra.quadrature import (
    GridFunction,
    gauss_jacobi_rule,
    integrate_product,
)
from monopole_spectra.specialfn import jacobi_eval

from ._radial import config_of, f_exponents, smooth_derivatives

logger = logging.getLogger(__name__)

StateLike = Union[SpectrumEntry, ModeDescriptor, GridFunction]


def _as_state(psi: StateLike) -> Union[ModeDescriptor, GridFunction]:
    if isinstance(psi, GridFunction):
        return psi
    return canonical_form(psi)


def hamiltonian_image_exponents(
    a_exp, b_exp, m_eff: int, kappa: Fraction
) -> tuple[Fraction, Fraction]:
    """Endpoint exponents of H psi for psi = (1-z)^a (1+z)^b s(z).

    H lowers an exponent by one unless the indicial factor of the endpoint
    vanishes: A(A+m) at z = 1 and (kappa+B)(kappa+m-B) at z = -1, with the
    exponents A, B of the radial factor F.
    """
    A, B = f_exponents(a_exp, b_exp, m_eff)
    a_img = a_exp if A * (A + m_eff) == 0 else a_exp - 1
    b_img = b_exp if (kappa + B) * (kappa + m_eff - B) == 0 else b_exp - 1
    return Fraction(a_img), Fraction(b_img)


def _radial_operator(p, dp, d2p, z, A, B, m, kappa):
    """D R, where R is the smooth part of H psi before the endpoint division."""
    one_m, one_p = 1 - z, 1 + z
    d = one_m * one_p
    tau = A * one_p - B * one_m
    return (
        -(d**2) * d2p
        + 2 * tau * d * dp
        - (tau**2 - A * one_p**2 - B * one_m**2) * p
        + 2 * (z + m) * (d * dp - tau * p)
        + (2 * kappa * (kappa + m) * one_m + kappa * (1 - kappa) * d) * p
    )


def apply_hamiltonian(
    psi: StateLike,
    config: Optional[FluxConfig] = None,
    *,
    nodes: Optional[npt.ArrayLike] = None,
    npoints: Optional[int] = None,
) -> GridFunction:
    r"""Apply the Hamiltonian in the z-representation.

    For \(\Psi = e^{im\phi} u^{m/2} F(z)\) the Hamiltonian acts on F as

    \[
    (z^2-1)F'' + 2(z+m)F' + \frac{2\kappa(\kappa+m)}{1+z}F + \kappa(1-\kappa)F,
    \]

    in the sector F=1 with q -> -q and m -> -m. Descriptors are taken in their
    canonical form and differentiated with the Jacobi derivative identity, grid
    functions spectrally. The endpoint exponents of the image are exact, see
    `hamiltonian_image_exponents`.

    Parameters
    ----------
    psi : SpectrumEntry, ModeDescriptor or GridFunction
        The state.
    config : FluxConfig or None
        Flux and sector. Required for grid functions, descriptors carry their own.
    nodes : array-like or None
        Sample positions of the image in (-1, 1). Defaults to the nodes of the grid
        function, for descriptors to the Gauss-Legendre nodes of `npoints`.
    npoints : int or None
        Number of default nodes. If None, the configured `quad_points` is used.

    Returns
    -------
    h_psi : GridFunction

    Examples
    --------
    >>> from monopole_spectra.modes import FluxConfig, build_families
    >>> plain, tilde = build_families(FluxConfig("1/2"), 0, 0)
    >>> h = apply_hamiltonian(tilde, npoints=8)
    >>> bool(np.allclose(h.samples, 0.5)), h.b_exp
    (True, Fraction(1, 4))
    >>> bool(np.allclose(apply_hamiltonian(plain, npoints=8).samples, 0))
    True
    """
    psi = _as_state(psi)
    config = config_of(psi, config)
    if nodes is None:
        if isinstance(psi, GridFunction):
            nodes = psi.nodes
        else:
            nodes = gauss_jacobi_rule(resolve_quad_points(npoints)).nodes
    z = np.asarray(nodes, dtype=float)
    if np.any(np.abs(z) >= 1):
        msg = "The Hamiltonian can only be evaluated in the open interval (-1, 1)."
        raise ValueError(msg)

    m_eff = config.effective_m(psi.m)
    kappa = config.effective_kappa
    a_img, b_img = hamiltonian_image_exponents(psi.a_exp, psi.b_exp, m_eff, kappa)
    max_degree = psi.max_degree if isinstance(psi, GridFunction) else 64
    if isinstance(psi, ModeDescriptor) and psi.is_zero:
        return GridFunction(psi.m, z, np.zeros_like(z), a_img, b_img, max_degree)

    A, B = f_exponents(psi.a_exp, psi.b_exp, m_eff)
    p, dp, d2p = smooth_derivatives(psi, z, order=2)
    r = _radial_operator(p, dp, d2p, z, float(A), float(B), m_eff, float(kappa))
    # divide by (1-z) and (1+z) where the exponent is kept
    if a_img == psi.a_exp:
        r = r / (1 - z)
    if b_img == psi.b_exp:
        r = r / (1 + z)
    return GridFunction(psi.m, z, r, a_img, b_img, max_degree=max_degree)


def apply_hamiltonian_u(descriptor: Union[SpectrumEntry, ModeDescriptor], u):
    r"""Hamiltonian acting on the radial factor F in the u-representation.

    With u = |w|^2 the radial equation reads

    \[
    -u(1+u)^2 F'' - (m+1)(1+u)^2 F' + \kappa^2 u F + \kappa m (1+u) F + \kappa F.
    \]

    The derivatives of F are obtained from the z-form by the chain rule with
    z = (1-u)/(1+u). This is a cross-check of
    [`apply_hamiltonian`][monopole_spectra.operators.apply_hamiltonian].

    Returns
    -------
    values : ndarray
        (H F)(u), the phase and u^{m/2} are not included.
    """
    d = canonical_form(descriptor)
    config = d.config
    u = np.asarray(u, dtype=float)
    m = config.effective_m(d.m)
    kappa = float(config.effective_kappa)
    A, B = (float(x) for x in f_exponents(d.a_exp, d.b_exp, m))

    z = (1 - u) / (1 + u)
    one_m, one_p = 1 - z, 1 + z
    dd = one_m * one_p
    tau = A * one_p - B * one_m
    p, dp, d2p = smooth_derivatives(d, z, order=2)
    s = one_m**A * one_p**B
    f = s * p
    f_z = s * (dp - tau * p / dd)
    f_zz = s * (
        d2p - 2 * tau * dp / dd + (tau**2 - A * one_p**2 - B * one_m**2) * p / dd**2
    )
    f_u = f_z * (-2 / (1 + u) ** 2)
    f_uu = f_zz * 4 / (1 + u) ** 4 + f_z * 4 / (1 + u) ** 3
    return (
        -u * (1 + u) ** 2 * f_uu
        - (m + 1) * (1 + u) ** 2 * f_u
        + kappa**2 * u * f
        + kappa * m * (1 + u) * f
        + kappa * f
    )


def hamiltonian_matrix_element(
    e1: Union[SpectrumEntry, ModeDescriptor],
    e2: Union[SpectrumEntry, ModeDescriptor],
    npoints: Optional[int] = None,
) -> complex:
    r"""Matrix element <e1|H|e2> with H applied to the ket numerically.

    The image H e2 is sampled at the Gauss-Jacobi nodes of the combined weight,
    no eigenvalue is substituted. Boundary terms thus show up in the difference
    to <e2|H|e1>.

    Raises
    ------
    DivergentIntegralError
        If a combined endpoint exponent is <= -1.
    SectorMismatchError
        If the modes belong to different sectors or fluxes.
    """
    d1, d2 = canonical_form(e1), canonical_form(e2)
    if d1.config != d2.config:
        msg = (
            "Matrix elements are only defined within one sector and flux, got "
            f"{d1.config} and {d2.config}."
        )
        raise SectorMismatchError(msg)
    if d1.m != d2.m or d1.is_zero or d2.is_zero:
        return 0j
    config = d2.config
    a_img, b_img = hamiltonian_image_exponents(
        d2.a_exp, d2.b_exp, config.effective_m(d2.m), config.effective_kappa
    )
    a_tot, b_tot = d1.a_exp + a_img, d1.b_exp + b_img
    if a_tot <= -1 or b_tot <= -1:
        raise DivergentIntegralError(a_tot, b_tot)
    rule = gauss_jacobi_rule(npoints, a_tot, b_tot)
    h2 = apply_hamiltonian(d2, nodes=rule.nodes)
    bra_coeff = np.conj(d1.coeff)
    integral = integrate_product(
        lambda z: bra_coeff * jacobi_eval(d1.jacobi, z),
        h2,
        a=d1.a_exp,
        b=d1.b_exp,
        npoints=npoints,
    )
    return complex(np.pi * integral)


def hermiticity_defect(
    e1: Union[SpectrumEntry, ModeDescriptor],
    e2: Union[SpectrumEntry, ModeDescriptor],
    npoints: Optional[int] = None,
) -> complex:
    """Defect <e1|H|e2> - <e2|H|e1> of the hermiticity of H.

    Both matrix elements are computed by `hamiltonian_matrix_element`.
    On regular modes the defect vanishes, for modes singular at the puncture it
    measures the boundary term there.

    Examples
    --------
    >>> from monopole_spectra.modes import FluxConfig, build_families
    >>> plain, tilde = build_families(FluxConfig("1/2"), 0, 0)
    >>> d = hermiticity_defect(tilde, plain)
    >>> bool(abs(d + np.pi) < 1e-10)
    True
    """
    h12 = hamiltonian_matrix_element(e1, e2, npoints=npoints)
    h21 = hamiltonian_matrix_element(e2, e1, npoints=npoints)
    defect = h12 - np.conj(h21)
    logger.debug("Hermiticity defect %s.", defect)
    return complex(defect)
