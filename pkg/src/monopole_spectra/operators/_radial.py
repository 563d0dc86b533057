"""Shared pieces of the radial operators.

A mode e^{i m phi} (1-z)^a (1+z)^b P(z) is written as wbar^m F with the angular
factor u^{m/2} split off, F = (1-z)^A (1+z)^B P, A = a - m/2 and B = b + m/2. In
the sector F=1 all formulas take the effective m and kappa of the configuration.
"""

from fractions import Fraction

import numpy as np

from monopole_spectra._utils.exact import as_fraction
from monopole_spectra.modes import FluxConfig, ModeDescriptor
from monopole_spectra.quadrature import GridFunction
from monopole_spectra.specialfn import jacobi_derivative


def f_exponents(a_exp, b_exp, m_eff: int) -> tuple[Fraction, Fraction]:
    """Exponents (A, B) of the radial factor F."""
    half_m = Fraction(m_eff, 2)
    return as_fraction(a_exp) - half_m, as_fraction(b_exp) + half_m


def smooth_derivatives(psi, z: np.ndarray, order: int = 2) -> list[np.ndarray]:
    """Smooth part of a descriptor or grid function and its derivatives at z."""
    if isinstance(psi, GridFunction):
        return [
            np.asarray(psi.smooth(z, derivative=k), dtype=complex)
            for k in range(order + 1)
        ]
    return [
        psi.coeff * np.asarray(jacobi_derivative(psi.jacobi, z, order=k))
        for k in range(order + 1)
    ]


def config_of(psi, config) -> FluxConfig:
    if isinstance(psi, ModeDescriptor):
        if config is not None and config != psi.config:
            msg = (
                f"The config {config} differs from the config of the mode "
                f"{psi.config}."
            )
            raise ValueError(msg)
        return psi.config
    if config is None:
        msg = "Argument config is required for a GridFunction."
        raise ValueError(msg)
    return config
