"""Rayleigh-Ritz on a basis of closed-form modes."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy import linalg

from monopole_spectra._exceptions import SectorMismatchError, SingularGramMatrixError
from monopole_spectra.modes import (
    FluxConfig,
    ModeDescriptor,
    SpectrumEntry,
    inner_product,
)
from monopole_spectra.modes.descriptors import _descriptor
from monopole_spectra.operators import hamiltonian_matrix_element

logger = logging.getLogger(__name__)

MAX_GRAM_CONDITION = 1e12


@dataclass(frozen=True)
class RitzResult:
    """Solution of the generalized eigenproblem H c = lambda S c.

    Attributes
    ----------
    eigenvalues : ndarray
        Sorted by real part. Real if all imaginary parts vanish to 1e-10.
    gram_matrix : ndarray
        S_ij = <i|j>.
    hamiltonian_matrix : ndarray
        H_ij = <i|H|j>, with H applied to the ket.
    asymmetry : float
        max |H - H^dagger|, nonzero when the basis leaves the domain on which H
        is hermitian.
    """

    eigenvalues: np.ndarray
    gram_matrix: np.ndarray
    hamiltonian_matrix: np.ndarray
    asymmetry: float

    @property
    def gram_is_diagonal(self) -> bool:
        off = self.gram_matrix - np.diag(np.diag(self.gram_matrix))
        scale = np.max(np.abs(np.diag(self.gram_matrix)))
        return bool(np.max(np.abs(off), initial=0) <= 1e-10 * scale)


def rayleigh_ritz_eigen(
    config: FluxConfig,
    m: int,
    basis: Sequence[Union[SpectrumEntry, ModeDescriptor]],
    npoints: Optional[int] = None,
) -> RitzResult:
    """Solve H c = lambda S c in the span of the basis.

    Parameters
    ----------
    config : FluxConfig
    m : int
        Angular momentum shared by all basis modes.
    basis : sequence of SpectrumEntry or ModeDescriptor
    npoints : int or None
        Quadrature nodes for the matrix elements.

    Returns
    -------
    result : RitzResult

    Raises
    ------
    SectorMismatchError
        If a basis mode has another config or angular momentum.
    SingularGramMatrixError
        If the condition number of S exceeds 1e12.

    Examples
    --------
    >>> from monopole_spectra.modes import build_families
    >>> config = FluxConfig("1/2")
    >>> plain, tilde = build_families(config, 0, 0)
    >>> result = rayleigh_ritz_eigen(config, 0, [plain, tilde])
    >>> bool(np.allclose(result.eigenvalues, [0, 0.5]))
    True
    >>> bool(np.isclose(result.asymmetry, np.pi))
    True
    """
    descriptors = [_descriptor(b) for b in basis]
    if len(descriptors) == 0:
        msg = "The basis must contain at least one mode."
        raise ValueError(msg)
    for d in descriptors:
        if d.config != config or d.m != m:
            msg = (
                f"All basis modes must have config {config} and m={m}, got "
                f"{d.config} and m={d.m}."
            )
            raise SectorMismatchError(msg)
        if d.is_zero:
            msg = "The basis must not contain zero modes."
            raise ValueError(msg)

    size = len(descriptors)
    gram = np.empty((size, size), dtype=complex)
    ham = np.empty((size, size), dtype=complex)
    for i, di in enumerate(descriptors):
        for j, dj in enumerate(descriptors):
            gram[i, j] = inner_product(di, dj, npoints=npoints)
            ham[i, j] = hamiltonian_matrix_element(di, dj, npoints=npoints)

    condition = np.linalg.cond(gram)
    if not condition <= MAX_GRAM_CONDITION:
        msg = (
            "The Gram matrix of the basis is singular, condition number "
            f"{condition:.3g} exceeds {MAX_GRAM_CONDITION:.0e}."
        )
        raise SingularGramMatrixError(msg)

    eigenvalues = linalg.eig(ham, gram, right=False)
    eigenvalues = eigenvalues[np.argsort(eigenvalues.real, kind="stable")]
    if np.all(np.abs(eigenvalues.imag) <= 1e-10 * np.maximum(1, np.abs(eigenvalues))):
        eigenvalues = eigenvalues.real
    asymmetry = float(np.max(np.abs(ham - ham.conj().T)))
    logger.debug(
        "Rayleigh-Ritz with %d modes, cond(S)=%.3g, asymmetry %.3g.",
        size,
        condition,
        asymmetry,
    )
    return RitzResult(
        eigenvalues=eigenvalues,
        gram_matrix=gram,
        hamiltonian_matrix=ham,
        asymmetry=asymmetry,
    )
