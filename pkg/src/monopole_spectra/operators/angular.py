from collections.abc import Sequence
from typing import Optional, Union

import numpy as np
import numpy.typing as npt

from monopole_spectra.modes import ModeDescriptor, SpectrumEntry, radial_part
from monopole_spectra.quadrature import GridFunction, gauss_jacobi_rule

Component = Union[SpectrumEntry, ModeDescriptor, GridFunction]


def _radial_samples(component: Component, z: np.ndarray) -> tuple[int, np.ndarray]:
    if isinstance(component, GridFunction):
        return component.m, component.evaluate(z)
    return component.m, np.asarray(radial_part(component, z))


def angular_momentum_check(
    state: Union[Component, Sequence[Component]],
    *,
    nodes: Optional[npt.ArrayLike] = None,
    nphi: Optional[int] = None,
) -> float:
    """Residual of L psi = m psi with L = wbar dbar - w d = -i d/dphi.

    A closed-form mode carries the phase e^{i m phi} and is an eigenfunction of L
    by construction, the residual is 0. Grid functions and superpositions, given
    as a sequence of components, are sampled on a (z, phi) grid and differentiated
    in phi by FFT. The residual is max|L psi - m psi| / max|psi| with the Rayleigh
    estimate m = <psi, L psi> / <psi, psi> on the grid.

    Parameters
    ----------
    state : mode, GridFunction or sequence of them
        A single state or the components of a superposition.
    nodes : array-like or None
        Radial sample positions, by default 16 Gauss-Legendre nodes or the nodes
        of the first grid function.
    nphi : int or None
        Number of equidistant phi samples, by default large enough to resolve all
        angular momenta of the components.

    Returns
    -------
    residual : float

    Examples
    --------
    >>> from monopole_spectra.modes import FluxConfig, build_families
    >>> plain, tilde = build_families(FluxConfig("1/2"), 0, 1)
    >>> angular_momentum_check(tilde)
    0.0
    >>> _, other = build_families(FluxConfig("1/2"), 1, 0)
    >>> angular_momentum_check([tilde, other]) > 0.1
    True
    """
    if isinstance(state, (SpectrumEntry, ModeDescriptor)):
        return 0.0
    components = [state] if isinstance(state, GridFunction) else list(state)
    if not components:
        msg = "The state must have at least one component."
        raise ValueError(msg)
    if nodes is None:
        grids = [c for c in components if isinstance(c, GridFunction)]
        nodes = grids[0].nodes if grids else gauss_jacobi_rule(16).nodes
    z = np.asarray(nodes, dtype=float)
    samples = [_radial_samples(c, z) for c in components]
    if nphi is None:
        nphi = max(16, 4 * (max(abs(m) for m, _ in samples) + 1))
    phi = 2 * np.pi * np.arange(nphi) / nphi
    psi = sum(np.outer(radial, np.exp(1j * m * phi)) for m, radial in samples)

    k = np.fft.fftfreq(nphi, d=1.0 / nphi)
    l_psi = np.fft.ifft(k * np.fft.fft(psi, axis=1), axis=1)
    norm2 = np.vdot(psi, psi).real
    if norm2 == 0:
        return 0.0
    m_est = np.vdot(psi, l_psi).real / norm2
    return float(np.max(np.abs(l_psi - m_est * psi)) / np.max(np.abs(psi)))
