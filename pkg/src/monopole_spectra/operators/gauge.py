from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt

from monopole_spectra.quadrature import gauss_jacobi_rule


@dataclass(frozen=True)
class GaugeField:
    r"""Monopole field of flux q on the sphere in the stereographic coordinate w.

    The potential is derived from \(G = -\frac{q}{2}\ln(1+\bar w w)\) as
    \(A_w = -i\partial G\) and \(A_{\bar w} = i\bar\partial G\). The field
    strength \(F_{w\bar w} = 2i\partial\bar\partial G = -iq/(1+\bar w w)^2\) has
    the constant area density \((1+\bar w w)^2 F_{w\bar w} = -iq\).

    Parameters
    ----------
    q : float
        Flux in units of 2 pi.
    """

    q: float

    def kahler_potential(self, w: npt.ArrayLike) -> np.ndarray:
        """G = -(q/2) ln(1 + |w|^2)."""
        u = np.abs(np.asarray(w)) ** 2
        return -0.5 * self.q * np.log1p(u)

    def potential(self, w: npt.ArrayLike) -> tuple[np.ndarray, np.ndarray]:
        """Components (A_w, A_wbar) of the gauge potential."""
        w = np.asarray(w, dtype=complex)
        u = np.abs(w) ** 2
        a_w = 0.5j * self.q * np.conj(w) / (1 + u)
        return a_w, np.conj(a_w)

    def field_strength(self, w: npt.ArrayLike) -> np.ndarray:
        """F_{w wbar} = -i q / (1 + |w|^2)^2."""
        u = np.abs(np.asarray(w)) ** 2
        return -1j * self.q / (1 + u) ** 2

    def area_density(self, w: npt.ArrayLike) -> np.ndarray:
        """(1 + |w|^2)^2 F_{w wbar}, constant -i q."""
        u = np.abs(np.asarray(w)) ** 2
        return (1 + u) ** 2 * self.field_strength(w)

    def flux_density(self, w: npt.ArrayLike) -> np.ndarray:
        """Real density 2i F_{w wbar} = 2q / (1 + |w|^2)^2 with respect to dx dy."""
        return (2j * self.field_strength(w)).real


def flux_integral(q: float, npoints: Optional[int] = None) -> float:
    """Flux (1/2pi) times the integral of the field density over the sphere.

    The density is integrated in z = (1-u)/(1+u) with dx dy = dphi du / 2 and
    |du/dz| = 2/(1+z)^2, the phi integral gives 2 pi.

    Examples
    --------
    >>> round(flux_integral(0.5), 12)
    0.5
    """
    rule = gauss_jacobi_rule(npoints)
    z = rule.nodes
    w = np.sqrt((1 - z) / (1 + z))
    density = GaugeField(float(q)).flux_density(w)
    return float(rule.integrate(density / (1 + z) ** 2))
