from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Union

import numpy as np
import numpy.typing as npt
from numpy.polynomial import legendre

Exponent = Union[int, float, Fraction]


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Radial function sampled at nodes in (-1, 1) for fixed angular momentum m.

    The represented function is e^{i m phi} (1-z)^a (1+z)^b s(z), where s is the
    polynomial interpolant of the samples.

    Parameters
    ----------
    m : int
        Angular momentum.
    nodes : ndarray of shape (n_nodes,)
        Sample positions, strictly inside (-1, 1).
    samples : ndarray of shape (n_nodes,)
        Complex values of the smooth part s at the nodes.
    a_exp, b_exp : int, float or Fraction
        Endpoint exponents factored out of the samples.
    """

    m: int
    nodes: np.ndarray
    samples: np.ndarray
    a_exp: Exponent = 0
    b_exp: Exponent = 0
    max_degree: int = field(default=64, compare=False)

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        samples = np.asarray(self.samples, dtype=complex)
        if nodes.ndim != 1 or nodes.shape != samples.shape:
            msg = (
                "The nodes and samples must be 1-dimensional arrays of equal length, "
                f"got shapes {nodes.shape} and {samples.shape}."
            )
            raise ValueError(msg)
        if np.any(np.abs(nodes) >= 1):
            msg = "All nodes of a GridFunction must lie in the open interval (-1, 1)."
            raise ValueError(msg)
        if not np.all(np.isfinite(samples)):
            msg = "The samples of a GridFunction must be finite."
            raise ValueError(msg)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "samples", samples)

    @cached_property
    def legendre_coefficients(self) -> np.ndarray:
        """Legendre series of the smooth part, least squares for many nodes."""
        deg = min(self.nodes.shape[0] - 1, self.max_degree)
        vander = legendre.legvander(self.nodes, deg)
        coef, *_ = np.linalg.lstsq(vander, self.samples, rcond=None)
        return coef

    def _same_nodes(self, z: np.ndarray) -> bool:
        return z.shape == self.nodes.shape and np.array_equal(z, self.nodes)

    def smooth(self, z: npt.ArrayLike, derivative: int = 0) -> np.ndarray:
        """Smooth part s(z) or its derivative, exact samples at the own nodes."""
        z = np.asarray(z, dtype=float)
        if derivative == 0 and self._same_nodes(z):
            return self.samples
        coef = self.legendre_coefficients
        if derivative > 0:
            coef = legendre.legder(coef, derivative)
        return legendre.legval(z, coef)

    def evaluate(self, z: npt.ArrayLike, phi: float = 0.0) -> np.ndarray:
        """Full value e^{i m phi} (1-z)^a (1+z)^b s(z) at z in (-1, 1)."""
        z = np.asarray(z, dtype=float)
        radial = (1 - z) ** float(self.a_exp) * (1 + z) ** float(self.b_exp)
        return np.exp(1j * self.m * phi) * radial * self.smooth(z)

    def scale(self, factor: complex) -> "GridFunction":
        return GridFunction(
            self.m,
            self.nodes,
            factor * self.samples,
            self.a_exp,
            self.b_exp,
            max_degree=self.max_degree,
        )
