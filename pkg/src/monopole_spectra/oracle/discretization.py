from dataclasses import dataclass
from enum import Enum
from typing import Optional

from monopole_spectra._config import MIN_GRID_SIZE, resolve_grid_size


class Method(str, Enum):
    FINITE_DIFFERENCE_THETA = "FiniteDifferenceTheta"
    RAYLEIGH_RITZ = "RayleighRitz"


class Boundary(str, Enum):
    """Which towers of a sector m enter the numerical spectrum.

    - RegularBothEnds: the tower that is regular (or a section) at the puncture.
    - NormalizableOnly: every normalizable tower, singular ones included.
    """

    REGULAR_BOTH_ENDS = "RegularBothEnds"
    NORMALIZABLE_ONLY = "NormalizableOnly"


@dataclass(frozen=True)
class DiscretizationSpec:
    """Numerical method of the radial eigenvalue oracle.

    Parameters
    ----------
    method : Method or str
        Finite differences in theta = arccos z, or Rayleigh-Ritz on closed-form
        tower members.
    grid_size : int or None
        Number of cells of the finite difference grid, at least 32. If None, the
        configured `grid_size` is used.
    basis_size : int
        Number of basis functions per tower for Rayleigh-Ritz.
    boundary : Boundary or str
    """

    method: Method = Method.FINITE_DIFFERENCE_THETA
    grid_size: Optional[int] = None
    basis_size: int = 12
    boundary: Boundary = Boundary.REGULAR_BOTH_ENDS

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "boundary", Boundary(self.boundary))
        if self.grid_size is not None and not (
            isinstance(self.grid_size, int) and self.grid_size >= MIN_GRID_SIZE
        ):
            msg = (
                f"The grid_size must be an integer >= {MIN_GRID_SIZE}, got "
                f"{self.grid_size}."
            )
            raise ValueError(msg)
        if not (isinstance(self.basis_size, int) and self.basis_size >= 1):
            msg = f"The basis_size must be a positive integer, got {self.basis_size}."
            raise ValueError(msg)

    @property
    def resolved_grid_size(self) -> int:
        return resolve_grid_size(self.grid_size)
