from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from monopole_spectra._utils.exact import as_fraction, is_integer

FluxLike = Union[int, float, str, Fraction]


class Family(str, Enum):
    """The two solution families of the radial equation."""

    PLAIN = "Plain"
    TILDE = "Tilde"

    def other(self) -> "Family":
        return Family.TILDE if self is Family.PLAIN else Family.PLAIN


class NormClass(str, Enum):
    """Behaviour of a mode at the puncture z = -1, decided by its exponent gamma."""

    REGULAR = "Regular"
    SECTION = "Section"
    SINGULAR_NORMALIZABLE = "SingularNormalizable"
    NON_NORMALIZABLE = "NonNormalizable"


@dataclass(frozen=True)
class FluxConfig:
    """Flux q and fermion sector F of the problem.

    Parameters
    ----------
    q : int, float, str or Fraction
        Magnetic flux in units of 2 pi. Stored exactly, floats via their shortest
        decimal representation.
    sector : int
        Fermion number F, 0 or 1.

    Notes
    -----
    The sector F=1 is described by the formulas of F=0 with q -> -q and m -> -m.
    The `effective_*` attributes carry out this substitution, the descriptor of a
    mode always stores the physical angular momentum.

    Examples
    --------
    >>> config = FluxConfig(0.5)
    >>> config.kappa
    Fraction(1, 4)
    >>> FluxConfig("1/2", sector=1).effective_kappa
    Fraction(3, 4)
    """

    q: Fraction
    sector: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", as_fraction(self.q))
        if self.sector not in (0, 1) or isinstance(self.sector, bool):
            msg = f"The sector must be 0 or 1, got {self.sector}."
            raise ValueError(msg)

    @property
    def kappa(self) -> Fraction:
        """kappa = (1 - q) / 2."""
        return (1 - self.q) / 2

    @property
    def effective_q(self) -> Fraction:
        return self.q if self.sector == 0 else -self.q

    @property
    def effective_kappa(self) -> Fraction:
        return (1 - self.effective_q) / 2

    @property
    def is_integer_flux(self) -> bool:
        return is_integer(self.q)

    def effective_m(self, m: int) -> int:
        """Angular momentum entering the F=0 formulas."""
        return m if self.sector == 0 else -m

    def partner(self) -> "FluxConfig":
        """The same flux in the other sector."""
        return FluxConfig(self.q, 1 - self.sector)
