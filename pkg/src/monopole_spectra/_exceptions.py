"""Exceptions raised by monopole-spectra.

All domain errors are `ValueError` subclasses, such that callers catching invalid
input keep working.
"""

from typing import Optional


class DivergentAtNorthPoleOfMap(ValueError):
    """A negative-m mode diverges at z = 1, i.e. at w = 0.

    This happens for Jacobi degree n < |m|, where the factor (1 - z)^(m/2) cannot be
    absorbed by a zero of the Jacobi polynomial.
    """

    def __init__(self, m: int, n: int) -> None:
        self.m = m
        self.n = n
        msg = (
            f"The mode with m={m} and Jacobi degree n={n} diverges at z=1, "
            f"n must be >= |m|={abs(m)}."
        )
        super().__init__(msg)


class OutOfRange(ValueError):
    """Monopole harmonic labels outside the enumeration m = -n, ..., n + q - 1."""


class DivergentIntegralError(ValueError):
    """A weighted integral does not exist because an endpoint exponent is <= -1.

    Attributes
    ----------
    a, b : float
        The offending exponents of (1 - z) and (1 + z).
    """

    def __init__(self, a, b, msg: Optional[str] = None) -> None:
        self.a = a
        self.b = b
        if msg is None:
            msg = (
                "The integral of (1-z)^a (1+z)^b f(z) diverges, got exponents "
                f"a={float(a)}, b={float(b)}."
            )
        super().__init__(msg)


class SectorMismatchError(ValueError):
    """An operation received a state of the wrong fermion sector."""


class InadmissiblePolicyError(ValueError):
    """A Hilbert space policy or flux value not admissible for the request."""


class SingularGramMatrixError(ValueError):
    """The Gram matrix of a Rayleigh-Ritz basis is (numerically) singular."""


class JacobiRelationError(ValueError):
    """An integer-parameter Jacobi relation is evaluated at a factorial pole."""


class ConvergenceError(ValueError):
    """A numerical oracle did not reach its residual tolerance.

    Attributes
    ----------
    residual : float
        The residual that was achieved.
    """

    def __init__(self, msg: str, residual: float) -> None:
        self.residual = residual
        super().__init__(msg)
