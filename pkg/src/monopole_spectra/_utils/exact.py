from fractions import Fraction
from numbers import Rational, Real
from typing import Union

ExactReal = Union[int, Fraction]


def as_fraction(x: Union[int, float, str, Fraction]) -> Fraction:
    """Convert x into an exact Fraction.

    Floats are converted via their shortest decimal representation, such that
    `as_fraction(2.7) == Fraction(27, 10)`.

    Examples
    --------
    >>> as_fraction(0.5)
    Fraction(1, 2)
    >>> as_fraction("2.7")
    Fraction(27, 10)
    """
    if isinstance(x, bool):
        msg = f"Expected a real number, got {x!r}."
        raise TypeError(msg)
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, Real):
        xf = float(x)
        if xf != xf or xf in (float("inf"), float("-inf")):
            msg = f"Expected a finite real number, got {x!r}."
            raise ValueError(msg)
        return Fraction(repr(xf))
    msg = f"Expected a real number, got {type(x)}."
    raise TypeError(msg)


def is_integer(x) -> bool:
    """Return True if the exact or float number x is an integer."""
    if isinstance(x, Fraction):
        return x.denominator == 1
    return float(x).is_integer()


def is_nonpositive_integer(x) -> bool:
    """Return True if x is one of 0, -1, -2, ..."""
    return is_integer(x) and x <= 0
