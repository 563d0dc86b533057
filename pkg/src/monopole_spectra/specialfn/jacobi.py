"""Jacobi polynomials with arbitrary real parameters."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Integral, Real
from typing import NamedTuple, Optional, Union

import numpy as np
import numpy.typing as npt
from scipy import special

from monopole_spectra._exceptions import JacobiRelationError
from monopole_spectra._utils.exact import is_integer

logger = logging.getLogger(__name__)

Param = Union[int, float, Fraction]


@dataclass(frozen=True)
class JacobiSpec:
    """Degree and parameters of a Jacobi polynomial P_n^{alpha, beta}.

    Parameters
    ----------
    n : int
        Nonnegative degree.
    alpha : int, float or Fraction
        Parameter of the (1 - z) weight. Values <= -1 are allowed for evaluation.
    beta : int, float or Fraction
        Parameter of the (1 + z) weight. Values <= -1 are allowed for evaluation.
    """

    n: int
    alpha: Param
    beta: Param

    def __post_init__(self):
        if not isinstance(self.n, Integral) or isinstance(self.n, bool) or self.n < 0:
            msg = f"The degree n must be a nonnegative integer, got {self.n}."
            raise ValueError(msg)
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if not isinstance(value, Real) or not np.isfinite(float(value)):
                msg = f"The parameter {name} must be a finite real number, got {value}."
                raise ValueError(msg)


def generalized_binomial(x: Param, k: int) -> Param:
    """Generalized binomial coefficient C(x, k) for real x and integer k >= 0.

    Computed as the falling factorial x (x-1) ... (x-k+1) / k!, which has no poles
    at negative integer x. Exact for int and Fraction input.

    Examples
    --------
    >>> generalized_binomial(5, 2)
    Fraction(10, 1)
    >>> generalized_binomial(Fraction(-1, 2), 2)
    Fraction(3, 8)
    >>> generalized_binomial(-3, 2)
    Fraction(6, 1)
    """
    if k < 0:
        msg = f"Argument k must be a nonnegative integer, got {k}."
        raise ValueError(msg)
    if isinstance(x, (Integral, Fraction)):
        result = Fraction(1)
        for i in range(k):
            result *= Fraction(x) - i
        return result / factorial(k)
    result = 1.0
    for i in range(k):
        result *= float(x) - i
    return result / factorial(k)


def _is_zero(x) -> bool:
    if isinstance(x, (Integral, Fraction)):
        return x == 0
    return abs(float(x)) < 1e-13


def _recurrence_is_degenerate(spec: JacobiSpec) -> bool:
    """Return True if a leading recurrence coefficient vanishes for k = 2..n."""
    apb = spec.alpha + spec.beta
    return any(
        _is_zero(k + apb) or _is_zero(2 * k + apb - 2) for k in range(2, spec.n + 1)
    )


def _as_output(z_in, value):
    if np.ndim(z_in) == 0:
        return float(value)
    return value


def jacobi_eval(spec: JacobiSpec, z: npt.ArrayLike):
    """Evaluate the Jacobi polynomial P_n^{alpha, beta}(z).

    The standard three-term recurrence in the degree is used. On the parameter set
    where a leading recurrence coefficient vanishes, the explicit sum
    [`jacobi_eval_sum`][monopole_spectra.specialfn.jacobi_eval_sum] is used instead.

    Parameters
    ----------
    spec : JacobiSpec
        Degree and parameters.
    z : float or array-like
        Evaluation points, also outside of [-1, 1].

    Returns
    -------
    value : float or ndarray
        P_n^{alpha, beta}(z), a float for scalar z.

    Examples
    --------
    >>> jacobi_eval(JacobiSpec(0, 0.3, -0.5), 0.7)
    1.0
    >>> jacobi_eval(JacobiSpec(2, 0, 0), 0.5)  # Legendre P_2
    -0.125
    """
    x = np.asarray(z, dtype=float)
    n = spec.n
    a, b = float(spec.alpha), float(spec.beta)
    if n == 0:
        return _as_output(z, np.ones_like(x))
    if n >= 2 and _recurrence_is_degenerate(spec):
        logger.debug("Degenerate recurrence for %s, using the explicit sum.", spec)
        return jacobi_eval_sum(spec, z)

    apb = a + b
    pn2 = np.ones_like(x)
    pn1 = 0.5 * (a - b + (apb + 2.0) * x)
    for k in range(2, n + 1):
        a1 = 2.0 * k * (k + apb) * (2.0 * k + apb - 2.0)
        a2 = (2.0 * k + apb - 1.0) * (a * a - b * b)
        a3 = (2.0 * k + apb - 2.0) * (2.0 * k + apb - 1.0) * (2.0 * k + apb)
        a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + apb)
        p = ((a2 + a3 * x) * pn1 - a4 * pn2) / a1
        pn2, pn1 = pn1, p
    if not np.all(np.isfinite(pn1)):
        msg = f"Overflow in the evaluation of the Jacobi polynomial {spec}."
        raise OverflowError(msg)
    return _as_output(z, pn1)


def jacobi_eval_sum(spec: JacobiSpec, z: npt.ArrayLike):
    r"""Evaluate P_n^{alpha, beta}(z) by its explicit finite sum.

    \[
    P_n^{\alpha,\beta}(z) = 2^{-n} \sum_{k=0}^{n} \binom{n+\alpha}{n-k}
    \binom{n+\beta}{k} (z-1)^k (z+1)^{n-k}
    \]

    The binomial coefficients are generalized binomials, see
    [`generalized_binomial`][monopole_spectra.specialfn.generalized_binomial].

    Examples
    --------
    >>> jacobi_eval_sum(JacobiSpec(1, 1, 1), 0.5)
    1.0
    """
    x = np.asarray(z, dtype=float)
    n = spec.n
    result = np.zeros_like(x)
    for k in range(n + 1):
        c = float(
            generalized_binomial(spec.alpha + n, n - k)
            * generalized_binomial(spec.beta + n, k)
        )
        if c != 0:
            result = result + c * (x - 1.0) ** k * (x + 1.0) ** (n - k)
    return _as_output(z, result / 2.0**n)


def jacobi_derivative(spec: JacobiSpec, z: npt.ArrayLike, order: int = 1):
    """Derivative d^k/dz^k P_n^{alpha, beta}(z).

    Uses d/dz P_n^{alpha, beta} = (n + alpha + beta + 1)/2 P_{n-1}^{alpha+1, beta+1}
    repeatedly.

    Parameters
    ----------
    spec : JacobiSpec
        Degree and parameters.
    z : float or array-like
        Evaluation points.
    order : int
        Order k >= 0 of the derivative.

    Examples
    --------
    >>> jacobi_derivative(JacobiSpec(1, 0.5, 0.5), 0.2)
    1.5
    """
    if order < 0:
        msg = f"Argument order must be a nonnegative integer, got {order}."
        raise ValueError(msg)
    x = np.asarray(z, dtype=float)
    if order > spec.n:
        return _as_output(z, np.zeros_like(x))
    coeff = 1.0
    for i in range(1, order + 1):
        coeff *= float(spec.n + spec.alpha + spec.beta + i) / 2.0
    lowered = JacobiSpec(spec.n - order, spec.alpha + order, spec.beta + order)
    return _as_output(z, coeff * np.asarray(jacobi_eval(lowered, x)))


def jacobi_endpoint_value(spec: JacobiSpec, endpoint: int = 1) -> Param:
    """Value at z = 1, C(n + alpha, n), or at z = -1, (-1)^n C(n + beta, n)."""
    if endpoint == 1:
        return generalized_binomial(spec.n + spec.alpha, spec.n)
    elif endpoint == -1:
        return (-1) ** spec.n * generalized_binomial(spec.n + spec.beta, spec.n)
    msg = f"Argument endpoint must be 1 or -1, got {endpoint}."
    raise ValueError(msg)


def jacobi_zero_order(spec: JacobiSpec, endpoint: int = -1) -> int:
    """Order of the zero of P_n^{alpha, beta} at z = -1 (or z = 1).

    At z = -1 a zero exists exactly if beta = -j is a negative integer with
    1 <= j <= n, and then it has order j. Likewise at z = 1 with alpha.

    Examples
    --------
    >>> jacobi_zero_order(JacobiSpec(3, 1, -2))
    2
    >>> jacobi_zero_order(JacobiSpec(1, 1, -2))
    0
    >>> jacobi_zero_order(JacobiSpec(2, Fraction(-1, 2), 1), endpoint=1)
    0
    """
    if endpoint not in (1, -1):
        msg = f"Argument endpoint must be 1 or -1, got {endpoint}."
        raise ValueError(msg)
    p = spec.beta if endpoint == -1 else spec.alpha
    if is_integer(p) and -spec.n <= p <= -1:
        return int(-p)
    return 0


# Weighted derivative identities. Each returns the coefficient c and the spec of the
# resulting polynomial, exact for exact parameters.


def derivative_identity(spec: JacobiSpec) -> tuple[Param, Optional[JacobiSpec]]:
    """d/dz P_n^{a,b} = (n+a+b+1)/2 P_{n-1}^{a+1,b+1}; (0, None) for n = 0."""
    if spec.n == 0:
        return 0, None
    coeff = (spec.n + spec.alpha + spec.beta + 1) / Fraction(2)
    return coeff, JacobiSpec(spec.n - 1, spec.alpha + 1, spec.beta + 1)


def weighted_derivative_beta(spec: JacobiSpec) -> tuple[Param, JacobiSpec]:
    """d/dz[(1+z)^b P_n^{a,b}] = (n+b) (1+z)^{b-1} P_n^{a+1,b-1}.

    Examples
    --------
    >>> weighted_derivative_beta(JacobiSpec(0, 1, Fraction(1, 2)))
    (Fraction(1, 2), JacobiSpec(n=0, alpha=2, beta=Fraction(-1, 2)))
    """
    return spec.n + spec.beta, JacobiSpec(spec.n, spec.alpha + 1, spec.beta - 1)


def weighted_derivative_alpha(spec: JacobiSpec) -> tuple[Param, JacobiSpec]:
    """d/dz[(1-z)^a P_n^{a,b}] = -(n+a) (1-z)^{a-1} P_n^{a-1,b+1}."""
    return -(spec.n + spec.alpha), JacobiSpec(spec.n, spec.alpha - 1, spec.beta + 1)


def weighted_derivative_both(spec: JacobiSpec) -> tuple[Param, JacobiSpec]:
    """d/dz[(1-z)^a (1+z)^b P_n^{a,b}].

    Equals -2(n+1) (1-z)^{a-1} (1+z)^{b-1} P_{n+1}^{a-1,b-1}.
    """
    return -2 * (spec.n + 1), JacobiSpec(spec.n + 1, spec.alpha - 1, spec.beta - 1)


def _reduction_ratio(degree: int, param, j: int):
    # prod_{i=1}^{j} (degree - j + param + i) / (degree - j + i)
    num = Fraction(1) if isinstance(param, (Integral, Fraction)) else 1.0
    den = 1
    for i in range(1, j + 1):
        num *= degree - j + param + i
        den *= degree - j + i
    return num / den


def reduce_negative_alpha(spec: JacobiSpec) -> tuple[Param, JacobiSpec]:
    """Absorb a negative integer alpha = -j into a factor (1 - z)^j.

    P_N^{-j, b} = c (1-z)^j P_{N-j}^{j, b} with
    c = (-1/2)^j prod_{i=1}^{j} (N - j + b + i) / (N - j + i).
    A vanishing c means that P_N^{-j, b} vanishes identically.

    Examples
    --------
    >>> reduce_negative_alpha(JacobiSpec(1, -1, 0))
    (Fraction(-1, 2), JacobiSpec(n=0, alpha=1, beta=0))
    """
    a = spec.alpha
    if not (is_integer(a) and a <= -1):
        msg = f"The parameter alpha must be a negative integer, got {a}."
        raise ValueError(msg)
    j = int(-a)
    if spec.n < j:
        msg = f"The degree n={spec.n} must be >= -alpha={j}."
        raise ValueError(msg)
    ratio = _reduction_ratio(spec.n, spec.beta, j)
    return Fraction(-1, 2) ** j * ratio, JacobiSpec(spec.n - j, j, spec.beta)


def reduce_negative_beta(spec: JacobiSpec) -> tuple[Param, JacobiSpec]:
    """Absorb a negative integer beta = -j into a factor (1 + z)^j.

    P_N^{a, -j} = c (1+z)^j P_{N-j}^{a, j} with
    c = (1/2)^j prod_{i=1}^{j} (N - j + a + i) / (N - j + i).

    Examples
    --------
    >>> reduce_negative_beta(JacobiSpec(1, 0, -1))
    (Fraction(1, 2), JacobiSpec(n=0, alpha=0, beta=1))
    """
    b = spec.beta
    if not (is_integer(b) and b <= -1):
        msg = f"The parameter beta must be a negative integer, got {b}."
        raise ValueError(msg)
    j = int(-b)
    if spec.n < j:
        msg = f"The degree n={spec.n} must be >= -beta={j}."
        raise ValueError(msg)
    ratio = _reduction_ratio(spec.n, spec.alpha, j)
    return Fraction(1, 2) ** j * ratio, JacobiSpec(spec.n - j, spec.alpha, j)


class RelationResiduals(NamedTuple):
    """Absolute residuals of the two integer-parameter relations.

    A residual is None if the relation does not apply to the given parameters.
    """

    first: Optional[float]
    second: Optional[float]


def _factorial(x) -> float:
    if is_integer(x) and x < 0:
        msg = f"Factorial of the negative integer {x} in a Jacobi relation."
        raise JacobiRelationError(msg)
    return float(special.gamma(float(x) + 1.0))


def _relation_factor(n: int, alpha, beta) -> float:
    # n! (n+a+b)! / ((n+a)! (n+b)!)
    return (
        _factorial(n)
        * _factorial(n + alpha + beta)
        / (_factorial(n + alpha) * _factorial(n + beta))
    )


def negative_param_relation_check(
    n: int, alpha: Param, beta: Param, z: float
) -> RelationResiduals:
    r"""Residuals of the relations for a negative integer Jacobi parameter.

    The two relations are

    \[
    P_{n+\alpha}^{-\alpha,\beta} = 2^{-\alpha} (z-1)^\alpha
    \frac{n! (n+\alpha+\beta)!}{(n+\alpha)! (n+\beta)!} P_n^{\alpha,\beta},
    \quad
    P_{n+\beta}^{\alpha,-\beta} = 2^{-\beta} (z+1)^\beta
    \frac{n! (n+\alpha+\beta)!}{(n+\alpha)! (n+\beta)!} P_n^{\alpha,\beta},
    \]

    the first for integer alpha >= 0, the second for integer beta >= 0. The
    factorials are continued by the Gamma function.

    Parameters
    ----------
    n : int
        Degree of the right hand side polynomial.
    alpha, beta : int, float or Fraction
        Parameters.
    z : float
        Evaluation point.

    Returns
    -------
    residuals : RelationResiduals
        |LHS - RHS| of the first and second relation, None where not applicable.

    Raises
    ------
    JacobiRelationError
        If a factorial argument is a negative integer.

    Examples
    --------
    >>> r = negative_param_relation_check(0, 1, 0, 0.9)
    >>> r.first < 1e-12 and r.second < 1e-12
    True
    """
    first = second = None
    rhs_poly = None
    if is_integer(alpha) and alpha >= 0:
        al = int(alpha)
        factor = _relation_factor(n, al, beta)
        rhs_poly = jacobi_eval(JacobiSpec(n, al, beta), z)
        lhs = jacobi_eval(JacobiSpec(n + al, -al, beta), z)
        rhs = 2.0**-al * (z - 1.0) ** al * factor * rhs_poly
        first = abs(lhs - rhs)
    if is_integer(beta) and beta >= 0:
        be = int(beta)
        factor = _relation_factor(n, alpha, be)
        if rhs_poly is None:
            rhs_poly = jacobi_eval(JacobiSpec(n, alpha, be), z)
        lhs = jacobi_eval(JacobiSpec(n + be, alpha, -be), z)
        rhs = 2.0**-be * (z + 1.0) ** be * factor * rhs_poly
        second = abs(lhs - rhs)
    return RelationResiduals(first, second)
