"""Closed-form eigenmodes of the radial equation and their classification."""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from numbers import Integral
from typing import Optional, Union

import numpy as np
import numpy.typing as npt

from monopole_spectra._exceptions import (
    DivergentAtNorthPoleOfMap,
    DivergentIntegralError,
    SectorMismatchError,
)
from monopole_spectra._utils.exact import as_fraction, is_integer
from monopole_spectra.quadrature import GridFunction, integrate_product
from monopole_spectra.specialfn import (
    JacobiSpec,
    jacobi_eval,
    jacobi_zero_order,
    reduce_negative_alpha,
    reduce_negative_beta,
)

from .config import Family, FluxConfig, NormClass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModeDescriptor:
    """Exact closed-form mode coeff e^{i m phi} (1-z)^a (1+z)^b P_jacobi(z).

    Parameters
    ----------
    m : int
        Physical angular momentum, the phase is e^{i m phi} in both sectors.
    family : Family
        Solution family the mode was built from.
    n : int
        Label of the mode within its family. It fixes the eigenvalue and stays
        unchanged under the reduction identities, which only change `jacobi`.
    a_exp, b_exp : Fraction
        Exact exponents of (1 - z) and (1 + z).
    jacobi : JacobiSpec
        The polynomial factor.
    coeff : complex
        Overall coefficient. A zero coefficient represents the zero function.
    config : FluxConfig
        Flux and sector.
    """

    m: int
    family: Family
    n: int
    a_exp: Fraction
    b_exp: Fraction
    jacobi: JacobiSpec
    coeff: complex
    config: FluxConfig

    def __post_init__(self):
        object.__setattr__(self, "a_exp", as_fraction(self.a_exp))
        object.__setattr__(self, "b_exp", as_fraction(self.b_exp))
        object.__setattr__(self, "coeff", complex(self.coeff))

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    @property
    def sector(self) -> int:
        return self.config.sector

    def scale(self, factor: complex) -> "ModeDescriptor":
        return replace(self, coeff=self.coeff * complex(factor))

    def to_dict(self) -> dict:
        return {
            "sector": self.sector,
            "m": self.m,
            "family": self.family.value,
            "n": self.n,
            "a_exp": self.a_exp,
            "b_exp": self.b_exp,
            "jacobi": {
                "n": self.jacobi.n,
                "alpha": self.jacobi.alpha,
                "beta": self.jacobi.beta,
            },
            "coeff": self.coeff,
        }


@dataclass(frozen=True)
class SpectrumEntry:
    """One row of a spectrum table.

    Attributes
    ----------
    descriptor : ModeDescriptor
    eigenvalue : Fraction
        The exact eigenvalue lambda.
    gamma : Fraction
        Exponent of the decay |w|^(-gamma) at the puncture.
    norm_class : NormClass
        Classification of gamma, see [`classify`][monopole_spectra.modes.classify].
    """

    descriptor: ModeDescriptor
    eigenvalue: Fraction
    gamma: Fraction
    norm_class: NormClass

    @property
    def m(self) -> int:
        return self.descriptor.m

    @property
    def n(self) -> int:
        return self.descriptor.n

    @property
    def family(self) -> Family:
        return self.descriptor.family

    @property
    def sector(self) -> int:
        return self.descriptor.config.sector

    @property
    def config(self) -> FluxConfig:
        return self.descriptor.config

    @property
    def label(self) -> str:
        return f"F={self.sector} {self.family.value} m={self.m} n={self.n}"

    def to_dict(self) -> dict:
        return {
            "sector": self.sector,
            "m": self.m,
            "family": self.family.value,
            "n": self.n,
            "lambda": self.eigenvalue,
            "gamma": self.gamma,
            "class": self.norm_class.value,
        }


EntryLike = Union[SpectrumEntry, ModeDescriptor]


def _descriptor(x: EntryLike) -> ModeDescriptor:
    if isinstance(x, SpectrumEntry):
        return x.descriptor
    if isinstance(x, ModeDescriptor):
        return x
    msg = f"Expected a SpectrumEntry or ModeDescriptor, got {type(x)}."
    raise TypeError(msg)


def classify(gamma, *, q=None) -> NormClass:
    """Classify a mode by its exponent gamma at the puncture.

    gamma > 0 is Regular, gamma = 0 a Section, -1 < gamma < 0 SingularNormalizable
    and gamma <= -1 NonNormalizable.

    Parameters
    ----------
    gamma : int, float or Fraction
        The exponent, compared exactly.
    q : flux, optional
        If given and not an integer, gamma = 0 raises a RuntimeError: winding
        sections at the puncture only exist at integer flux.

    Examples
    --------
    >>> classify(Fraction(1, 2)).value
    'Regular'
    >>> classify(-1).value
    'NonNormalizable'
    """
    g = as_fraction(gamma)
    if g > 0:
        return NormClass.REGULAR
    if g == 0:
        if q is not None and not is_integer(as_fraction(q)):
            msg = f"Exponent gamma = 0 cannot occur at non-integer flux q={q}."
            raise RuntimeError(msg)
        return NormClass.SECTION
    if g > -1:
        return NormClass.SINGULAR_NORMALIZABLE
    return NormClass.NON_NORMALIZABLE


def gamma_exponent(entry: EntryLike) -> Fraction:
    """Exponent gamma of the behaviour |w|^(-gamma) at the puncture z = -1.

    gamma is twice the exponent of (1 + z), including the order of a zero of
    the Jacobi factor at z = -1.

    Examples
    --------
    >>> plain, tilde = build_families(FluxConfig("1/2"), 0, 0)
    >>> gamma_exponent(plain), gamma_exponent(tilde)
    (Fraction(-1, 2), Fraction(1, 2))
    """
    d = _descriptor(entry)
    return 2 * (d.b_exp + jacobi_zero_order(d.jacobi, -1))


def family_gamma(config: FluxConfig, m: int, family: Family) -> Fraction:
    """Closed form gamma of a family tower: q-1-m (Plain) and m+1-q (Tilde) in F=0.

    In F=1 the same formulas hold with q -> -q and m -> -m.
    """
    q_eff = config.effective_q
    m_eff = config.effective_m(m)
    if family is Family.PLAIN:
        return q_eff - 1 - m_eff
    return m_eff + 1 - q_eff


def family_eigenvalue(config: FluxConfig, m: int, n: int, family: Family) -> Fraction:
    """lambda = n(n+1-2 kappa) (Plain) or (m+n+2 kappa)(m+n+1) (Tilde)."""
    kappa = config.effective_kappa
    m_eff = config.effective_m(m)
    if family is Family.PLAIN:
        return n * (n + 1 - 2 * kappa)
    return (m_eff + n + 2 * kappa) * (m_eff + n + 1)


def _make_entry(descriptor: ModeDescriptor, eigenvalue) -> SpectrumEntry:
    gamma = gamma_exponent(descriptor)
    return SpectrumEntry(
        descriptor=descriptor,
        eigenvalue=Fraction(eigenvalue),
        gamma=gamma,
        norm_class=classify(gamma, q=descriptor.config.q),
    )


def _raw_family(config: FluxConfig, m: int, n: int, family: Family) -> SpectrumEntry:
    m_eff = config.effective_m(m)
    kappa = config.effective_kappa
    a_exp = Fraction(m_eff, 2)
    if family is Family.PLAIN:
        b_exp = -Fraction(m_eff, 2) - kappa
        jacobi = JacobiSpec(n, m_eff, -m_eff - 2 * kappa)
    else:
        b_exp = Fraction(m_eff, 2) + kappa
        jacobi = JacobiSpec(n, m_eff, m_eff + 2 * kappa)
    descriptor = ModeDescriptor(
        m=m,
        family=family,
        n=n,
        a_exp=a_exp,
        b_exp=b_exp,
        jacobi=jacobi,
        coeff=1,
        config=config,
    )
    return _make_entry(descriptor, family_eigenvalue(config, m, n, family))


def build_families(
    config: FluxConfig, m: int, n: int
) -> tuple[SpectrumEntry, SpectrumEntry]:
    """Build the Plain and the Tilde mode with angular momentum m and label n.

    For F=0 and m >= 0 the Plain mode is (1-z)^(m/2) (1+z)^(-m/2-kappa)
    P_n^{m,-m-2kappa}(z) with eigenvalue n(n+1-2kappa) and the Tilde mode is
    (1-z)^(m/2) (1+z)^(m/2+kappa) P_n^{m,m+2kappa}(z) with eigenvalue
    (m+n+2kappa)(m+n+1). Modes with negative (effective) m are passed through
    [`reduce_negative_m`][monopole_spectra.modes.reduce_negative_m].

    Parameters
    ----------
    config : FluxConfig
    m : int
        Physical angular momentum.
    n : int
        Nonnegative label.

    Returns
    -------
    plain, tilde : SpectrumEntry

    Raises
    ------
    DivergentAtNorthPoleOfMap
        For negative effective m and n < |m|.

    Examples
    --------
    >>> plain, tilde = build_families(FluxConfig("1/2"), 1, 0)
    >>> tilde.descriptor.b_exp, tilde.eigenvalue
    (Fraction(3, 4), Fraction(3, 1))
    >>> plain.norm_class.value
    'NonNormalizable'
    """
    if not isinstance(m, Integral) or isinstance(m, bool):
        msg = f"The angular momentum m must be an integer, got {m}."
        raise ValueError(msg)
    if not isinstance(n, Integral) or isinstance(n, bool) or n < 0:
        msg = f"The label n must be a nonnegative integer, got {n}."
        raise ValueError(msg)
    m, n = int(m), int(n)
    plain = _raw_family(config, m, n, Family.PLAIN)
    tilde = _raw_family(config, m, n, Family.TILDE)
    if config.effective_m(m) < 0:
        plain = reduce_negative_m(plain)
        tilde = reduce_negative_m(tilde)
    return plain, tilde


def reduce_negative_m(entry: SpectrumEntry) -> SpectrumEntry:
    """Absorb (1 - z)^|m| of a negative-m mode into its exponent of (1 - z).

    Uses P_N^{-j,b} = (-1/2)^j prod_i (N-j+b+i)/(N-j+i) (1-z)^j P_{N-j}^{j,b}, so
    the result has the exponent |m|/2 >= 0 and Jacobi degree n - |m|. The
    represented function is unchanged. The coefficient vanishes if the polynomial
    vanishes identically.

    Raises
    ------
    DivergentAtNorthPoleOfMap
        If n < |m|, then the mode diverges at z = 1.

    Examples
    --------
    >>> plain, _ = build_families(FluxConfig("1/2"), -1, 1)
    >>> d = plain.descriptor
    >>> d.a_exp, d.b_exp, d.jacobi
    (Fraction(1, 2), Fraction(1, 4), JacobiSpec(n=0, alpha=1, beta=Fraction(1, 2)))
    """
    d = entry.descriptor
    m_eff = d.config.effective_m(d.m)
    if m_eff >= 0:
        msg = (
            f"The mode must have a negative effective m, got m={d.m} in sector "
            f"{d.sector}."
        )
        raise ValueError(msg)
    alpha = d.jacobi.alpha
    if not (is_integer(alpha) and alpha < 0):
        msg = f"The mode is already reduced, its Jacobi alpha is {alpha}."
        raise ValueError(msg)
    if d.jacobi.n < -alpha:
        raise DivergentAtNorthPoleOfMap(d.m, d.n)
    c, jacobi = reduce_negative_alpha(d.jacobi)
    if c == 0:
        logger.debug("Mode %s vanishes identically.", entry.label)
    reduced = replace(
        d,
        a_exp=d.a_exp - alpha,
        jacobi=jacobi,
        coeff=d.coeff * float(c),
    )
    return _make_entry(reduced, entry.eigenvalue)


def canonical_form(entry: EntryLike) -> ModeDescriptor:
    """Reduce negative integer Jacobi parameters into the endpoint exponents.

    Two descriptors represent proportional functions if their canonical forms share
    the [`canonical_key`][monopole_spectra.modes.canonical_key].
    """
    d = _descriptor(entry)
    coeff = d.coeff
    a_exp, b_exp, jacobi = d.a_exp, d.b_exp, d.jacobi
    if is_integer(jacobi.alpha) and -jacobi.n <= jacobi.alpha <= -1:
        c, jacobi_new = reduce_negative_alpha(jacobi)
        a_exp -= jacobi.alpha
        coeff *= float(c)
        jacobi = jacobi_new
    if is_integer(jacobi.beta) and -jacobi.n <= jacobi.beta <= -1:
        c, jacobi_new = reduce_negative_beta(jacobi)
        b_exp -= jacobi.beta
        coeff *= float(c)
        jacobi = jacobi_new
    if jacobi.n == 0:
        jacobi = JacobiSpec(0, 0, 0)
    return replace(d, a_exp=a_exp, b_exp=b_exp, jacobi=jacobi, coeff=coeff)


def canonical_key(entry: EntryLike) -> tuple:
    """Hashable key (sector, q, m, a, b, degree, alpha, beta) of the canonical form."""
    d = canonical_form(entry)
    return (
        d.config.sector,
        d.config.q,
        d.m,
        d.a_exp,
        d.b_exp,
        d.jacobi.n,
        Fraction(d.jacobi.alpha),
        Fraction(d.jacobi.beta),
    )


def radial_part(descriptor: EntryLike, z: npt.ArrayLike):
    """coeff (1-z)^a (1+z)^b P(z), without the phase.

    Evaluated on the canonical form, so a negative exponent never multiplies a
    polynomial carrying the compensating zero.
    """
    d = canonical_form(descriptor)
    x = np.asarray(z, dtype=float)
    values = (
        d.coeff
        * (1 - x) ** float(d.a_exp)
        * (1 + x) ** float(d.b_exp)
        * np.asarray(jacobi_eval(d.jacobi, x))
    )
    if np.ndim(z) == 0:
        return complex(values)
    return values


def evaluate(descriptor: EntryLike, z: npt.ArrayLike, phi: npt.ArrayLike = 0.0):
    """Value coeff e^{i m phi} (1-z)^a (1+z)^b P(z) of a mode.

    Parameters
    ----------
    descriptor : ModeDescriptor or SpectrumEntry
    z : float or array-like
        Points in [-1, 1]. Endpoints give inf or 0 for nonzero exponents.
    phi : float or array-like
        Azimuthal angle.

    Returns
    -------
    value : complex or ndarray

    Examples
    --------
    >>> plain, tilde = build_families(FluxConfig("1/2"), 0, 0)
    >>> evaluate(plain, 0.0)
    (1+0j)
    >>> abs(evaluate(tilde, 1.0) - 2**0.25) < 1e-15
    True
    """
    d = _descriptor(descriptor)
    value = np.exp(1j * d.m * np.asarray(phi, dtype=float)) * radial_part(d, z)
    if np.ndim(value) == 0:
        return complex(value)
    return value


def to_grid_function(
    descriptor: EntryLike, nodes: npt.ArrayLike, max_degree: int = 64
) -> GridFunction:
    """Sample the polynomial of the canonical form, keeping its exponents exact."""
    d = canonical_form(descriptor)
    nodes = np.asarray(nodes, dtype=float)
    samples = d.coeff * np.asarray(jacobi_eval(d.jacobi, nodes))
    return GridFunction(d.m, nodes, samples, d.a_exp, d.b_exp, max_degree=max_degree)


def inner_product(e1: EntryLike, e2: EntryLike, npoints: Optional[int] = None):
    r"""Inner product <e1|e2> with the covariant measure of the sphere.

    The angular integration gives zero for different m. For equal m the result is

    \[
    \pi \bar{c}_1 c_2 \int_{-1}^{1} (1-z)^{a_1+a_2} (1+z)^{b_1+b_2} P_1(z) P_2(z)\,dz,
    \]

    normalized such that the constant mode at q = 1 has norm 2 pi, the area of
    the sphere. The exponents are those of the canonical forms. The integral is computed by Gauss-Jacobi quadrature which is exact
    for `npoints` >= (deg P_1 + deg P_2 + 1) / 2.

    Parameters
    ----------
    e1, e2 : SpectrumEntry or ModeDescriptor
        Modes of the same flux and sector.
    npoints : int or None
        Number of quadrature nodes. If None, the configured `quad_points` is used.

    Returns
    -------
    value : complex

    Raises
    ------
    DivergentIntegralError
        If a combined endpoint exponent is <= -1.
    SectorMismatchError
        If the modes belong to different sectors or fluxes.

    Examples
    --------
    >>> plain, tilde = build_families(FluxConfig("1/2"), 0, 0)
    >>> abs(inner_product(tilde, plain) - 2 * np.pi) < 1e-12
    True
    """
    d1, d2 = _descriptor(e1), _descriptor(e2)
    if d1.config != d2.config:
        msg = (
            "Inner products are only defined within one sector and flux, got "
            f"{d1.config} and {d2.config}."
        )
        raise SectorMismatchError(msg)
    if d1.m != d2.m or d1.is_zero or d2.is_zero:
        return 0j
    d1, d2 = canonical_form(d1), canonical_form(d2)
    a_tot = d1.a_exp + d2.a_exp
    b_tot = d1.b_exp + d2.b_exp
    if a_tot <= -1 or b_tot <= -1:
        raise DivergentIntegralError(a_tot, b_tot)
    integral = integrate_product(
        lambda z: jacobi_eval(d1.jacobi, z),
        lambda z: jacobi_eval(d2.jacobi, z),
        a=a_tot,
        b=b_tot,
        npoints=npoints,
    )
    return complex(np.pi * np.conj(d1.coeff) * d2.coeff * integral)


def normalize(entry: SpectrumEntry, npoints: Optional[int] = None) -> SpectrumEntry:
    """Return the entry with its coefficient scaled to unit norm."""
    if entry.descriptor.is_zero:
        msg = f"The zero mode {entry.label} cannot be normalized."
        raise ValueError(msg)
    norm = inner_product(entry, entry, npoints=npoints).real
    return replace(entry, descriptor=entry.descriptor.scale(1 / np.sqrt(norm)))
