"""Monopole harmonics: the square-integrable modes at integer flux."""

from fractions import Fraction
from numbers import Integral

from monopole_spectra._exceptions import OutOfRange
from monopole_spectra._utils.exact import as_fraction, is_integer
from monopole_spectra.specialfn import JacobiSpec

from .config import Family, FluxConfig
from .descriptors import ModeDescriptor, SpectrumEntry, _make_entry


def _half_sum(config: FluxConfig, m: int) -> Fraction:
    # (|m| + |m + 2 kappa|) / 2 with effective values
    m_eff = config.effective_m(m)
    kappa = config.effective_kappa
    return (abs(m_eff) + abs(m_eff + 2 * kappa)) / Fraction(2)


def monopole_eigenvalue(q, m: int, n: int, sector: int = 0) -> Fraction:
    """Eigenvalue (J + kappa)(J + 1 - kappa) with J = n + (|m| + |m + 2 kappa|)/2.

    Here n is the Jacobi degree of the harmonic. For F=1 the effective flux -q and
    angular momentum -m are used.

    Examples
    --------
    >>> monopole_eigenvalue(1, 2, 1)
    Fraction(12, 1)
    >>> monopole_eigenvalue(2, -1, 1)
    Fraction(8, 1)
    """
    config = FluxConfig(q, sector)
    kappa = config.effective_kappa
    j = n + _half_sum(config, m)
    return (j + kappa) * (j + 1 - kappa)


def harmonic_level(q, m: int, n: int, sector: int = 0) -> Fraction:
    """Level label n' = J + kappa of a harmonic, such that lambda = n'(n' + q).

    Examples
    --------
    >>> harmonic_level(2, -1, 1)
    Fraction(2, 1)
    """
    config = FluxConfig(q, sector)
    return n + _half_sum(config, m) + config.effective_kappa


def _minimal_level(q_eff: Fraction) -> int:
    return 0 if q_eff > 0 else int(1 - q_eff)


def monopole_harmonic(q, sector: int, m: int, n: int) -> SpectrumEntry:
    """Square-integrable monopole harmonic at integer flux.

    The harmonic is (1-z)^(|m|/2) (1+z)^(|m+2kappa|/2) P_n^{|m|,|m+2kappa|}(z).

    Parameters
    ----------
    q : int
        Integer flux.
    sector : int
        Fermion number F.
    m : int
        Physical angular momentum.
    n : int
        Jacobi degree.

    Returns
    -------
    entry : SpectrumEntry
        The harmonic expressed as the member of the family it coincides with.
        Its class is Section if m + 2 kappa = 0 and Regular otherwise.

    Raises
    ------
    OutOfRange
        For non-integer q, negative n or labels outside the enumeration
        m = -n', ..., n' + q - 1 with n' >= 0 (q > 0) or n' >= 1 - q (q <= 0).

    Examples
    --------
    >>> entry = monopole_harmonic(1, 0, 2, 1)
    >>> entry.eigenvalue, entry.norm_class.value
    (Fraction(12, 1), 'Regular')
    """
    if not is_integer(as_fraction(q)):
        msg = f"Monopole harmonics require an integer flux, got q={q}."
        raise OutOfRange(msg)
    if not isinstance(n, Integral) or n < 0:
        msg = f"The Jacobi degree n must be a nonnegative integer, got {n}."
        raise OutOfRange(msg)
    config = FluxConfig(q, sector)
    q_eff = config.effective_q
    m_eff = config.effective_m(m)
    kappa = config.effective_kappa
    level = harmonic_level(q, m, n, sector)
    if level < _minimal_level(q_eff) or not (-level <= m_eff <= level + q_eff - 1):
        msg = (
            f"The harmonic (q={q}, F={sector}, m={m}, n={n}) has level {level} "
            "outside the enumeration m = -n', ..., n' + q - 1."
        )
        raise OutOfRange(msg)

    b_exp = abs(m_eff + 2 * kappa) / Fraction(2)
    family = Family.PLAIN if m_eff + 2 * kappa <= 0 else Family.TILDE
    # label of the same function within its family
    label = n + (abs(m_eff) if m_eff < 0 else 0)
    descriptor = ModeDescriptor(
        m=m,
        family=family,
        n=label,
        a_exp=Fraction(abs(m_eff), 2),
        b_exp=b_exp,
        jacobi=JacobiSpec(n, abs(m_eff), 2 * b_exp),
        coeff=1,
        config=config,
    )
    return _make_entry(descriptor, monopole_eigenvalue(q, m, n, sector))


def enumerate_monopole_harmonics(q, level: int, sector: int = 0) -> list[SpectrumEntry]:
    """All 2n' + q harmonics of the level n', ordered by m.

    Examples
    --------
    >>> [e.m for e in enumerate_monopole_harmonics(1, 1)]
    [-1, 0, 1]
    """
    if not is_integer(as_fraction(q)):
        msg = f"Monopole harmonics require an integer flux, got q={q}."
        raise OutOfRange(msg)
    config = FluxConfig(q, sector)
    q_eff = config.effective_q
    if level < _minimal_level(q_eff):
        msg = (
            f"The level n'={level} is below the lowest level "
            f"{_minimal_level(q_eff)} at effective flux {q_eff}."
        )
        raise OutOfRange(msg)
    entries = []
    for m_eff in range(-level, int(level + q_eff)):
        m = config.effective_m(m_eff)
        degree = level - config.effective_kappa - _half_sum(config, m)
        entries.append(monopole_harmonic(q, sector, m, int(degree)))
    return sorted(entries, key=lambda e: e.m)
