import logging
import math
from enum import Enum
from typing import Optional

from monopole_spectra._exceptions import (
    DivergentAtNorthPoleOfMap,
    InadmissiblePolicyError,
)
from monopole_spectra.modes import (
    FluxConfig,
    NormClass,
    SpectrumEntry,
    build_families,
    canonical_key,
)
from monopole_spectra.modes.config import FluxLike

logger = logging.getLogger(__name__)


class HilbertPolicy(str, Enum):
    """Choice of the Hilbert space the spectrum is restricted to.

    - RegularOnly: wave functions nonsingular on the sphere.
    - SquareIntegrable: all normalizable modes, including those singular at the
      puncture.
    - BundleSections: regular modes and winding sections at the puncture, only at
      integer flux.
    """

    REGULAR_ONLY = "RegularOnly"
    SQUARE_INTEGRABLE = "SquareIntegrable"
    BUNDLE_SECTIONS = "BundleSections"

    @property
    def admitted_classes(self) -> frozenset:
        if self is HilbertPolicy.REGULAR_ONLY:
            return frozenset({NormClass.REGULAR})
        if self is HilbertPolicy.BUNDLE_SECTIONS:
            return frozenset({NormClass.REGULAR, NormClass.SECTION})
        return frozenset(
            {NormClass.REGULAR, NormClass.SECTION, NormClass.SINGULAR_NORMALIZABLE}
        )

    def admits(self, entry: SpectrumEntry) -> bool:
        """True if the entry is a nonzero mode of an admitted class."""
        return (
            not entry.descriptor.is_zero and entry.norm_class in self.admitted_classes
        )


def check_policy(q: FluxLike, policy) -> HilbertPolicy:
    """Validate the policy for the flux q."""
    try:
        policy = HilbertPolicy(policy)
    except ValueError:
        values = [p.value for p in HilbertPolicy]
        msg = f"The policy must be one of {values}, got {policy}."
        raise InadmissiblePolicyError(msg) from None
    config = FluxConfig(q)
    if policy is HilbertPolicy.BUNDLE_SECTIONS and not config.is_integer_flux:
        msg = (
            f"The policy {policy.value} is only admissible for integer flux, got "
            f"q={config.q}."
        )
        raise InadmissiblePolicyError(msg)
    return policy


def default_n_max(q: FluxLike, lambda_cutoff: float) -> int:
    """Largest label needed to reach all levels below lambda_cutoff."""
    root = math.isqrt(math.ceil(max(lambda_cutoff, 0)))
    return root + math.ceil(abs(FluxConfig(q).q)) + 2


def default_spectrum_m_range(q: FluxLike, n_max: int) -> tuple[int, int]:
    """Symmetric range of angular momenta holding every admitted label <= n_max."""
    m_abs = n_max + math.ceil(abs(FluxConfig(q).q)) + 2
    return -m_abs, m_abs


def sector_spectrum(
    config: FluxConfig,
    m_range: tuple[int, int],
    n_max: int,
    policy: HilbertPolicy,
) -> list[SpectrumEntry]:
    """Admitted entries of one sector without duplicates, sorted by eigenvalue."""
    seen = {}
    for m in range(m_range[0], m_range[1] + 1):
        for n in range(n_max + 1):
            try:
                entries = build_families(config, m, n)
            except DivergentAtNorthPoleOfMap:
                logger.debug("Skipped m=%s, n=%s diverging at z=1.", m, n)
                continue
            for entry in entries:
                if not policy.admits(entry):
                    continue
                # families coincide at integer flux
                seen.setdefault(canonical_key(entry), entry)
    return sorted(
        seen.values(), key=lambda e: (e.eigenvalue, e.m, e.family.value, e.n)
    )


def assemble_spectrum(
    q: FluxLike,
    m_range: Optional[tuple[int, int]] = None,
    n_max: int = 4,
    policy=HilbertPolicy.SQUARE_INTEGRABLE,
) -> dict[int, list[SpectrumEntry]]:
    """Spectrum of both sectors restricted to a Hilbert space policy.

    Parameters
    ----------
    q : int, float, str or Fraction
        Flux.
    m_range : tuple of int or None
        Inclusive range of physical angular momenta. If None, a symmetric range
        containing all admitted modes with label <= n_max is used.
    n_max : int
        Largest family label n.
    policy : HilbertPolicy or str
        The admitted classes of modes.

    Returns
    -------
    spectrum : dict
        Sector F (0 or 1) to the list of admitted entries, sorted by eigenvalue.
        Duplicates from the coincidence of the two families at integer flux are
        removed.

    Raises
    ------
    InadmissiblePolicyError
        For BundleSections at non-integer flux.

    Examples
    --------
    >>> spectrum = assemble_spectrum("1/2", (-2, 2), 2, "RegularOnly")
    >>> [(e.m, e.family.value) for e in spectrum[0] if e.eigenvalue == 0.5]
    [(0, 'Tilde')]
    """
    if not isinstance(n_max, int) or n_max < 0:
        msg = f"Argument n_max must be a nonnegative integer, got {n_max}."
        raise ValueError(msg)
    policy = check_policy(q, policy)
    if m_range is None:
        m_range = default_spectrum_m_range(q, n_max)
    if m_range[0] > m_range[1]:
        msg = f"Argument m_range must satisfy m_min <= m_max, got {m_range}."
        raise ValueError(msg)
    spectrum = {
        sector: sector_spectrum(FluxConfig(q, sector), m_range, n_max, policy)
        for sector in (0, 1)
    }
    logger.debug(
        "Assembled %s + %s entries at q=%s under %s.",
        len(spectrum[0]),
        len(spectrum[1]),
        q,
        policy.value,
    )
    return spectrum
