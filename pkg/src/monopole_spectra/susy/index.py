import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from monopole_spectra._exceptions import InadmissiblePolicyError
from monopole_spectra._utils.exact import as_fraction, is_integer
from monopole_spectra.modes import SpectrumEntry
from monopole_spectra.modes.config import FluxLike
from monopole_spectra.operators import flux_integral

from .pairing import (
    UnpairedReason,
    entry_record,
    supercharge_image,
    unpaired_reason,
)
from .spectrum import HilbertPolicy, assemble_spectrum, check_policy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexReport:
    """Zero modes per sector and the Witten index n0(F=0) - n0(F=1)."""

    q: Fraction
    zero_modes_f0: int
    zero_modes_f1: int
    flux: float

    @property
    def index(self) -> int:
        return self.zero_modes_f0 - self.zero_modes_f1

    def to_dict(self) -> dict:
        return {
            "q": float(self.q),
            "zero_modes": {"0": self.zero_modes_f0, "1": self.zero_modes_f1},
            "index": self.index,
            "flux": self.flux,
        }


def index_report(q: FluxLike) -> IndexReport:
    """Count the zero modes of both sectors under the BundleSections policy.

    The angular momenta |m| <= |q| + 2 and labels n <= |q| + 2 hold all zero
    modes, these have n = 0 and 0 <= m_eff <= |q| - 1.

    Raises
    ------
    InadmissiblePolicyError
        For non-integer flux, where the breaking witness applies instead.
    """
    q_exact = as_fraction(q)
    if not is_integer(q_exact):
        msg = (
            f"The Witten index requires an integer flux, got q={q_exact}. Use "
            "susy_breaking_witness for non-integer flux."
        )
        raise InadmissiblePolicyError(msg)
    bound = abs(int(q_exact)) + 2
    spectrum = assemble_spectrum(
        q_exact, (-bound, bound), bound, HilbertPolicy.BUNDLE_SECTIONS
    )
    counts = [sum(1 for e in spectrum[s] if e.eigenvalue == 0) for s in (0, 1)]
    report = IndexReport(
        q=q_exact,
        zero_modes_f0=counts[0],
        zero_modes_f1=counts[1],
        flux=flux_integral(float(q_exact)),
    )
    logger.debug("Zero modes at q=%s: %s and %s.", q_exact, *counts)
    return report


def witten_index(q: FluxLike) -> int:
    """Witten index n0(F=0) - n0(F=1) at integer flux.

    Examples
    --------
    >>> witten_index(1), witten_index(-2), witten_index(0)
    (1, -2, 0)
    """
    return index_report(q).index


@dataclass(frozen=True)
class WitnessRecord:
    """An admitted entry whose superpartner leaves the policy space."""

    policy: HilbertPolicy
    entry: SpectrumEntry
    image: SpectrumEntry
    reason: UnpairedReason

    @property
    def entry_gamma(self) -> Fraction:
        return self.entry.gamma

    @property
    def image_gamma(self) -> Fraction:
        return self.image.gamma

    def to_dict(self) -> dict:
        return {
            "policy": self.policy.value,
            "entry": entry_record(self.entry),
            "image": entry_record(self.image),
            "reason": self.reason.value,
        }


def witness_m_range(q: FluxLike) -> tuple[int, int]:
    """Window [floor(|q|) - 4, ceil(|q|) + 4] of angular momenta."""
    q_abs = abs(as_fraction(q))
    return math.floor(q_abs) - 4, math.ceil(q_abs) + 4


def susy_breaking_witness(
    q: FluxLike, policies: Optional[tuple] = None, n_max: int = 3
) -> list[WitnessRecord]:
    """Find an admitted mode without superpartner for each policy.

    The admitted entries of both sectors are scanned in ascending order of the
    eigenvalue, F=0 first. The first nonzero mode whose supercharge image is not
    admitted is the witness.

    Parameters
    ----------
    q : float, str or Fraction
        Non-integer flux.
    policies : tuple of HilbertPolicy or None
        Policies to search, by default RegularOnly and SquareIntegrable.
    n_max : int
        Largest family label.

    Returns
    -------
    witnesses : list of WitnessRecord
        One record per policy.

    Raises
    ------
    InadmissiblePolicyError
        For integer flux or the BundleSections policy.

    Examples
    --------
    >>> regular, square = susy_breaking_witness("1/2")
    >>> regular.entry.label, regular.image_gamma
    ('F=0 Tilde m=0 n=0', Fraction(-1, 2))
    >>> square.entry.label, square.image_gamma
    ('F=0 Tilde m=-1 n=1', Fraction(-3, 2))
    """
    q_exact = as_fraction(q)
    if is_integer(q_exact):
        msg = (
            f"Supersymmetry of the spectrum is unbroken at integer flux q={q_exact}, "
            "use witten_index instead."
        )
        raise InadmissiblePolicyError(msg)
    if policies is None:
        policies = (HilbertPolicy.REGULAR_ONLY, HilbertPolicy.SQUARE_INTEGRABLE)
    m_range = witness_m_range(q_exact)
    witnesses = []
    for policy in policies:
        policy = check_policy(q_exact, policy)
        spectrum = assemble_spectrum(q_exact, m_range, n_max, policy)
        candidates = sorted(
            spectrum[0] + spectrum[1],
            key=lambda e: (e.eigenvalue, e.sector, e.m, e.family.value, e.n),
        )
        for entry in candidates:
            image = supercharge_image(entry)
            if image.descriptor.is_zero or policy.admits(image):
                continue
            witnesses.append(
                WitnessRecord(policy, entry, image, unpaired_reason(image, policy))
            )
            logger.debug("Witness under %s: %s.", policy.value, entry.label)
            break
        else:
            msg = (
                f"No mode without superpartner found under {policy.value} at "
                f"q={q_exact} for m in {m_range} and n <= {n_max}."
            )
            raise RuntimeError(msg)
    return witnesses
