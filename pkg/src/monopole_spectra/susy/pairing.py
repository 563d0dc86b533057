import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

import polars as pl

from monopole_spectra._utils.exact import as_fraction
from monopole_spectra.modes import NormClass, SpectrumEntry, canonical_key
from monopole_spectra.modes.config import FluxLike
from monopole_spectra.operators import apply_Q, apply_Qbar

from .spectrum import (
    HilbertPolicy,
    assemble_spectrum,
    check_policy,
    default_n_max,
    default_spectrum_m_range,
)

logger = logging.getLogger(__name__)

NON_HERMITIAN_NOTE = (
    "Hermiticity could formally be restored by an inner product declaring the "
    "singular partner states orthogonal to all others. No computable form of such "
    "an inner product is implemented, all matrix elements use the covariant measure."
)


class UnpairedReason(str, Enum):
    """Why an admitted entry has no superpartner in the policy space."""

    ZERO_MODE = "zero mode"
    IMAGE_SINGULAR = "image singular"
    IMAGE_DIVERGENT = "image not normalizable"
    IMAGE_OUTSIDE_POLICY = "image outside policy"
    PARTNER_MISSING = "partner outside the assembled range"


def supercharge_image(entry: SpectrumEntry) -> SpectrumEntry:
    """Q for F=0 and Qbar for F=1."""
    return apply_Q(entry) if entry.sector == 0 else apply_Qbar(entry)


def unpaired_reason(image: SpectrumEntry, policy: HilbertPolicy) -> UnpairedReason:
    """Reason for an image outside the policy space."""
    if image.descriptor.is_zero:
        return UnpairedReason.ZERO_MODE
    if image.norm_class is NormClass.NON_NORMALIZABLE:
        return UnpairedReason.IMAGE_DIVERGENT
    if image.norm_class is NormClass.SINGULAR_NORMALIZABLE:
        if policy is HilbertPolicy.SQUARE_INTEGRABLE:
            return UnpairedReason.PARTNER_MISSING
        return UnpairedReason.IMAGE_SINGULAR
    if policy.admits(image):
        return UnpairedReason.PARTNER_MISSING
    return UnpairedReason.IMAGE_OUTSIDE_POLICY


def entry_record(entry: SpectrumEntry) -> dict:
    """JSON compatible record of an entry."""
    return {
        "sector": entry.sector,
        "m": entry.m,
        "family": entry.family.value,
        "n": entry.n,
        "lambda": float(entry.eigenvalue),
        "gamma": float(entry.gamma),
        "class": entry.norm_class.value,
    }


@dataclass(frozen=True)
class PairedLevel:
    eigenvalue: Fraction
    f0: SpectrumEntry
    f1: SpectrumEntry


@dataclass(frozen=True)
class UnpairedEntry:
    entry: SpectrumEntry
    reason: UnpairedReason
    image: Optional[SpectrumEntry] = None

    @property
    def image_gamma(self) -> Optional[Fraction]:
        if self.image is None or self.image.descriptor.is_zero:
            return None
        return self.image.gamma


@dataclass
class PairingReport:
    """Superpartner structure of a spectrum below a cutoff.

    Attributes
    ----------
    q : Fraction
        Flux.
    policy : HilbertPolicy
    lambda_cutoff : float
        Only levels with eigenvalue <= lambda_cutoff are reported.
    pairs : list of PairedLevel
        F=0 entries whose Q image is proportional to an admitted F=1 entry.
    unpaired : list of UnpairedEntry
        All other admitted entries below the cutoff, with the reason.
    zero_modes : dict
        Number of admitted zero modes (eigenvalue 0) per sector.
    index : int or None
        n0(F=0) - n0(F=1), only set for the BundleSections policy.
    note : str
        Remark on the non-hermitian boundary term.
    """

    q: Fraction
    policy: HilbertPolicy
    lambda_cutoff: float
    pairs: list = field(default_factory=list)
    unpaired: list = field(default_factory=list)
    zero_modes: dict = field(default_factory=lambda: {0: 0, 1: 0})
    index: Optional[int] = None
    note: str = NON_HERMITIAN_NOTE

    @property
    def unpaired_excited(self) -> list:
        """Unpaired entries with nonzero eigenvalue."""
        return [u for u in self.unpaired if u.entry.eigenvalue != 0]

    def to_dict(self) -> dict:
        """Report following {q, policy, pairs, unpaired, index?}."""
        result = {
            "q": float(self.q),
            "policy": self.policy.value,
            "lambda_cutoff": float(self.lambda_cutoff),
            "pairs": [
                {
                    "lambda": float(p.eigenvalue),
                    "f0": entry_record(p.f0),
                    "f1": entry_record(p.f1),
                }
                for p in self.pairs
            ],
            "unpaired": [
                {
                    "entry": entry_record(u.entry),
                    "reason": u.reason.value,
                    "image_gamma": (
                        None if u.image_gamma is None else float(u.image_gamma)
                    ),
                }
                for u in self.unpaired
            ],
            "zero_modes": {str(k): v for k, v in self.zero_modes.items()},
            "note": self.note,
        }
        if self.index is not None:
            result["index"] = self.index
        return result

    def pairs_table(self) -> pl.DataFrame:
        """The pairs as a DataFrame, one row per level and partner pair."""
        schema = {
            "lambda": pl.Float64,
            "m0": pl.Int64,
            "family0": pl.String,
            "n0": pl.Int64,
            "m1": pl.Int64,
            "family1": pl.String,
            "n1": pl.Int64,
        }
        rows = [
            {
                "lambda": float(p.eigenvalue),
                "m0": p.f0.m,
                "family0": p.f0.family.value,
                "n0": p.f0.n,
                "m1": p.f1.m,
                "family1": p.f1.family.value,
                "n1": p.f1.n,
            }
            for p in self.pairs
        ]
        return pl.DataFrame(rows, schema=schema)


def pairing_report(
    q: FluxLike,
    policy=HilbertPolicy.SQUARE_INTEGRABLE,
    lambda_cutoff: float = 30.0,
    m_range: Optional[tuple[int, int]] = None,
    n_max: Optional[int] = None,
) -> PairingReport:
    """Pair the sectors F=0 and F=1 by the action of the supercharges.

    An F=0 entry is paired with the admitted F=1 entry its Q image is proportional
    to, decided by equal canonical descriptors and not by coinciding eigenvalues.
    Every other admitted entry with eigenvalue <= lambda_cutoff is reported as
    unpaired together with its supercharge image and the reason.

    Parameters
    ----------
    q : int, float, str or Fraction
        Flux.
    policy : HilbertPolicy or str
    lambda_cutoff : float
        Largest reported eigenvalue, > 0.
    m_range : tuple of int or None
        Range of angular momenta, derived from the cutoff if None.
    n_max : int or None
        Largest family label, derived from the cutoff if None.

    Returns
    -------
    report : PairingReport

    Examples
    --------
    >>> report = pairing_report(2, "BundleSections", lambda_cutoff=10)
    >>> report.index, len(report.unpaired_excited)
    (2, 0)
    """
    if not lambda_cutoff > 0:
        msg = f"Argument lambda_cutoff must be > 0, got {lambda_cutoff}."
        raise ValueError(msg)
    policy = check_policy(q, policy)
    if n_max is None:
        n_max = default_n_max(q, lambda_cutoff)
    if m_range is None:
        m_range = default_spectrum_m_range(q, n_max)
    spectrum = assemble_spectrum(q, m_range, n_max, policy)
    cutoff = as_fraction(lambda_cutoff)
    below = {
        sector: [e for e in entries if e.eigenvalue <= cutoff]
        for sector, entries in spectrum.items()
    }
    f1_by_key = {canonical_key(e): e for e in spectrum[1]}

    report = PairingReport(as_fraction(q), policy, lambda_cutoff)
    paired_f1 = set()
    for entry in below[0]:
        image = apply_Q(entry)
        partner = None
        if not image.descriptor.is_zero:
            partner = f1_by_key.get(canonical_key(image))
        if partner is not None:
            report.pairs.append(PairedLevel(entry.eigenvalue, entry, partner))
            paired_f1.add(canonical_key(partner))
        else:
            report.unpaired.append(
                UnpairedEntry(entry, unpaired_reason(image, policy), image)
            )
    for entry in below[1]:
        if canonical_key(entry) in paired_f1:
            continue
        image = apply_Qbar(entry)
        reason = unpaired_reason(image, policy)
        report.unpaired.append(UnpairedEntry(entry, reason, image))

    report.zero_modes = {
        sector: sum(1 for e in entries if e.eigenvalue == 0)
        for sector, entries in below.items()
    }
    if policy is HilbertPolicy.BUNDLE_SECTIONS:
        report.index = report.zero_modes[0] - report.zero_modes[1]
    logger.debug(
        "Pairing at q=%s: %s pairs, %s unpaired.",
        q,
        len(report.pairs),
        len(report.unpaired),
    )
    return report
