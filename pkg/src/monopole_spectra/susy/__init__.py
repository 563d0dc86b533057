from .index import (
    IndexReport,
    WitnessRecord,
    index_report,
    susy_breaking_witness,
    witness_m_range,
    witten_index,
)
from .pairing import (
    NON_HERMITIAN_NOTE,
    PairedLevel,
    PairingReport,
    UnpairedEntry,
    UnpairedReason,
    pairing_report,
    supercharge_image,
)
from .spectrum import HilbertPolicy, assemble_spectrum, check_policy

__all__ = [
    "NON_HERMITIAN_NOTE",
    "HilbertPolicy",
    "IndexReport",
    "PairedLevel",
    "PairingReport",
    "UnpairedEntry",
    "UnpairedReason",
    "WitnessRecord",
    "assemble_spectrum",
    "check_policy",
    "index_report",
    "pairing_report",
    "supercharge_image",
    "susy_breaking_witness",
    "witness_m_range",
    "witten_index",
]
