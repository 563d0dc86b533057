"""Spectra and supersymmetry of a charged particle on the two-sphere.

The subpackages are imported explicitly, e.g. `from monopole_spectra.modes import
build_families`. The top level only holds the global configuration.
"""

from .__about__ import __version__
from ._config import config_context, get_config, set_config

__all__ = [
    "__version__",
    "config_context",
    "get_config",
    "set_config",
]
