from .config import Family, FluxConfig, NormClass
from .descriptors import (
    ModeDescriptor,
    SpectrumEntry,
    build_families,
    canonical_form,
    canonical_key,
    classify,
    evaluate,
    family_eigenvalue,
    family_gamma,
    gamma_exponent,
    inner_product,
    normalize,
    radial_part,
    reduce_negative_m,
    to_grid_function,
)
from .harmonics import (
    enumerate_monopole_harmonics,
    harmonic_level,
    monopole_eigenvalue,
    monopole_harmonic,
)
from .towers import default_m_range, plot_towers, spectrum_table, tower_lines

__all__ = [
    "Family",
    "FluxConfig",
    "ModeDescriptor",
    "NormClass",
    "SpectrumEntry",
    "build_families",
    "canonical_form",
    "canonical_key",
    "classify",
    "default_m_range",
    "enumerate_monopole_harmonics",
    "evaluate",
    "family_eigenvalue",
    "family_gamma",
    "gamma_exponent",
    "harmonic_level",
    "inner_product",
    "monopole_eigenvalue",
    "monopole_harmonic",
    "normalize",
    "plot_towers",
    "radial_part",
    "reduce_negative_m",
    "spectrum_table",
    "to_grid_function",
    "tower_lines",
]
