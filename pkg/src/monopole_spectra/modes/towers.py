import math
from collections.abc import Iterable
from typing import Optional

import numpy as np
import polars as pl

from monopole_spectra import get_config
from monopole_spectra._utils.plot_helper import (
    add_line,
    add_markers,
    line_color,
    resolve_axes,
    set_labels,
)

from .config import Family, FluxConfig, NormClass
from .descriptors import SpectrumEntry, classify, family_gamma

TOWER_SCHEMA = {
    "q": pl.Float64,
    "m": pl.Int64,
    "family": pl.String,
    "gamma": pl.Float64,
    "class": pl.String,
}

SPECTRUM_SCHEMA = {
    "sector": pl.Int64,
    "m": pl.Int64,
    "family": pl.String,
    "n": pl.Int64,
    "lambda": pl.Float64,
    "gamma": pl.Float64,
    "class": pl.String,
}

_LINESTYLES = {
    NormClass.REGULAR: "solid",
    NormClass.SINGULAR_NORMALIZABLE: "dashed",
    NormClass.NON_NORMALIZABLE: "dotted",
}


def default_m_range(q_min, q_max) -> tuple[int, int]:
    """Angular momenta [floor(q_min) - 3, ceil(q_max) + 3]."""
    return math.floor(q_min) - 3, math.ceil(q_max) + 3


def _validate_m_range(m_range) -> tuple[int, int]:
    try:
        m_lo, m_hi = (int(m) for m in m_range)
    except (TypeError, ValueError):
        msg = f"Argument m_range must be a pair of integers, got {m_range}."
        raise ValueError(msg) from None
    if m_lo > m_hi:
        msg = f"Argument m_range must satisfy m_min <= m_max, got {m_range}."
        raise ValueError(msg)
    return m_lo, m_hi


def tower_lines(
    q_min: float,
    q_max: float,
    steps: int,
    sector: int = 0,
    m_range: Optional[tuple[int, int]] = None,
) -> pl.DataFrame:
    """Exponent gamma of every family tower as a function of the flux.

    Each (m, family) pair defines one tower of modes sharing the exponent gamma,
    q-1-m for Plain and m+1-q for Tilde in F=0, mirrored in F=1.

    Parameters
    ----------
    q_min, q_max : float
        Flux interval, sampled at `steps` equidistant points including the ends.
    steps : int
        Number of flux values, at least 2.
    sector : int
        Fermion number F.
    m_range : tuple of int or None
        Inclusive range (m_min, m_max). If None, floor(q_min) - 3 to ceil(q_max) + 3.

    Returns
    -------
    df : polars.DataFrame
        Columns `q`, `m`, `family`, `gamma`, `class`, ordered by q, m and family.

    Examples
    --------
    >>> df = tower_lines(0.25, 0.75, 3, m_range=(-1, 0))
    >>> df_singular = df.filter(pl.col("class") == "SingularNormalizable")
    >>> df_singular["m"].unique().sort().to_list()
    [-1, 0]
    """
    if not isinstance(steps, int) or steps < 2:
        msg = f"Argument steps must be an integer >= 2, got {steps}."
        raise ValueError(msg)
    if not q_min < q_max:
        msg = f"Argument q_min must be smaller than q_max, got {q_min} and {q_max}."
        raise ValueError(msg)
    if m_range is None:
        m_range = default_m_range(q_min, q_max)
    m_lo, m_hi = _validate_m_range(m_range)

    columns: dict[str, list] = {key: [] for key in TOWER_SCHEMA}
    for q in np.linspace(float(q_min), float(q_max), steps):
        config = FluxConfig(float(q), sector)
        for m in range(m_lo, m_hi + 1):
            for family in Family:
                gamma = family_gamma(config, m, family)
                columns["q"].append(float(q))
                columns["m"].append(m)
                columns["family"].append(family.value)
                columns["gamma"].append(float(gamma))
                columns["class"].append(classify(gamma, q=config.q).value)
    return pl.DataFrame(columns, schema=TOWER_SCHEMA)


def spectrum_table(entries: Iterable[SpectrumEntry]) -> pl.DataFrame:
    """Spectrum entries as a DataFrame.

    The columns are `sector`, `m`, `family`, `n`, `lambda`, `gamma` and `class`.
    """
    rows = [
        {
            "sector": e.sector,
            "m": e.m,
            "family": e.family.value,
            "n": e.n,
            "lambda": float(e.eigenvalue),
            "gamma": float(e.gamma),
            "class": e.norm_class.value,
        }
        for e in entries
    ]
    return pl.DataFrame(rows, schema=SPECTRUM_SCHEMA)


def plot_towers(
    q_min: float = 0.0,
    q_max: float = 3.0,
    steps: int = 61,
    sector: int = 0,
    m_range: Optional[tuple[int, int]] = None,
    ax=None,
):
    """Plot the exponent gamma of all family towers against the flux q.

    Regular segments are drawn solid, singular but normalizable segments dashed
    and non-normalizable segments dotted. Sections (gamma = 0 at integer q) are
    marked.

    Parameters
    ----------
    q_min, q_max, steps, sector, m_range
        See [`tower_lines`][monopole_spectra.modes.tower_lines].
    ax : matplotlib.axes.Axes or plotly Figure
        Axes object to draw the plot onto, otherwise uses the current Axes.

    Returns
    -------
    ax :
        Either the matplotlib axes or the plotly figure. This is configurable by
        setting the `plot_backend` via
        [`config_context`][monopole_spectra.config_context].
    """
    ax, plot_backend = resolve_axes(ax, get_config()["plot_backend"])

    df = tower_lines(q_min, q_max, steps, sector=sector, m_range=m_range)
    labelled = set()
    ms = df["m"].unique().sort().to_list()
    for i, m in enumerate(ms):
        color = line_color(i, plot_backend)
        for family in Family:
            df_i = df.filter((pl.col("m") == m) & (pl.col("family") == family.value))
            q = df_i["q"].to_numpy()
            gamma = df_i["gamma"].to_numpy()
            norm_class = df_i["class"].to_numpy()
            for cls, linestyle in _LINESTYLES.items():
                # NaN breaks the line outside the segments of this class
                y = np.where(norm_class == cls.value, gamma, np.nan)
                if np.all(np.isnan(y)):
                    continue
                add_line(
                    ax,
                    q,
                    y,
                    color=color,
                    linestyle=linestyle,
                    label=cls.value,
                    showlegend=cls not in labelled,
                )
                labelled.add(cls)

    df_section = df.filter(pl.col("class") == NormClass.SECTION.value)
    if df_section.height > 0:
        add_markers(
            ax,
            df_section["q"].to_numpy(),
            df_section["gamma"].to_numpy(),
            label=NormClass.SECTION.value,
        )

    if plot_backend == "matplotlib":
        ax.axhline(y=0, xmin=0, xmax=1, color="k", linewidth=0.5)
        ax.axhline(y=-1, xmin=0, xmax=1, color="grey", linewidth=0.5)
    set_labels(
        ax,
        title=f"Tower exponents in the sector F={sector}",
        xlabel="flux q",
        ylabel="gamma",
    )
    return ax
