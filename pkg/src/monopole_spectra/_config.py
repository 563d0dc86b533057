"""
Global configuration state and functions for management
To a large part taken from scikit-learn.
"""

import os
from collections.abc import Iterator
from contextlib import contextmanager
from importlib.util import find_spec
from typing import Optional

TOLERANCE_SCALE_ENV = "MONOPOLE_SPECTRA_TOLERANCE_SCALE"
MAX_QUAD_POINTS = 256
MIN_GRID_SIZE = 32


def _tolerance_scale_from_env() -> float:
    value = os.environ.get(TOLERANCE_SCALE_ENV)
    if value is None or value == "":
        return 1.0
    try:
        scale = float(value)
    except ValueError:
        msg = f"The environment variable {TOLERANCE_SCALE_ENV} must be a float, got "
        msg += f"{value!r}."
        raise ValueError(msg) from None
    if not scale > 0:
        msg = f"The environment variable {TOLERANCE_SCALE_ENV} must be > 0, "
        msg += f"got {value}."
        raise ValueError(msg)
    return scale


_global_config = {
    "quad_points": 64,
    "grid_size": 2048,
    "tolerance_scale": _tolerance_scale_from_env(),
    "plot_backend": "matplotlib",
}


def get_config() -> dict:
    """Retrieve current values for configuration set by :func:`set_config`.

    Returns
    -------
    config : dict
        A copy of the configuration dictionary. Keys are parameter names that can be
        passed to :func:`set_config`.

    See Also
    --------
    config_context : Context manager for global monopole-spectra configuration.
    set_config : Set global monopole-spectra configuration.

    Examples
    --------
    >>> import monopole_spectra
    >>> config = monopole_spectra.get_config()
    >>> config.keys()
    dict_keys([...])
    """
    # Return a copy of the global config so that users will
    # not be able to modify the configuration with the returned dict.
    return _global_config.copy()


def set_config(
    quad_points: Optional[int] = None,
    grid_size: Optional[int] = None,
    tolerance_scale: Optional[float] = None,
    plot_backend: Optional[str] = None,
) -> None:
    """Set global monopole-spectra configuration.

    Parameters
    ----------
    quad_points : int, default=None
        Number of Gauss-Jacobi points used for inner products and matrix elements,
        `1 <= quad_points <= 256`.
        If None, the existing value won't change. Global default: 64.
    grid_size : int, default=None
        Number of cells of the finite difference oracle, at least 32.
        If None, the existing value won't change. Global default: 2048.
    tolerance_scale : float, default=None
        Factor multiplying every acceptance tolerance of the check suites.
        If None, the existing value won't change. Global default: the value of the
        environment variable `MONOPOLE_SPECTRA_TOLERANCE_SCALE` or 1.
    plot_backend : str, default=None
        The library used for plotting. Can be "matplotlib" or "plotly".
        If None, the existing value won't change. Global default: "matplotlib".

    See Also
    --------
    config_context : Context manager for global monopole-spectra configuration.
    get_config : Retrieve current values of the global configuration.

    Examples
    --------
    >>> from monopole_spectra import set_config
    >>> set_config(plot_backend="plotly")  # doctest: +SKIP
    """
    if quad_points is not None and not (
        isinstance(quad_points, int) and 1 <= quad_points <= MAX_QUAD_POINTS
    ):
        msg = (
            f"The quad_points must be an integer in [1, {MAX_QUAD_POINTS}], got "
            f"{quad_points}."
        )
        raise ValueError(msg)
    if grid_size is not None and not (
        isinstance(grid_size, int) and grid_size >= MIN_GRID_SIZE
    ):
        msg = f"The grid_size must be an integer >= {MIN_GRID_SIZE}, got {grid_size}."
        raise ValueError(msg)
    if tolerance_scale is not None and not tolerance_scale > 0:
        msg = f"The tolerance_scale must be > 0, got {tolerance_scale}."
        raise ValueError(msg)
    if plot_backend not in (None, "matplotlib", "plotly"):
        msg = f"The plot_backend must be matplotlib or plotly, got {plot_backend}."
        raise ValueError(msg)
    if plot_backend == "plotly" and not find_spec("plotly"):
        msg = (
            "In order to set the plot backend to plotly, plotly must be installed, "
            "i.e. via `pip install plotly`."
        )
        raise ModuleNotFoundError(msg)

    if quad_points is not None:
        _global_config["quad_points"] = quad_points
    if grid_size is not None:
        _global_config["grid_size"] = grid_size
    if tolerance_scale is not None:
        _global_config["tolerance_scale"] = float(tolerance_scale)
    if plot_backend is not None:
        _global_config["plot_backend"] = plot_backend


@contextmanager
def config_context(
    *,
    quad_points: Optional[int] = None,
    grid_size: Optional[int] = None,
    tolerance_scale: Optional[float] = None,
    plot_backend: Optional[str] = None,
) -> Iterator[None]:
    """Context manager for global monopole-spectra configuration.

    Parameters
    ----------
    quad_points : int, default=None
        Number of Gauss-Jacobi points used for inner products and matrix elements.
        If None, the existing value won't change. Global default: 64.
    grid_size : int, default=None
        Number of cells of the finite difference oracle.
        If None, the existing value won't change. Global default: 2048.
    tolerance_scale : float, default=None
        Factor multiplying every acceptance tolerance of the check suites.
        If None, the existing value won't change.
    plot_backend : str, default=None
        The library used for plotting. Can be "matplotlib" or "plotly".
        If None, the existing value won't change. Global default: "matplotlib".

    Yields
    ------
    None.

    See Also
    --------
    set_config : Set global monopole-spectra configuration.
    get_config : Retrieve current values of the global configuration.

    Notes
    -----
    All settings, not just those presently modified, will be returned to
    their previous values when the context manager is exited.

    Examples
    --------
    >>> import monopole_spectra
    >>> with monopole_spectra.config_context(quad_points=32):
    ...     monopole_spectra.get_config()["quad_points"]
    32
    """
    old_config = get_config()
    set_config(
        quad_points=quad_points,
        grid_size=grid_size,
        tolerance_scale=tolerance_scale,
        plot_backend=plot_backend,
    )

    try:
        yield
    finally:
        set_config(**old_config)


def resolve_quad_points(npoints: Optional[int]) -> int:
    """Return npoints or the configured default, validated."""
    if npoints is None:
        return _global_config["quad_points"]
    if not (isinstance(npoints, int) and npoints >= 1):
        msg = f"Argument npoints must be a positive integer, got {npoints}."
        raise ValueError(msg)
    return npoints


def scaled_tolerance(tol: float) -> float:
    """Multiply a tolerance by the configured tolerance_scale."""
    return tol * _global_config["tolerance_scale"]


def resolve_grid_size(grid_size: Optional[int]) -> int:
    """Return grid_size or the configured default, validated."""
    if grid_size is None:
        return _global_config["grid_size"]
    if not (isinstance(grid_size, int) and grid_size >= MIN_GRID_SIZE):
        msg = f"Argument grid_size must be an integer >= {MIN_GRID_SIZE}, got "
        msg += f"{grid_size}."
        raise ValueError(msg)
    return grid_size
