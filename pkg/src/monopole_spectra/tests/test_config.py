from importlib.util import find_spec

import pytest

from monopole_spectra import config_context, get_config, set_config
from monopole_spectra._config import (
    TOLERANCE_SCALE_ENV,
    _tolerance_scale_from_env,
    resolve_grid_size,
    resolve_quad_points,
    scaled_tolerance,
)


@pytest.mark.parametrize(
    ("param", "value", "msg"),
    [
        ("quad_points", 0, "The quad_points must be an integer in"),
        ("quad_points", 257, "The quad_points must be an integer in"),
        ("quad_points", 2.0, "The quad_points must be an integer in"),
        ("grid_size", 31, "The grid_size must be an integer >= 32"),
        ("tolerance_scale", 0, "The tolerance_scale must be > 0"),
        ("plot_backend", "XXX", "The plot_backend must be"),
    ],
)
def test_set_config_raises(param, value, msg):
    """Test that set_config raises errors."""
    with pytest.raises(ValueError, match=msg):
        set_config(**{param: value})


def test_set_config_raises_plotly_not_installed():
    if find_spec("plotly"):
        pytest.skip("This test can only work if plotly is NOT installed.")
    msg = "In order to set the plot backend to plotly, plotly must be installed"
    with pytest.raises(ModuleNotFoundError, match=msg):
        set_config(plot_backend="plotly")


def test_config_context():
    # Default values.
    default = get_config()
    assert default["quad_points"] == 64
    assert default["grid_size"] == 2048
    assert default["plot_backend"] == "matplotlib"

    # Not using as a context manager affects nothing
    config_context(quad_points=8)
    assert get_config()["quad_points"] == 64

    with config_context(quad_points=8, grid_size=64):
        assert get_config() == {**default, "quad_points": 8, "grid_size": 64}
    assert get_config() == default

    with config_context(tolerance_scale=10.0):
        with config_context(tolerance_scale=None):
            assert get_config()["tolerance_scale"] == 10.0

        with config_context(quad_points=16):
            # global setting will not be retained outside of context that
            # did not modify this setting
            set_config(tolerance_scale=3.0)
            assert get_config()["tolerance_scale"] == 3.0

        assert get_config()["tolerance_scale"] == 10.0

    assert get_config() == default

    # No positional arguments
    with pytest.raises(TypeError):
        config_context(True)  # noqa: FBT003

    # No unknown arguments
    with pytest.raises(TypeError):
        config_context(do_something_else=True).__enter__()


def test_config_context_plotly():
    pytest.importorskip("plotly")
    with config_context(plot_backend="plotly"):
        assert get_config()["plot_backend"] == "plotly"
    assert get_config()["plot_backend"] == "matplotlib"


@pytest.mark.parametrize(("value", "expected"), [(None, 1.0), ("", 1.0), ("2.5", 2.5)])
def test_tolerance_scale_from_env(monkeypatch, value, expected):
    if value is None:
        monkeypatch.delenv(TOLERANCE_SCALE_ENV, raising=False)
    else:
        monkeypatch.setenv(TOLERANCE_SCALE_ENV, value)
    assert _tolerance_scale_from_env() == expected


@pytest.mark.parametrize(("value", "msg"), [("abc", "must be a float"), ("-1", "> 0")])
def test_tolerance_scale_from_env_raises(monkeypatch, value, msg):
    monkeypatch.setenv(TOLERANCE_SCALE_ENV, value)
    with pytest.raises(ValueError, match=msg):
        _tolerance_scale_from_env()


def test_resolve_defaults():
    with config_context(quad_points=12, grid_size=128, tolerance_scale=4.0):
        assert resolve_quad_points(None) == 12
        assert resolve_quad_points(5) == 5
        assert resolve_grid_size(None) == 128
        assert resolve_grid_size(256) == 256
        assert scaled_tolerance(1e-9) == pytest.approx(4e-9)
    with pytest.raises(ValueError, match="Argument npoints must be a positive"):
        resolve_quad_points(0)
    with pytest.raises(ValueError, match="Argument grid_size must be an integer"):
        resolve_grid_size(16)
