import json
from fractions import Fraction
from typing import Any

import polars as pl

SIGNIFICANT_DIGITS = 12


def format_float(x) -> float:
    """Round x to 12 significant digits, such that repr gives a stable string.

    Examples
    --------
    >>> format_float(2 / 3)
    0.666666666667
    >>> format_float(Fraction(1, 2))
    0.5
    """
    return float(f"{float(x):.{SIGNIFICANT_DIGITS}g}")


def float_to_str(x) -> str:
    """Shortest round-trip representation capped at 12 significant digits."""
    return repr(format_float(x))


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (float, Fraction)):
        return format_float(obj)
    if isinstance(obj, complex):
        return {"real": format_float(obj.real), "imag": format_float(obj.imag)}
    if hasattr(obj, "item"):
        # numpy scalars
        return _jsonable(obj.item())
    return str(obj)


def dumps_json(obj: Any) -> str:
    """Serialize obj with fixed float formatting and the insertion order of keys."""
    return json.dumps(_jsonable(obj), indent=2)


def frame_to_csv(df: pl.DataFrame) -> str:
    """Write a DataFrame to CSV with floats capped at 12 significant digits."""
    columns = []
    for name, dtype in zip(df.columns, df.dtypes):
        if dtype.is_float():
            values = [None if v is None else float_to_str(v) for v in df[name]]
            columns.append(pl.Series(name, values, dtype=pl.String))
        else:
            columns.append(df[name])
    return pl.DataFrame(columns).write_csv()
