"""Deterministic JSON emission.

Reports and dataset files must serialize to the same bytes on every run, so
dicts are emitted in insertion order (callers build them in a fixed order)
and report floats are rounded to a fixed number of significant digits before
serialization. Dataset files skip the rounding: path parameters round-trip
at full float precision.
"""

from __future__ import annotations

import json


def round_floats(obj, sig_digits: int = 12):
    """Copy of a JSON-ready structure with floats at ``sig_digits`` digits."""
    if isinstance(obj, float):
        return float(f"{obj:.{sig_digits}g}")
    if isinstance(obj, dict):
        return {k: round_floats(v, sig_digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, sig_digits) for v in obj]
    return obj


def dumps(obj, sig_digits: int | None = None) -> str:
    """Serialize with a trailing newline; optionally round floats first."""
    if sig_digits is not None:
        obj = round_floats(obj, sig_digits)
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def dump(obj, path, sig_digits: int | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(dumps(obj, sig_digits))
