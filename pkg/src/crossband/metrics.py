"""Spectrum-overlap similarity: total variation distance and its percentage form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import LinkPair
from .pas import AngularGrid, NormalizedPas, filter_pas, normalize_pas


@dataclass(frozen=True)
class PspResult:
    """Total variation distance and the equivalent similarity percentage."""

    d_tv: float
    psp_percent: float

    def __post_init__(self):
        if not 0.0 <= self.d_tv <= 1.0:
            raise ValueError(f"d_tv must be in [0, 1], got {self.d_tv!r}")
        if self.psp_percent != (1.0 - self.d_tv) * 100.0:
            raise ValueError("psp_percent must equal (1 - d_tv) * 100 exactly")

    def to_dict(self) -> dict:
        return {"d_tv": self.d_tv, "psp_percent": self.psp_percent}


def total_variation(a: NormalizedPas, b: NormalizedPas) -> float:
    """Total variation distance between two unit-mass angular densities.

    Half the absolute pointwise difference integrated over the circle with
    the grid step as measure; both inputs must share the same grid.
    """
    if a.grid.step_deg != b.grid.step_deg or a.grid.n_points != b.grid.n_points:
        raise ValueError(
            f"mismatched grids: step {a.grid.step_deg} vs {b.grid.step_deg}"
        )
    d = 0.5 * float(np.abs(a.density - b.density).sum()) * a.grid.step_deg
    return min(max(d, 0.0), 1.0)


def psp(a: NormalizedPas, b: NormalizedPas) -> PspResult:
    """Similarity percentage, 100 * (1 - total variation distance)."""
    d = total_variation(a, b)
    return PspResult(d_tv=d, psp_percent=(1.0 - d) * 100.0)


def pair_psp(pair: LinkPair, pattern_low, grid: AngularGrid, pattern_high=None) -> PspResult:
    """Full overlap pipeline for a link pair: filter both bands, normalize, compare.

    By default the same pattern filters both bands; pass ``pattern_high`` to
    use band-specific beamwidths.
    """
    if pattern_high is None:
        pattern_high = pattern_low
    low = normalize_pas(filter_pas(pair.low, pattern_low, grid))
    high = normalize_pas(filter_pas(pair.high, pattern_high, grid))
    return psp(low, high)
