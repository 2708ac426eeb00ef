"""Best beam direction selection and cross-band direction usability metrics.

Two selectors produce a set of candidate steering angles from a filtered
spectrum:

* method ``m1`` keeps every circular local maximum within a relative power
  threshold of the global maximum;
* method ``m2`` considers all grid angles within the threshold and accepts
  them greedily, strongest first, skipping any candidate whose synthesized
  channel frequency response correlates too strongly with an already accepted
  direction. Distinct path delays decorrelate responses, so ``m2`` can split
  directions that merge into a single lobe of the spectrum.

Given a low-band and a high-band direction set, ``power_ratio`` measures how
much high-band power the low-band directions would collect relative to the
high band's own choice, and ``false_directions`` counts low-band directions
that are useless at the high band.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import BandChannel, LinkPair
from .metrics import PspResult, psp
from .pas import AngularGrid, FilteredPas, filter_pas, normalize_pas

_BANDS = (None, "low", "high")


@dataclass(frozen=True)
class SimilarityConfig:
    """Knobs of the direction-based similarity pipeline."""

    delta_th_db: float = 10.0
    delta_p_db: float = -30.0
    method: str = "m1"
    m2_correlation_threshold: float = 0.7
    m2_frequency_points: int = 101
    m2_bandwidth_ghz: float = 2.0

    def __post_init__(self):
        if not self.delta_th_db > 0.0:
            raise ValueError(f"delta_th_db must be > 0, got {self.delta_th_db!r}")
        if not self.delta_p_db < 0.0:
            raise ValueError(f"delta_p_db must be < 0, got {self.delta_p_db!r}")
        if self.method not in ("m1", "m2"):
            raise ValueError(f"method must be 'm1' or 'm2', got {self.method!r}")
        if not 0.0 < self.m2_correlation_threshold < 1.0:
            raise ValueError("m2_correlation_threshold must be in (0, 1)")
        if self.m2_frequency_points < 2:
            raise ValueError("m2_frequency_points must be >= 2")
        if not self.m2_bandwidth_ghz > 0.0:
            raise ValueError("m2_bandwidth_ghz must be > 0")


@dataclass(frozen=True)
class DirectionSet:
    """Selected steering angles for one band, with the selection context."""

    angles: tuple[float, ...]
    band: str | None = None
    method: str = "m1"
    threshold_db: float = 10.0

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))
        if len(self.angles) == 0:
            raise ValueError("a direction set cannot be empty")
        if len(set(self.angles)) != len(self.angles):
            raise ValueError("direction set contains duplicate angles")
        if self.band not in _BANDS:
            raise ValueError(f"band must be 'low' or 'high', got {self.band!r}")
        if self.method not in ("m1", "m2"):
            raise ValueError(f"method must be 'm1' or 'm2', got {self.method!r}")

    def __len__(self) -> int:
        return len(self.angles)


@dataclass(frozen=True)
class SimilarityReport:
    """Per-link outcome of the direction-based similarity pipeline."""

    power_ratio_db: float
    n_false: int
    card_low: int
    card_high: int
    psp: PspResult | None = None

    def __post_init__(self):
        if self.card_low < 1 or self.card_high < 1:
            raise ValueError("direction set cardinalities must be >= 1")
        if not 0 <= self.n_false <= self.card_low:
            raise ValueError("n_false must be in [0, card_low]")

    def to_dict(self) -> dict:
        return {
            "power_ratio_db": self.power_ratio_db,
            "n_false": self.n_false,
            "card_low": self.card_low,
            "card_high": self.card_high,
            "psp": self.psp.to_dict() if self.psp is not None else None,
        }


def _plateau_maxima(values) -> list[int]:
    """Indices of circular local maxima, one per plateau.

    A maximal run of equal values flanked by strictly smaller neighbors on
    both sides yields the run's central index (the lower-index one of the two
    centers for even run lengths). A constant spectrum has no flanked run and
    collapses to index 0, the smallest angle of the tied global maximum.
    """
    n = len(values)
    if n == 1:
        return [0]
    start = None
    for i in range(n):
        if values[i] != values[i - 1]:
            start = i
            break
    if start is None:
        return [0]
    runs = []  # (value, start index, length), circular order from `start`
    pos = start
    remaining = n
    while remaining > 0:
        val = values[pos % n]
        length = 1
        while length < remaining and values[(pos + length) % n] == val:
            length += 1
        runs.append((val, pos % n, length))
        pos += length
        remaining -= length
    centers = []
    for k, (val, run_start, length) in enumerate(runs):
        prev_val = runs[k - 1][0]
        next_val = runs[(k + 1) % len(runs)][0]
        if val > prev_val and val > next_val:
            centers.append((run_start + (length - 1) // 2) % n)
    return centers


def select_m1(pas: FilteredPas, delta_th_db: float, band: str | None = None) -> DirectionSet:
    """Local-maxima direction selection with a relative power threshold.

    Keeps the circular local maxima of the filtered spectrum that lie within
    ``delta_th_db`` of the global maximum. The global maximum always
    qualifies, so the result is never empty. Scaling all spectrum values by
    a common factor leaves the selection unchanged.
    """
    if not delta_th_db > 0.0:
        raise ValueError(f"delta_th_db must be > 0, got {delta_th_db!r}")
    v = pas.values
    vmax = float(v.max())
    kept = sorted(
        k for k in _plateau_maxima(v)
        if 10.0 * math.log10(float(v[k]) / vmax) >= -delta_th_db
    )
    angles = tuple(float(pas.grid.angles[k]) for k in kept)
    return DirectionSet(angles=angles, band=band, method="m1", threshold_db=float(delta_th_db))


def beam_cfr(
    channel: BandChannel,
    pattern,
    steer_deg: float,
    freq_points: int = 101,
    bandwidth_ghz: float = 2.0,
) -> np.ndarray:
    """Synthesized channel frequency response of a steered beam.

    Tap amplitudes are ``sqrt(power * gain)`` with the pattern steered to
    ``steer_deg``; tap phases rotate with the path delays over ``freq_points``
    frequencies spanning the carrier plus/minus half of ``bandwidth_ghz``.
    """
    if freq_points < 2:
        raise ValueError(f"freq_points must be >= 2, got {freq_points!r}")
    return _cfr_matrix(channel, pattern, np.array([float(steer_deg)]), freq_points, bandwidth_ghz)[0]


def _cfr_matrix(channel, pattern, steer_deg, freq_points, bandwidth_ghz):
    """Rows of beam responses, one per steering angle, columns over frequency."""
    powers = np.array([ray.power for ray in channel.rays])
    aoas = np.array([ray.aoa_azimuth for ray in channel.rays])
    delays = np.array([ray.delay for ray in channel.rays])
    f_hz = np.linspace(
        (channel.frequency - 0.5 * bandwidth_ghz) * 1e9,
        (channel.frequency + 0.5 * bandwidth_ghz) * 1e9,
        freq_points,
    )
    amplitudes = np.sqrt(powers * pattern.gain(steer_deg[:, None] - aoas))
    phasors = np.exp(-2j * np.pi * delays[:, None] * f_hz)
    return amplitudes.astype(complex) @ phasors


def select_m2(
    channel: BandChannel,
    pattern,
    grid: AngularGrid,
    config: SimilarityConfig,
    band: str | None = None,
) -> DirectionSet:
    """Correlation-gated greedy direction selection.

    All grid angles within ``delta_th_db`` of the spectrum's global maximum
    are candidates, not just local maxima. Walking them in descending
    spectrum order (angle breaks ties), a candidate is accepted when the
    normalized inner product of its beam response with every already accepted
    response stays below ``m2_correlation_threshold``. The global maximum is
    accepted first, so at least one direction survives.
    """
    pas = filter_pas(channel, pattern, grid)
    v = pas.values
    vmax = float(v.max())
    candidates = np.flatnonzero(10.0 * np.log10(v / vmax) >= -config.delta_th_db)
    order = candidates[np.lexsort((grid.angles[candidates], -v[candidates]))]
    responses = _cfr_matrix(
        channel, pattern, grid.angles[order],
        config.m2_frequency_points, config.m2_bandwidth_ghz,
    )
    norms = np.linalg.norm(responses, axis=1)
    accepted = [0]
    for i in range(1, len(order)):
        for a in accepted:
            corr = abs(np.vdot(responses[a], responses[i])) / (norms[a] * norms[i])
            if corr >= config.m2_correlation_threshold:
                break
        else:
            accepted.append(i)
    kept = sorted(int(order[i]) for i in accepted)
    angles = tuple(float(grid.angles[k]) for k in kept)
    return DirectionSet(angles=angles, band=band, method="m2", threshold_db=float(config.delta_th_db))


def _gather(pas: FilteredPas, directions: DirectionSet) -> np.ndarray:
    indices = [pas.grid.index_of(a) for a in directions.angles]
    return pas.values[indices]


def power_ratio(a_low: DirectionSet, a_high: DirectionSet, pas_high: FilteredPas) -> float:
    """High-band power collected at low-band directions vs its own, in dB.

    Ratio of the summed high-band spectrum values over the two direction
    sets; identical sets give exactly 0 dB. All angles must lie on the grid
    of the high-band spectrum.
    """
    num = float(_gather(pas_high, a_low).sum())
    den = float(_gather(pas_high, a_high).sum())
    return 10.0 * math.log10(num / den)


def false_directions(
    a_low: DirectionSet,
    a_high: DirectionSet,
    pas_high: FilteredPas,
    delta_p_db: float,
) -> int:
    """Count low-band directions below ``delta_p_db`` of the best high-band one."""
    if not delta_p_db < 0.0:
        raise ValueError(f"delta_p_db must be < 0, got {delta_p_db!r}")
    best = float(_gather(pas_high, a_high).max())
    low_values = _gather(pas_high, a_low)
    return int(np.count_nonzero(10.0 * np.log10(low_values / best) < delta_p_db))


def analyze_pair(
    pair: LinkPair,
    pattern_low,
    pattern_high,
    grid: AngularGrid,
    config: SimilarityConfig,
    include_psp: bool = True,
) -> SimilarityReport:
    """Direction-based similarity pipeline for one link pair.

    Filters each band through its pattern, selects directions per the
    configured method, and reports the power ratio, false direction count,
    set cardinalities, and (optionally) the spectrum-overlap percentage
    computed from the same filtered spectra.
    """
    pas_low = filter_pas(pair.low, pattern_low, grid)
    pas_high = filter_pas(pair.high, pattern_high, grid)
    if config.method == "m1":
        a_low = select_m1(pas_low, config.delta_th_db, band="low")
        a_high = select_m1(pas_high, config.delta_th_db, band="high")
    else:
        a_low = select_m2(pair.low, pattern_low, grid, config, band="low")
        a_high = select_m2(pair.high, pattern_high, grid, config, band="high")
    overlap = psp(normalize_pas(pas_low), normalize_pas(pas_high)) if include_psp else None
    return SimilarityReport(
        power_ratio_db=power_ratio(a_low, a_high, pas_high),
        n_false=false_directions(a_low, a_high, pas_high, config.delta_p_db),
        card_low=len(a_low),
        card_high=len(a_high),
        psp=overlap,
    )
