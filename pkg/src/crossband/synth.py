"""Synthetic two-band link generator with controllable cross-band congruence.

Each link owns a set of shared propagation paths drawn once, which both bands
then observe through independent angle and power jitter. On top of those,
each band may carry exclusive weak paths 10 to 30 dB below the strongest
shared path, mimicking the diffuse components that show up at one carrier but
not the other. Zero jitter and zero exclusive paths give perfectly congruent
bands; growing either knob degrades congruence smoothly.

Randomness comes from numpy's PCG64 keyed by (seed, link index), so any link
can be regenerated alone and datasets are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .channel import BandChannel, LinkPair, Ray
from .units import db_to_linear

GENERATOR_NAME = "numpy-pcg64"


@dataclass(frozen=True)
class GenConfig:
    """Knobs of the synthetic link generator.

    ``shared_power_decay_db`` sets the nominal power ramp over shared paths
    (path i sits i times that many dB below path 0); the jitters are standard
    deviations of the per-band Gaussian perturbations applied on top.
    """

    n_shared_paths: int = 4
    n_low_only_paths: int = 3
    n_high_only_paths: int = 1
    shared_power_decay_db: float = 3.0
    angle_jitter_deg: float = 5.0
    power_jitter_db: float = 2.0
    delay_spread_ns: float = 50.0
    low_freq_ghz: float = 15.0
    high_freq_ghz: float = 28.0
    seed: int = 0

    def __post_init__(self):
        for name in ("n_shared_paths", "n_low_only_paths", "n_high_only_paths", "seed"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if self.n_shared_paths < 0 or self.n_low_only_paths < 0 or self.n_high_only_paths < 0:
            raise ValueError("path counts must be >= 0")
        if self.n_shared_paths + self.n_low_only_paths < 1:
            raise ValueError("the low band needs at least one path")
        if self.n_shared_paths + self.n_high_only_paths < 1:
            raise ValueError("the high band needs at least one path")
        if self.shared_power_decay_db < 0.0:
            raise ValueError("shared_power_decay_db must be >= 0")
        if self.angle_jitter_deg < 0.0 or self.power_jitter_db < 0.0:
            raise ValueError("jitter magnitudes must be >= 0")
        if self.delay_spread_ns < 0.0:
            raise ValueError("delay_spread_ns must be >= 0")
        if not 0.0 < self.low_freq_ghz <= self.high_freq_ghz:
            raise ValueError("need 0 < low_freq_ghz <= high_freq_ghz")
        if self.seed < 0:
            raise ValueError("seed must be >= 0")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> GenConfig:
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown generator config keys: {sorted(unknown)}")
        return cls(**data)


def generate_link(config: GenConfig, link_index: int) -> LinkPair:
    """Draw one two-band link; deterministic given (config.seed, link_index)."""
    if link_index < 0:
        raise ValueError(f"link_index must be >= 0, got {link_index!r}")
    rng = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=config.seed, spawn_key=(link_index,)))
    )
    n = config.n_shared_paths
    shared_aoa = rng.uniform(0.0, 360.0, n)
    shared_delay_ns = rng.exponential(config.delay_spread_ns, n)
    shared_power_db = -config.shared_power_decay_db * np.arange(n, dtype=float)

    def band_rays(extra_count: int) -> tuple[Ray, ...]:
        aoa = (shared_aoa + rng.normal(0.0, config.angle_jitter_deg, n)) % 360.0
        power_db = shared_power_db + rng.normal(0.0, config.power_jitter_db, n)
        rays = [
            Ray(power=db_to_linear(power_db[i]), delay=shared_delay_ns[i] * 1e-9,
                aoa_azimuth=aoa[i])
            for i in range(n)
        ]
        extra_aoa = rng.uniform(0.0, 360.0, extra_count)
        extra_delay_ns = rng.exponential(config.delay_spread_ns, extra_count)
        # Exclusive paths sit 10-30 dB below the strongest shared path, whose
        # nominal power is 0 dB.
        extra_deficit_db = rng.uniform(10.0, 30.0, extra_count)
        rays += [
            Ray(power=db_to_linear(-extra_deficit_db[i]), delay=extra_delay_ns[i] * 1e-9,
                aoa_azimuth=extra_aoa[i])
            for i in range(extra_count)
        ]
        return tuple(rays)

    link_id = f"link-{link_index:05d}"
    low = BandChannel(config.low_freq_ghz, band_rays(config.n_low_only_paths), link_id)
    high = BandChannel(config.high_freq_ghz, band_rays(config.n_high_only_paths), link_id)
    return LinkPair(low=low, high=high, link_id=link_id)


def generate_dataset(config: GenConfig, n_links: int) -> list[LinkPair]:
    """Links 0..n_links-1 from ``generate_link``; order carries no information."""
    if n_links < 1:
        raise ValueError(f"n_links must be >= 1, got {n_links!r}")
    return [generate_link(config, i) for i in range(n_links)]
