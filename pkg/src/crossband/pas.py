"""Beam-filtered power angular spectra on a circular grid.

A discrete channel is turned into a spectrum by steering a beampattern to
every grid angle and collecting the gain-weighted sum of ray powers. Ray
arrival angles are never snapped to the grid: the pattern is evaluated at the
exact per-ray offset, so refining the grid reproduces coarse-grid values bit
for bit. Normalizing a spectrum to unit mass (with the grid step as the
integration measure) makes it comparable as a probability density.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .channel import BandChannel


@dataclass(frozen=True)
class AngularGrid:
    """Uniform circular grid {0, step, ..., 360 - step} in degrees."""

    step_deg: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.step_deg <= 10.0:
            raise ValueError(f"grid step must be in (0, 10] degrees, got {self.step_deg!r}")
        n = round(360.0 / self.step_deg)
        if abs(n * self.step_deg - 360.0) > 1e-9:
            raise ValueError(f"grid step must divide 360 degrees, got {self.step_deg!r}")
        angles = np.arange(n) * self.step_deg
        angles.flags.writeable = False
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_angles", angles)

    @property
    def n_points(self) -> int:
        return self._n

    @property
    def angles(self) -> np.ndarray:
        return self._angles

    def index_of(self, angle_deg: float) -> int:
        """Index of a grid angle; rejects angles not on the grid."""
        wrapped = angle_deg % 360.0
        k = round(wrapped / self.step_deg) % self._n
        delta = abs(self._angles[k] - wrapped)
        if min(delta, 360.0 - delta) > 1e-9:
            raise ValueError(f"{angle_deg!r} is not a grid angle for step {self.step_deg}")
        return k


@dataclass(frozen=True, eq=False)
class FilteredPas:
    """Beam-collected power versus steering angle, one value per grid angle."""

    grid: AngularGrid
    values: np.ndarray
    source_frequency: float

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != (self.grid.n_points,):
            raise ValueError(
                f"expected {self.grid.n_points} values for step {self.grid.step_deg}, "
                f"got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)) or not np.all(values > 0.0):
            raise ValueError("filtered spectrum values must be finite and strictly positive")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def to_csv(self, path) -> None:
        _write_angle_value_csv(path, self.grid.angles, self.values)


@dataclass(frozen=True, eq=False)
class NormalizedPas:
    """Per-degree probability density over steering angle; unit total mass."""

    grid: AngularGrid
    density: np.ndarray

    def __post_init__(self):
        density = np.array(self.density, dtype=float)
        if density.shape != (self.grid.n_points,):
            raise ValueError("density length does not match the grid")
        if not np.all(np.isfinite(density)) or not np.all(density >= 0.0):
            raise ValueError("densities must be finite and non-negative")
        mass = float(density.sum()) * self.grid.step_deg
        if abs(mass - 1.0) > 1e-9:
            raise ValueError(f"density mass must be 1 within 1e-9, got {mass!r}")
        density.flags.writeable = False
        object.__setattr__(self, "density", density)

    def to_csv(self, path) -> None:
        _write_angle_value_csv(path, self.grid.angles, self.density)


def filter_pas(channel: BandChannel, pattern, grid: AngularGrid) -> FilteredPas:
    """Filter a discrete channel through a beampattern on a circular grid.

    For every grid angle the pattern is steered there and the ray powers are
    accumulated with the gain at the exact angular offset of each ray.
    Accumulation runs in ray order at every grid point, so results are
    deterministic regardless of how callers parallelize over grid angles.
    """
    angles = grid.angles
    values = np.zeros(grid.n_points)
    for ray in channel.rays:
        values += ray.power * pattern.gain(angles - ray.aoa_azimuth)
    return FilteredPas(grid=grid, values=values, source_frequency=channel.frequency)


def normalize_pas(pas: FilteredPas) -> NormalizedPas:
    """Scale a filtered spectrum to a unit-mass density (grid step as measure)."""
    mass = float(pas.values.sum()) * pas.grid.step_deg
    return NormalizedPas(grid=pas.grid, density=pas.values / mass)


def _write_angle_value_csv(path, angles, values):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["angle_deg", "value"])
        for a, v in zip(angles, values):
            writer.writerow([f"{a:.12g}", f"{v:.12g}"])
