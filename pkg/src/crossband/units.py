"""Scalar conversions used throughout the package: dB scales and angle wrapping."""

from __future__ import annotations

import numpy as np


def db_to_linear(value_db):
    """Power quantity from dB to linear scale; works on scalars and arrays."""
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value):
    """Linear power ratio to dB."""
    return 10.0 * np.log10(value)


def wrap_offset_deg(offset_deg):
    """Wrap an angular offset into (-180, 180] degrees."""
    return 180.0 - (180.0 - offset_deg) % 360.0


def wrap_azimuth_deg(angle_deg):
    """Wrap an azimuth into [0, 360) degrees."""
    return angle_deg % 360.0
