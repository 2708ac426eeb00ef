"""Gain patterns: shapes, symmetry, wrapping, tabulation."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import crossband as cb

offsets = st.floats(-720.0, 720.0, allow_nan=False)
# eighth-degree multiples keep the wrap arithmetic exact, so bitwise
# symmetry / periodicity assertions stay meaningful
dyadic_offsets = st.integers(-5760, 5760).map(lambda k: k / 8.0)


class TestGpp3:
    def test_peak_is_zero_db(self, gpp3_10):
        assert float(gpp3_10.gain_db(0.0)) == 0.0
        assert cb.gain_at(gpp3_10, 0.0) == 1.0

    def test_half_power_at_half_beamwidth(self, gpp3_10):
        assert float(gpp3_10.gain_db(5.0)) == pytest.approx(-3.0, abs=1e-12)
        assert float(gpp3_10.gain_db(-5.0)) == pytest.approx(-3.0, abs=1e-12)
        assert cb.gain_at(gpp3_10, 5.0) == pytest.approx(10.0 ** -0.3, rel=1e-12)

    def test_floor_clips_far_offsets(self, gpp3_10):
        assert float(gpp3_10.gain_db(180.0)) == -30.0
        assert cb.gain_at(gpp3_10, 180.0) == pytest.approx(1e-3, rel=1e-12)
        # clip starts where 12*(x/hpbw)^2 = a_max: x = 10*sqrt(30/12)
        edge = 10.0 * math.sqrt(30.0 / 12.0)
        assert float(gpp3_10.gain_db(edge + 0.001)) == -30.0
        assert float(gpp3_10.gain_db(edge - 0.001)) > -30.0

    @given(dyadic_offsets)
    def test_symmetric_and_periodic(self, x):
        pat = cb.synth_3gpp(hpbw_deg=25.0, a_max_db=20.0)
        assert float(pat.gain_db(x)) == float(pat.gain_db(-x))
        assert float(pat.gain_db(x)) == float(pat.gain_db(x + 360.0))

    @given(offsets)
    def test_nearly_symmetric_off_grid(self, x):
        pat = cb.synth_3gpp(hpbw_deg=25.0, a_max_db=20.0)
        assert float(pat.gain_db(x)) == pytest.approx(
            float(pat.gain_db(-x)), abs=1e-9
        )

    @given(offsets)
    def test_gain_matches_gain_db(self, x):
        pat = cb.synth_3gpp(hpbw_deg=25.0, a_max_db=20.0)
        assert float(pat.gain(x)) == pytest.approx(
            10.0 ** (float(pat.gain_db(x)) / 10.0), rel=1e-12
        )

    def test_measured_beamwidth_matches_parameter(self, gpp3_10):
        assert cb.hpbw(gpp3_10) == pytest.approx(10.0, abs=0.02)

    @pytest.mark.parametrize("hpbw_deg", [0.0, -10.0, 181.0])
    def test_bad_beamwidth_rejected(self, hpbw_deg):
        with pytest.raises(ValueError):
            cb.synth_3gpp(hpbw_deg=hpbw_deg, a_max_db=30.0)

    def test_bad_floor_rejected(self):
        with pytest.raises(ValueError):
            cb.synth_3gpp(hpbw_deg=10.0, a_max_db=0.0)


class TestUla:
    def test_boresight_peak(self, ula4, ula8):
        assert float(ula4.gain_db(0.0)) == 0.0
        assert float(ula8.gain_db(0.0)) == 0.0

    def test_nulls_at_grating_angles(self, ula4, ula8):
        # half-wavelength spacing: nulls where sin(theta) = k / n_elements
        assert cb.gain_at(ula4, 30.0) < 1e-30
        assert cb.gain_at(ula8, math.degrees(math.asin(0.25))) < 1e-30

    def test_first_sidelobe_levels(self, ula4, ula8):
        assert float(ula4.gain_db(47.078)) == pytest.approx(-11.30, abs=0.01)
        assert float(ula8.gain_db(21.0695)) == pytest.approx(-12.80, abs=0.01)

    def test_backplane_is_constant_floor(self, ula4):
        for off in (91.0, -120.0, 179.0, 180.0):
            assert cb.gain_at(ula4, off) == pytest.approx(1e-6, rel=1e-12)

    def test_front_half_plane_boundary_uses_array_factor(self, ula4):
        # sin(90 deg) = 1 lands on a null for even element counts
        assert cb.gain_at(ula4, 90.0) < 1e-30

    def test_measured_beamwidths(self, ula4, ula8):
        assert cb.hpbw(ula4) == pytest.approx(26.28, abs=0.02)
        assert cb.hpbw(ula8) == pytest.approx(12.78, abs=0.02)

    def test_narrows_with_more_elements(self):
        widths = [cb.hpbw(cb.synth_ula(n)) for n in (2, 4, 8, 16)]
        assert widths == sorted(widths, reverse=True)

    @given(dyadic_offsets)
    def test_symmetric_and_periodic(self, x):
        pat = cb.synth_ula(n_elements=4)
        assert float(pat.gain(x)) == float(pat.gain(-x))
        assert float(pat.gain(x)) == float(pat.gain(x + 360.0))

    @pytest.mark.parametrize("n", [1, 0, 2.5])
    def test_bad_element_count_rejected(self, n):
        with pytest.raises(ValueError):
            cb.synth_ula(n_elements=n)

    def test_bad_spacing_and_floor_rejected(self):
        with pytest.raises(ValueError):
            cb.synth_ula(4, spacing_wavelengths=0.0)
        with pytest.raises(ValueError):
            cb.synth_ula(4, backplane_floor_db=0.0)


class TestTabulated:
    def test_interpolates_linearly_in_db(self):
        pat = cb.TabulatedPattern(
            np.array([-180.0, -90.0, 0.0, 90.0, 180.0]),
            np.array([-40.0, -20.0, 0.0, -20.0, -40.0]),
        )
        assert float(pat.gain_db(45.0)) == pytest.approx(-10.0)
        assert float(pat.gain_db(-135.0)) == pytest.approx(-30.0)

    def test_samples_renormalized_to_zero_peak(self):
        pat = cb.TabulatedPattern(np.array([0.0, 90.0]), np.array([3.0, -7.0]))
        assert float(pat.gain_db(0.0)) == 0.0
        assert float(pat.gain_db(90.0)) == -10.0

    def test_peak_off_zero_rejected(self):
        with pytest.raises(ValueError):
            cb.TabulatedPattern(np.array([0.0, 90.0]), np.array([-10.0, 0.0]))

    def test_too_few_or_nonfinite_samples_rejected(self):
        with pytest.raises(ValueError):
            cb.TabulatedPattern(np.array([0.0]), np.array([0.0]))
        with pytest.raises(ValueError):
            cb.TabulatedPattern(np.array([0.0, 90.0]), np.array([0.0, np.nan]))

    def test_duplicate_offsets_collapsed(self):
        pat = cb.TabulatedPattern(
            np.array([0.0, 90.0, 90.0]), np.array([0.0, -10.0, -20.0])
        )
        assert len(pat.offsets_deg) == 2

    def test_wraps_around_the_circle(self):
        pat = cb.TabulatedPattern(
            np.array([-90.0, 0.0, 90.0]), np.array([-20.0, 0.0, -10.0])
        )
        # between +90 and -90 going through the back: period-360 interpolation
        assert float(pat.gain_db(180.0)) == pytest.approx(-15.0)


class TestCsvRoundTrip:
    def test_gpp3_round_trip_exact_at_samples(self, tmp_path, gpp3_10):
        path = tmp_path / "pat.csv"
        cb.pattern_to_csv(gpp3_10, path, step_deg=0.5)
        loaded = cb.pattern_from_csv(path)
        xs = np.arange(-180.0, 180.5, 0.5)
        np.testing.assert_allclose(
            loaded.gain_db(xs), gpp3_10.gain_db(xs), atol=1e-9
        )

    def test_midpoints_follow_db_interpolation(self, tmp_path, gpp3_10):
        path = tmp_path / "pat.csv"
        cb.pattern_to_csv(gpp3_10, path, step_deg=1.0)
        loaded = cb.pattern_from_csv(path)
        mid = float(loaded.gain_db(3.5))
        ends = gpp3_10.gain_db(np.array([3.0, 4.0]))
        assert mid == pytest.approx(float(ends.mean()), abs=1e-9)

    def test_header_optional(self, tmp_path):
        path = tmp_path / "bare.csv"
        path.write_text("0,0\n90,-10\n")
        pat = cb.pattern_from_csv(path)
        assert float(pat.gain_db(90.0)) == -10.0

    def test_bad_rows_reported_with_line_numbers(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("offset_deg,gain_db\n0,0\noops,nope\n")
        with pytest.raises(ValueError, match="line 3"):
            cb.pattern_from_csv(path)

    def test_step_must_divide_circle(self, tmp_path, gpp3_10):
        with pytest.raises(ValueError):
            cb.pattern_to_csv(gpp3_10, tmp_path / "x.csv", step_deg=0.7)


class TestHpbwEdgeCases:
    def test_shallow_pattern_has_no_half_power_width(self):
        flat = cb.synth_3gpp(hpbw_deg=10.0, a_max_db=2.5)
        with pytest.raises(ValueError):
            cb.hpbw(flat)

    def test_tabulated_pattern_measurable(self):
        pat = cb.TabulatedPattern(
            np.array([-180.0, -10.0, 0.0, 10.0, 180.0]),
            np.array([-30.0, -6.0, 0.0, -6.0, -30.0]),
        )
        assert cb.hpbw(pat) == pytest.approx(10.0, abs=0.02)
