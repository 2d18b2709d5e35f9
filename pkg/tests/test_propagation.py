"""Phase quadrature vs closed form, and the RW redshift factor."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosmocell import (
    DomainError,
    IndexProfile,
    SpacetimeSpec,
    axial_profile,
    optical_phase,
    phase_difference_closed,
    redshift_factor,
)

L_CELL = 0.01
LAMBDA0 = 780e-9


def quadratic_profile(HL: float, L: float = L_CELL, grid: int = 1001) -> IndexProfile:
    return axial_profile(SpacetimeSpec("dS", H=HL / L), L, grid_size=grid)


class TestOpticalPhase:
    def test_vacuum_arm(self):
        z = np.linspace(0.0, L_CELL, 101)
        prof = IndexProfile(z, np.ones_like(z), (0.0, L_CELL))
        res = optical_phase(prof, LAMBDA0)
        assert res.delta_phi == 0.0
        assert res.phi == pytest.approx(2.0 * math.pi * L_CELL / LAMBDA0, rel=1e-12)

    def test_constant_index(self):
        z = np.linspace(0.0, L_CELL, 101)
        prof = IndexProfile(z, np.full_like(z, 1.5), (0.0, L_CELL))
        res = optical_phase(prof, LAMBDA0)
        assert res.delta_phi == pytest.approx(math.pi * L_CELL / LAMBDA0, rel=1e-12)

    def test_cell_phase_number(self):
        res = optical_phase(quadratic_profile(0.1), LAMBDA0)
        # H^2 L^3 / (6 lambda0) = (HL)^2 L / (6 lambda0) with HL=0.1, L=1 cm
        assert res.delta_phi / math.pi == pytest.approx(0.01 * 0.01 / (6.0 * 780e-9), rel=1e-12)
        assert res.delta_phi / math.pi == pytest.approx(21.3675213675, rel=1e-10)
        assert res.method == "quadrature"

    @pytest.mark.parametrize("HL", [0.001, 0.01, 0.05, 0.1, 0.3, 0.5])
    def test_closed_form_agreement(self, HL):
        res = optical_phase(quadratic_profile(HL), LAMBDA0)
        closed = phase_difference_closed(HL / L_CELL, L_CELL, LAMBDA0)
        assert abs(res.delta_phi - closed) / closed <= 1e-6

    @settings(max_examples=40, deadline=None)
    @given(HL=st.floats(1e-3, 1.9))
    def test_phase_floor_for_dense_media(self, HL):
        res = optical_phase(quadratic_profile(HL), LAMBDA0)
        assert res.phi >= 2.0 * math.pi * L_CELL / LAMBDA0

    def test_too_few_samples(self):
        prof = IndexProfile(np.array([0.0, L_CELL]), np.ones(2), (0.0, L_CELL))
        with pytest.raises(DomainError):
            optical_phase(prof, LAMBDA0)

    def test_bad_wavelength(self):
        with pytest.raises(DomainError):
            optical_phase(quadratic_profile(0.1), 0.0)
        with pytest.raises(DomainError):
            optical_phase(quadratic_profile(0.1), -1e-6)


class TestClosedForm:
    def test_flat_limit(self):
        assert phase_difference_closed(0.0, L_CELL, LAMBDA0) == 0.0

    def test_sweep_span(self):
        span = phase_difference_closed(
            0.1 / L_CELL, L_CELL, LAMBDA0
        ) - phase_difference_closed(0.01 / L_CELL, L_CELL, LAMBDA0)
        assert abs(span / math.pi - 21.15) <= 0.05

    def test_midpoint_value(self):
        dphi = phase_difference_closed(0.05 / L_CELL, L_CELL, LAMBDA0)
        assert dphi / math.pi == pytest.approx(5.342, abs=5e-4)

    def test_validation(self):
        with pytest.raises(DomainError):
            phase_difference_closed(1.0, 0.0, LAMBDA0)
        with pytest.raises(DomainError):
            phase_difference_closed(-1.0, L_CELL, LAMBDA0)
        with pytest.raises(DomainError):
            phase_difference_closed(1.0, L_CELL, math.nan)


class TestRedshift:
    def exp_spec(self, H=0.25):
        return SpacetimeSpec("RW", scale_factor=lambda t: math.exp(H * t))

    def test_no_elapsed_time(self):
        assert redshift_factor(self.exp_spec(), 1.3, 1.3) == 1.0

    def test_doubling_time(self):
        H = 0.25
        z1 = redshift_factor(self.exp_spec(H), 0.0, math.log(2.0) / H)
        assert z1 == pytest.approx(2.0, rel=1e-12)

    def test_static_universe(self):
        spec = SpacetimeSpec("RW", scale_factor=lambda t: 1.0)
        assert redshift_factor(spec, -5.0, 17.0) == 1.0

    def test_contracting_blueshift(self):
        spec = SpacetimeSpec("RW", scale_factor=lambda t: math.exp(-0.1 * t))
        assert redshift_factor(spec, 0.0, 1.0) < 1.0

    def test_wrong_kind(self):
        with pytest.raises(DomainError, match="RW"):
            redshift_factor(SpacetimeSpec("dS", H=1.0), 0.0, 1.0)

    def test_time_ordering(self):
        with pytest.raises(DomainError):
            redshift_factor(self.exp_spec(), 2.0, 1.0)

    def test_domain_respected(self):
        spec = SpacetimeSpec(
            "RW", scale_factor=lambda t: math.exp(t), t_domain=(0.0, 1.0)
        )
        with pytest.raises(DomainError):
            redshift_factor(spec, -0.5, 0.5)
