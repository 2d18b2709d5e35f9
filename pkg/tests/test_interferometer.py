"""Detection statistics: printed probability laws, joint model, sampling."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosmocell import (
    DomainError,
    MZIConfig,
    SweepSpec,
    fringe_scan,
    joint_state_probabilities,
    scheme1_probabilities,
    scheme2_probabilities,
)
from cosmocell.interferometer import detection_stats

GRID = np.linspace(-2.0 * math.pi, 4.0 * math.pi, 10_000)


class TestPrintedLaws:
    def test_scheme2_pins(self):
        assert scheme2_probabilities(0.0) == pytest.approx((1.0, 0.0), abs=1e-15)
        assert scheme2_probabilities(math.pi) == pytest.approx((0.0, 1.0), abs=1e-15)
        assert scheme2_probabilities(math.pi / 3.0) == pytest.approx(
            (0.75, 0.25), abs=1e-15
        )

    def test_scheme1_pins(self):
        assert scheme1_probabilities(0.0) == pytest.approx((1.0, 0.0), abs=1e-15)
        assert scheme1_probabilities(math.pi) == pytest.approx((0.5, 0.5), abs=1e-12)
        p = scheme1_probabilities(math.pi / 2.0)
        assert p[0] == pytest.approx((2.0 + math.sqrt(2.0)) / 4.0, abs=1e-15)
        assert p[1] == pytest.approx((2.0 - math.sqrt(2.0)) / 4.0, abs=1e-15)

    def test_normalization_on_grid(self):
        for dphi in GRID:
            for fn in (scheme1_probabilities, scheme2_probabilities):
                p, q = fn(float(dphi))
                assert abs(p + q - 1.0) <= 1e-12
                assert -1e-15 <= p <= 1.0 + 1e-15

    def test_scheme1_majority_port(self):
        for dphi in GRID[::7]:
            p, q = scheme1_probabilities(float(dphi))
            assert p >= 0.5 >= q

    def test_periodicity(self):
        for dphi in GRID[::11]:
            for fn in (scheme1_probabilities, scheme2_probabilities):
                a = fn(float(dphi))
                b = fn(float(dphi) + 2.0 * math.pi)
                assert a == pytest.approx(b, abs=1e-12)

    def test_piezo_is_additive_offset(self):
        for dphi, pz in [(0.3, 1.1), (2.0, -0.4), (5.0, 9.0)]:
            assert scheme2_probabilities(dphi, pz) == pytest.approx(
                scheme2_probabilities(dphi - pz, 0.0), abs=1e-14
            )
            assert scheme1_probabilities(dphi, pz) == pytest.approx(
                scheme1_probabilities(dphi - pz, 0.0), abs=1e-14
            )


class TestJointModel:
    def test_definite_n2_reduces_to_scheme2(self):
        for dphi in np.linspace(0.0, 2.0 * math.pi, 1000):
            for eta in (0.0, 0.5, 1.0):
                a = joint_state_probabilities(
                    float(dphi), 0.37, eta=eta, medium="definite_n2"
                )
                b = scheme2_probabilities(float(dphi), 0.37)
                assert abs(a[0] - b[0]) <= 1e-12 and abs(a[1] - b[1]) <= 1e-12

    def test_definite_n1_ignores_cell_phase(self):
        base = joint_state_probabilities(0.0, 0.2, medium="definite_n1")
        for dphi in (0.5, 2.0, 4.4):
            assert joint_state_probabilities(dphi, 0.2, medium="definite_n1") == (
                pytest.approx(base, abs=1e-14)
            )

    def test_cat_closed_form(self):
        # eta=0 cat state: p_plus = (3 + cos dphi) / 4
        for dphi in np.linspace(0.0, 2.0 * math.pi, 257):
            p, q = joint_state_probabilities(float(dphi), eta=0.0, medium="cat")
            assert p == pytest.approx((3.0 + math.cos(dphi)) / 4.0, abs=1e-12)

    def test_agreement_with_scheme1_at_nodes(self):
        for dphi in (0.0, math.pi, 2.0 * math.pi, -math.pi):
            a = joint_state_probabilities(dphi, eta=0.0, medium="cat")
            b = scheme1_probabilities(dphi)
            assert a == pytest.approx(b, abs=1e-12)

    def test_quarter_wave_discrepancy_pinned(self):
        """The two routes genuinely disagree at dphi = pi/2; do not 'fix' this."""
        joint = joint_state_probabilities(math.pi / 2.0, eta=0.0, medium="cat")
        printed = scheme1_probabilities(math.pi / 2.0)
        assert joint[0] == pytest.approx(0.75, abs=1e-12)
        assert printed[0] == pytest.approx((2.0 + math.sqrt(2.0)) / 4.0, abs=1e-12)
        assert printed[0] - joint[0] == pytest.approx(
            (math.sqrt(2.0) - 1.0) / 4.0, abs=1e-12
        )

    @settings(max_examples=120, deadline=None)
    @given(
        dphi=st.floats(-10.0, 10.0),
        piezo=st.floats(-10.0, 10.0),
        eta=st.floats(0.0, 1.0),
        medium=st.sampled_from(["cat", "definite_n1", "definite_n2"]),
    )
    def test_normalized_probabilities(self, dphi, piezo, eta, medium):
        p, q = joint_state_probabilities(dphi, piezo, eta=eta, medium=medium)
        assert abs(p + q - 1.0) <= 1e-12
        assert -1e-12 <= p <= 1.0 + 1e-12

    def test_validation(self):
        with pytest.raises(DomainError):
            joint_state_probabilities(0.0, eta=1.5)
        with pytest.raises(DomainError):
            joint_state_probabilities(0.0, medium="thermal")


class TestDetectionStats:
    def test_deterministic_counts(self):
        cfg = MZIConfig(scheme="II", n0=1_000_000)
        row = detection_stats(cfg, math.pi / 3.0)
        assert (row.counts_plus, row.counts_minus) == (750_000, 250_000)
        assert row.mean_plus == pytest.approx(750_000.0, rel=1e-12)

    def test_rounding_keeps_mean(self):
        cfg = MZIConfig(scheme="II", n0=3)
        row = detection_stats(cfg, math.pi / 2.0)
        assert row.counts_plus == 2  # round(1.5) banker's -> 2
        assert row.mean_plus == pytest.approx(1.5, rel=1e-12)

    def test_config_validation(self):
        with pytest.raises(DomainError):
            MZIConfig(scheme="III")
        with pytest.raises(DomainError):
            MZIConfig(n0=-1)
        with pytest.raises(DomainError):
            MZIConfig(eta=2.0)
        with pytest.raises(DomainError):
            MZIConfig(sampling="uniform")
        with pytest.raises(DomainError):
            MZIConfig(piezo_phase=math.inf)


class TestFringeScan:
    L = 0.01
    LAMBDA0 = 780e-9

    def test_piezo_sweep_full_visibility(self):
        cfg = MZIConfig(scheme="II", n0=10_000)
        sweep = SweepSpec("piezo", 0.0, 2.0 * math.pi, 9)
        scan = fringe_scan(cfg, sweep, H=0.0, L=self.L, lambda0=self.LAMBDA0)
        # dphi = 0: counts_plus traces n0 (1 + cos(-piezo)) / 2
        expect = 10_000 * 0.5 * (1.0 + np.cos(-scan.sweep_values))
        assert np.allclose(scan.mean_plus, expect, atol=1e-9)
        vis = (scan.p_plus.max() - scan.p_plus.min()) / (
            scan.p_plus.max() + scan.p_plus.min()
        )
        assert vis == pytest.approx(1.0, abs=1e-12)

    def test_hubble_sweep_phase_span(self):
        cfg = MZIConfig(scheme="II")
        sweep = SweepSpec("hubble", 0.01, 0.1, 101)
        scan = fringe_scan(cfg, sweep, H=0.0, L=self.L, lambda0=self.LAMBDA0)
        span = (scan.delta_phi[-1] - scan.delta_phi[0]) / math.pi
        assert abs(span - 21.15) <= 0.05
        crossings = int(np.sum(np.diff(np.sign(scan.p_plus - 0.5)) != 0))
        assert 19 <= crossings <= 23

    def test_hubble_sweep_is_hl(self):
        cfg = MZIConfig(scheme="II")
        sweep = SweepSpec("hubble", 0.05, 0.05, 2)
        scan = fringe_scan(cfg, sweep, H=0.0, L=self.L, lambda0=self.LAMBDA0)
        from cosmocell import phase_difference_closed

        expect = phase_difference_closed(0.05 / self.L, self.L, self.LAMBDA0)
        assert scan.delta_phi[0] == pytest.approx(expect, rel=1e-12)

    def test_sweep_validation(self):
        with pytest.raises(DomainError, match="HL<2"):
            SweepSpec("hubble", 0.01, 3.0, 10)
        with pytest.raises(DomainError):
            SweepSpec("piezo", 0.0, 1.0, 1)
        with pytest.raises(DomainError):
            SweepSpec("frequency", 0.0, 1.0, 10)

    def test_poisson_reproducible(self):
        cfg = MZIConfig(scheme="II", n0=10_000, sampling="poisson", seed=42)
        sweep = SweepSpec("piezo", 0.0, 2.0 * math.pi, 50)
        a = fringe_scan(cfg, sweep, H=5.0, L=self.L, lambda0=self.LAMBDA0)
        b = fringe_scan(cfg, sweep, H=5.0, L=self.L, lambda0=self.LAMBDA0)
        assert np.array_equal(a.counts_plus, b.counts_plus)
        assert np.array_equal(a.counts_minus, b.counts_minus)
        c = fringe_scan(
            MZIConfig(scheme="II", n0=10_000, sampling="poisson", seed=43),
            sweep,
            H=5.0,
            L=self.L,
            lambda0=self.LAMBDA0,
        )
        assert not np.array_equal(a.counts_plus, c.counts_plus)

    def test_poisson_mean_tracks_probability(self):
        n0, reps = 10_000, 600
        cfg = MZIConfig(scheme="II", n0=n0, sampling="poisson", seed=7)
        sweep = SweepSpec("piezo", 0.9, 0.9, reps)  # constant rows = iid draws
        scan = fringe_scan(cfg, sweep, H=5.0, L=self.L, lambda0=self.LAMBDA0)
        p = scan.p_plus[0]
        sigma = math.sqrt(n0 * p / reps)
        assert abs(scan.counts_plus.mean() - n0 * p) <= 4.0 * sigma

    def test_scheme1_row_at_pi(self):
        # H chosen so the closed-form cell phase is exactly pi
        H = math.sqrt(6.0 * self.LAMBDA0 / self.L**3)
        cfg = MZIConfig(scheme="I", n0=100)
        sweep = SweepSpec("piezo", 0.0, 0.0, 2)
        scan = fringe_scan(cfg, sweep, H=H, L=self.L, lambda0=self.LAMBDA0)
        assert scan.delta_phi[0] == pytest.approx(math.pi, rel=1e-12)
        assert scan.p_plus[0] == pytest.approx(0.5, abs=1e-7)
        assert scan.counts_plus[0] == 50
