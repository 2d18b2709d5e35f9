"""Ray-tracing tests: Bouguer conservation, deflection dual routes, capture."""

import math

import numpy as np
import pytest

from cosmocell import (
    DomainError,
    IndexProfile,
    SpacetimeSpec,
    circular_orbit_radius,
    critical_impact_parameter,
    deflection_angle,
    radial_medium,
    trace_ray,
    turning_point_deflection,
)
from cosmocell.rays import medium_from_profile

B_CRIT = 3.0 * math.sqrt(3.0)  # critical impact parameter of the M=1 BH medium


@pytest.fixture(scope="module")
def bh():
    return radial_medium(SpacetimeSpec("BH", M=1.0))


class TestTraceRay:
    def test_flat_straight_line(self):
        m = radial_medium(SpacetimeSpec("Min"))
        ray = trace_ray(m, (-5.0, 1.0), (1.0, 0.0), 10.0)
        assert ray.status == "completed"
        assert np.allclose(ray.points[-1], [5.0, 1.0], atol=1e-9)
        assert ray.max_drift == 0.0
        assert np.allclose(ray.directions, [1.0, 0.0])

    @pytest.mark.parametrize(
        "spec,start,budget",
        [
            (SpacetimeSpec("BH", M=1.0), (-50.0, 7.0), 120.0),
            (SpacetimeSpec("dS", H=1.0), (-1.0, 0.4), 2.5),
            (SpacetimeSpec("AdS", H=1.0), (-4.0, 1.3), 10.0),
            (SpacetimeSpec("dSBH", H=0.01, M=1.0), (-40.0, 8.0), 90.0),
            (SpacetimeSpec("AdSBH", H=0.01, M=1.0), (-40.0, 8.0), 90.0),
        ],
    )
    def test_bouguer_drift(self, spec, start, budget):
        ray = trace_ray(radial_medium(spec), start, (1.0, 0.0), budget)
        assert ray.max_drift <= 1e-7

    @pytest.mark.parametrize(
        "spec,start,budget",
        [
            (SpacetimeSpec("BH", M=1.0), (-50.0, 7.0), 120.0),
            (SpacetimeSpec("dS", H=1.0), (-1.0, 0.4), 2.2),
        ],
    )
    def test_reversibility(self, spec, start, budget):
        m = radial_medium(spec)
        fwd = trace_ray(m, start, (1.0, 0.0), budget, n_samples=400)
        back = trace_ray(
            m, fwd.points[-1], -fwd.directions[-1], float(fwd.s[-1]), n_samples=400
        )
        err = np.hypot(*(back.points - fwd.points[::-1]).T)
        assert err.max() <= 1e-6

    def test_exit_status(self):
        m = radial_medium(SpacetimeSpec("dS", H=1.0))
        ray = trace_ray(m, (0.5, 0.0), (1.0, 0.0), 50.0)
        assert ray.status == "exited"
        r_end = math.hypot(*ray.points[-1])
        assert r_end == pytest.approx(m.domain[1], rel=1e-9)

    def test_capture_status(self, bh):
        ray = trace_ray(bh, (-50.0, 2.0), (1.0, 0.0), 200.0)
        assert ray.status == "captured"
        assert math.hypot(*ray.points[-1]) == pytest.approx(1.0, rel=1e-9)

    def test_radial_ray_zero_bouguer(self):
        m = radial_medium(SpacetimeSpec("dS", H=1.0))
        ray = trace_ray(m, (0.3, 0.0), (1.0, 0.0), 1.0)
        assert ray.bouguer == 0.0
        assert np.max(np.abs(ray.bouguer_rel_drift)) <= 1e-7

    def test_start_validation(self, bh):
        with pytest.raises(DomainError, match="outside"):
            trace_ray(bh, (0.4, 0.0), (1.0, 0.0), 1.0)
        with pytest.raises(DomainError):
            trace_ray(bh, (-10.0, 0.0), (0.0, 0.0), 1.0)
        with pytest.raises(DomainError):
            trace_ray(bh, (-10.0, 0.0), (1.0, 0.0), -2.0)

    def test_rw_has_no_medium(self):
        with pytest.raises(DomainError):
            radial_medium(SpacetimeSpec("RW", scale_factor=lambda t: 1.0))


class TestOrbits:
    def test_photon_sphere_analog(self, bh):
        rc = circular_orbit_radius(bh)
        assert abs(rc - (1.0 + math.sqrt(3.0) / 2.0)) / rc <= 1e-6

    def test_photon_sphere_scales_with_mass(self):
        m = radial_medium(SpacetimeSpec("BH", M=2.7))
        rc = circular_orbit_radius(m)
        assert rc == pytest.approx(2.7 * (1.0 + math.sqrt(3.0) / 2.0), rel=1e-9)

    def test_critical_impact_parameter(self, bh):
        assert critical_impact_parameter(bh) == pytest.approx(B_CRIT, rel=1e-9)

    def test_no_circular_orbit_in_flat_medium(self):
        m = radial_medium(SpacetimeSpec("Min"))
        with pytest.raises(DomainError):
            circular_orbit_radius(m, bracket=(0.1, 10.0))


class TestDeflection:
    def test_flat_zero(self):
        m = radial_medium(SpacetimeSpec("Min"))
        res = deflection_angle(m, 3.0)
        assert res.angle == pytest.approx(0.0, abs=1e-10)
        assert not res.captured

    def test_flat_quadrature_zero(self):
        m = radial_medium(SpacetimeSpec("Min"))
        assert abs(turning_point_deflection(m, 3.0)) <= 1e-12

    def test_dual_route_default_far_field(self, bh):
        for b in (20.0, 100.0):
            traced = deflection_angle(bh, b).angle
            oracle = turning_point_deflection(bh, b)
            assert abs(traced - oracle) / oracle <= 1e-4

    def test_dual_route_strict(self, bh):
        traced = deflection_angle(bh, 20.0, far_field_factor=1e5).angle
        oracle = turning_point_deflection(bh, 20.0)
        assert abs(traced - oracle) / oracle <= 1e-6

    def test_weak_field_expansion(self, bh):
        # alpha = 4M/b + (15 pi / 4)(M/b)^2 + O(M/b)^3
        b = 1e4
        alpha = turning_point_deflection(bh, b)
        second_order = 15.0 * math.pi / 4.0 / b**2
        assert alpha - 4.0 / b == pytest.approx(second_order, rel=1e-2)

    def test_monotone_in_impact_parameter(self, bh):
        bs = [50.0, 100.0, 200.0, 400.0, 700.0, 1000.0]
        angles = [deflection_angle(bh, b).angle for b in bs]
        assert all(a1 > a2 for a1, a2 in zip(angles, angles[1:]))

    def test_capture_below_critical(self, bh):
        res = deflection_angle(bh, 5.0)
        assert res.captured and res.angle is None

    def test_escape_above_critical(self, bh):
        res = deflection_angle(bh, 5.3)
        assert not res.captured and res.angle > math.pi / 2

    def test_capture_threshold_bisection(self, bh):
        lo, hi = 5.0, 5.5  # captured at lo, escapes at hi
        for _ in range(9):
            mid = 0.5 * (lo + hi)
            if deflection_angle(bh, mid).captured:
                lo = mid
            else:
                hi = mid
        assert abs(0.5 * (lo + hi) - B_CRIT) <= 2e-3

    def test_no_turning_point_below_critical(self, bh):
        with pytest.raises(DomainError, match="critical"):
            turning_point_deflection(bh, 5.0)

    def test_bounded_medium_rejected(self):
        m = radial_medium(SpacetimeSpec("dS", H=1.0))
        with pytest.raises(DomainError):
            deflection_angle(m, 0.5)

    def test_bad_impact_parameter(self, bh):
        with pytest.raises(DomainError):
            deflection_angle(bh, 0.0)
        with pytest.raises(DomainError):
            deflection_angle(bh, -1.0)


class TestProfileMedium:
    def test_profile_route_matches_analytic(self):
        H = 1.0
        spec = SpacetimeSpec("dS", H=H)
        grid = np.linspace(1e-4, 1.6, 64)
        closed = lambda r: 1.0 / (1.0 - 0.25 * H * H * np.asarray(r, float) ** 2)
        prof = IndexProfile(grid, closed(grid), (0.0, 1.8), closed_form=closed)
        via_profile = trace_ray(
            medium_from_profile(prof, char_length=1.0), (-1.0, 0.4), (1.0, 0.0), 2.0
        )
        via_analytic = trace_ray(radial_medium(spec), (-1.0, 0.4), (1.0, 0.0), 2.0)
        gap = np.hypot(*(via_profile.points - via_analytic.points).T)
        assert gap.max() <= 1e-6

    def test_sampled_profile_rejected(self):
        grid = np.linspace(0.1, 1.0, 10)
        prof = IndexProfile(grid, np.ones_like(grid), (0.0, 1.8))
        with pytest.raises(DomainError, match="closed-form"):
            medium_from_profile(prof)
