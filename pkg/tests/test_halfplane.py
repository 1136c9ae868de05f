import math

import pytest
from hypothesis import given, strategies as st

from hypgeom import (
    OutsideDomainError,
    h_dist_disk,
    h_dist_halfplane,
    h_dist_rhp,
    hyperbolic_disk,
    phi,
)
from hypgeom.halfplane import arcosh, artanh

TOL = 1e-12

finite = st.floats(min_value=-50, max_value=50, allow_nan=False)
upper = st.builds(complex, finite, st.floats(min_value=1e-3, max_value=50))
disk_pts = st.builds(
    lambda r, t: r * complex(math.cos(t), math.sin(t)),
    st.floats(min_value=0, max_value=0.999),
    st.floats(min_value=0, max_value=2 * math.pi),
)


class TestHalfPlaneDistance:
    def test_identity(self):
        assert h_dist_halfplane(1j, 1j) == 0.0

    def test_geodesic_ray(self):
        assert h_dist_halfplane(1j, 2j) == pytest.approx(math.log(2), abs=TOL)

    def test_horizontal_diameter_is_phi(self):
        disk = hyperbolic_disk(1j, 1.0)
        c, R = disk.euclid_center, disk.euclid_radius
        got = h_dist_halfplane(c + R, c - R)
        expected = 2 * math.log((math.sqrt(math.cosh(2)) + math.sinh(1)) / math.cosh(1))
        assert got == pytest.approx(expected, abs=TOL)
        assert got == pytest.approx(phi(1.0), abs=TOL)

    def test_rejects_lower_half_plane(self):
        with pytest.raises(OutsideDomainError):
            h_dist_halfplane(1j, -1j)
        with pytest.raises(OutsideDomainError):
            h_dist_halfplane(1.0 + 0j, 1j)

    @given(upper, upper)
    def test_symmetry(self, z, w):
        assert h_dist_halfplane(z, w) == pytest.approx(h_dist_halfplane(w, z), rel=1e-12)

    @given(upper, upper, upper)
    def test_triangle_inequality(self, z, w, v):
        assert h_dist_halfplane(z, w) <= (
            h_dist_halfplane(z, v) + h_dist_halfplane(v, w) + 1e-9
        )

    @given(upper)
    def test_zero_iff_equal(self, z):
        assert h_dist_halfplane(z, z) == 0.0


class TestDiskDistance:
    def test_identity(self):
        assert h_dist_disk(0j, 0j) == 0.0

    def test_radial_geodesic(self):
        r = 0.73
        assert h_dist_disk(0j, r) == pytest.approx(math.log((1 + r) / (1 - r)), abs=TOL)

    def test_quarter_strip_anchor(self):
        # the hyperbolic length of [0, tanh(pi/4)] is pi/2
        assert h_dist_disk(0j, math.tanh(math.pi / 4)) == pytest.approx(
            math.pi / 2, abs=TOL
        )

    def test_rejects_outside(self):
        with pytest.raises(OutsideDomainError):
            h_dist_disk(0j, 1.2 + 0j)

    def test_automorphism_invariance(self):
        # spot-check invariance under z -> (z - a)/(1 - conj(a) z)
        a = 0.3 + 0.4j
        for z, w in [(0.1 + 0.2j, -0.5j), (0.0j, 0.9j), (-0.7 + 0.1j, 0.2 - 0.6j)]:
            fz = (z - a) / (1 - a.conjugate() * z)
            fw = (w - a) / (1 - a.conjugate() * w)
            assert h_dist_disk(fz, fw) == pytest.approx(h_dist_disk(z, w), abs=1e-12)

    @given(disk_pts, disk_pts, disk_pts)
    def test_triangle_inequality(self, z, w, v):
        assert h_dist_disk(z, w) <= h_dist_disk(z, v) + h_dist_disk(v, w) + 1e-9


class TestRightHalfPlane:
    def test_matches_rotated_upper(self):
        # multiplication by i carries {Re > 0} onto {Im > 0}
        for z, w in [(1 + 0j, 2 + 0j), (0.5 + 3j, 2 - 1j)]:
            assert h_dist_rhp(z, w) == pytest.approx(
                h_dist_halfplane(1j * z, 1j * w), abs=TOL
            )


class TestHyperbolicDisk:
    def test_euclid_parameters(self):
        d = hyperbolic_disk(1j, 0.8)
        assert d.euclid_center == pytest.approx(1j * math.cosh(0.8), abs=TOL)
        assert d.euclid_radius == pytest.approx(math.sinh(0.8), abs=TOL)

    def test_scaling(self):
        d = hyperbolic_disk(2j, 0.8)
        assert d.euclid_radius == pytest.approx(2 * math.sinh(0.8), abs=TOL)

    def test_stays_inside_halfplane(self):
        for r in (0.1, 1.0, 3.0):
            d = hyperbolic_disk(0.5 + 2j, r)
            assert d.euclid_radius < d.euclid_center.imag

    def test_boundary_has_constant_hyperbolic_radius(self):
        d = hyperbolic_disk(0.3 + 1.7j, 1.3)
        for k in range(24):
            z = d.boundary_point(2 * math.pi * k / 24)
            assert h_dist_halfplane(z, d.center) == pytest.approx(1.3, abs=1e-12)

    def test_top_point_maximizes_euclidean_distance(self):
        d = hyperbolic_disk(1j, 0.9)
        top = d.boundary_point(0.0)
        for k in range(1, 48):
            z = d.boundary_point(2 * math.pi * k / 48)
            assert abs(z - d.center) <= abs(top - d.center) + 1e-15

    def test_distance_decreases_from_top_to_bottom(self):
        d = hyperbolic_disk(1j, 1.1)
        angles = [k * math.pi / 40 for k in range(1, 40)]
        vals = [abs(d.boundary_point(t) - d.center) for t in angles]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_diameter_endpoints_between_phi_and_2r(self):
        d = hyperbolic_disk(1j, 0.7)
        c, R = d.euclid_center, d.euclid_radius
        for k in range(30):
            t = math.pi * k / 30
            e = R * complex(math.cos(t), math.sin(t))
            h = h_dist_halfplane(c + e, c - e)
            assert phi(0.7) - 1e-12 <= h <= 2 * 0.7 + 1e-12

    def test_invalid_inputs(self):
        with pytest.raises(OutsideDomainError):
            hyperbolic_disk(1.0 + 0j, 1.0)
        with pytest.raises(ValueError):
            hyperbolic_disk(1j, -1.0)


class TestPhi:
    def test_small_radius_limit(self):
        assert phi(1e-8) == pytest.approx(0.0, abs=1e-7)

    def test_large_radius_limit(self):
        assert phi(50.0) == pytest.approx(2 * math.log(math.sqrt(2) + 1), abs=1e-6)

    def test_increasing_and_below_2r(self):
        rs = [0.1 * k for k in range(1, 30)]
        vals = [phi(r) for r in rs]
        assert all(a < b for a, b in zip(vals, vals[1:]))
        assert all(v < 2 * r for v, r in zip(vals, rs) if r > 1.0)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            phi(0.0)


class TestBranchGuards:
    def test_artanh_log_form(self):
        assert artanh(0.5) == pytest.approx(0.5 * math.log(3), abs=TOL)

    def test_artanh_rejects_far_outside(self):
        with pytest.raises(ValueError):
            artanh(1.1)

    def test_artanh_clamps_on_boundary(self):
        assert math.isfinite(artanh(1.0))

    def test_arcosh(self):
        assert arcosh(math.cosh(2.0)) == pytest.approx(2.0, abs=TOL)
        with pytest.raises(ValueError):
            arcosh(0.5)
