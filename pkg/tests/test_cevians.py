"""Cevian frames, the ratio-sum relation, converse construction, medians."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccplane.cevians import (
    CevianFrame,
    RatioSumInput,
    Triangle,
    ceva_product,
    cevian_frame,
    construct_from_ratios,
    equilateral_triangle,
    euler_relation_residual,
    lambert_median_report,
    pqr_system,
    projection_oracle,
    stretch_ratio,
    unit_sum_residual,
)
from ccplane.errors import (
    DegenerateInputError,
    DomainError,
    InfeasibleGeometryError,
    InfeasibleInputError,
)
from ccplane.kernel import (
    ORIGIN,
    Geometry,
    angle_at,
    foot_of_perpendicular,
    geodesic_residual,
    geodesic_through,
    hdist,
    point_along,
    reflect_across,
    tangent_direction,
)
from ccplane.sampling import sample_frame, sample_interior_point, sample_triangle, substream

HYP = Geometry.HYPERBOLIC
SPH = Geometry.SPHERICAL
EUC = Geometry.EUCLIDEAN


def fixture_triangle() -> Triangle:
    a = point_along(ORIGIN, tangent_direction(ORIGIN, 0.2), 0.9)
    b = point_along(ORIGIN, tangent_direction(ORIGIN, 2.1), 1.4)
    c = point_along(ORIGIN, tangent_direction(ORIGIN, 4.0), 0.7)
    return Triangle(HYP, a, b, c)


def fixture_frame() -> CevianFrame:
    tri = fixture_triangle()
    return cevian_frame(tri, sample_interior_point(tri, substream("fixture", 1, 0)))


class TestTriangle:
    def test_coincident_vertices_rejected(self):
        a = point_along(ORIGIN, tangent_direction(ORIGIN, 0.0), 1.0)
        with pytest.raises(DegenerateInputError):
            Triangle(HYP, a, a, ORIGIN)

    def test_collinear_vertices_rejected(self):
        u = tangent_direction(ORIGIN, 0.3)
        pts = [point_along(ORIGIN, u, t) for t in (0.5, 1.0, 2.0)]
        with pytest.raises(DegenerateInputError):
            Triangle(HYP, *pts)

    def test_oversized_side_rejected(self):
        a = point_along(ORIGIN, tangent_direction(ORIGIN, 0.0), 6.0)
        b = point_along(ORIGIN, tangent_direction(ORIGIN, math.pi), 6.0)
        c = point_along(ORIGIN, tangent_direction(ORIGIN, math.pi / 2), 1.0)
        with pytest.raises(DomainError):
            Triangle(HYP, a, b, c)

    def test_vertex_type_mismatch_rejected(self):
        with pytest.raises(DomainError):
            Triangle(EUC, ORIGIN, (1.0, 0.0), (0.0, 1.0))

    def test_side_lengths_match_metric(self):
        tri = fixture_triangle()
        bc, ca, ab = tri.side_lengths()
        assert bc == pytest.approx(hdist(tri.b, tri.c), abs=0)
        assert ca == pytest.approx(hdist(tri.c, tri.a), abs=0)
        assert ab == pytest.approx(hdist(tri.a, tri.b), abs=0)


class TestCevianFrame:
    def test_fixture_ratios_frozen(self):
        fr = fixture_frame()
        assert fr.alpha == pytest.approx(2.109472578545435, abs=1e-12)
        assert fr.beta == pytest.approx(2.097785190938704, abs=1e-12)
        assert fr.gamma == pytest.approx(1.8122214516565816, abs=1e-12)

    def test_fixture_angles_frozen(self):
        fr = fixture_frame()
        assert fr.p == pytest.approx(0.9882888462962754, abs=1e-12)
        assert fr.q == pytest.approx(1.1909944433494122, abs=1e-12)
        assert fr.r == pytest.approx(0.9623093639441054, abs=1e-12)
        assert fr.p + fr.q + fr.r == pytest.approx(math.pi, abs=1e-12)

    def test_ratios_agree_with_lengths(self):
        fr = fixture_frame()
        assert fr.alpha == pytest.approx(math.tanh(fr.ao) / math.tanh(fr.od), abs=0)

    def test_feet_sit_on_their_sides(self):
        fr = fixture_frame()
        tri = fr.tri
        for foot, (s1, s2) in (
            (fr.d, (tri.b, tri.c)),
            (fr.e, (tri.c, tri.a)),
            (fr.f, (tri.a, tri.b)),
        ):
            assert geodesic_residual(geodesic_through(s1, s2), foot) < 1e-12
            assert hdist(s1, foot) + hdist(foot, s2) == pytest.approx(
                hdist(s1, s2), abs=1e-12
            )

    def test_on_side_point_rejected(self):
        tri = fixture_triangle()
        fr = fixture_frame()
        with pytest.raises(DegenerateInputError):
            cevian_frame(tri, fr.d)

    def test_exterior_point_rejected(self):
        tri = fixture_triangle()
        outside = reflect_across(geodesic_through(tri.b, tri.c), tri.a)
        with pytest.raises(DomainError):
            cevian_frame(tri, outside)


class TestRatioSumRelation:
    @pytest.mark.parametrize("geometry", [HYP, SPH, EUC])
    def test_product_form_campaign(self, geometry):
        worst = 0.0
        for i in range(200):
            fr = sample_frame(geometry, substream("euler", 11, i))
            scale = 1.0 + abs(fr.alpha * fr.beta * fr.gamma)
            worst = max(worst, abs(euler_relation_residual(fr)) / scale)
        assert worst < 1e-12

    @pytest.mark.parametrize("geometry", [HYP, SPH, EUC])
    def test_unit_sum_form_campaign(self, geometry):
        worst = 0.0
        for i in range(200):
            fr = sample_frame(geometry, substream("unitsum", 11, i))
            worst = max(worst, abs(unit_sum_residual(fr)))
        assert worst < 1e-12

    @settings(max_examples=30, deadline=None)
    @given(
        geometry=st.sampled_from([HYP, SPH, EUC]),
        index=st.integers(min_value=0, max_value=10**6),
    )
    def test_relation_property(self, geometry, index):
        fr = sample_frame(geometry, substream("euler-prop", 3, index))
        scale = 1.0 + abs(fr.alpha * fr.beta * fr.gamma)
        assert abs(euler_relation_residual(fr)) < 1e-11 * scale


class TestPqrSystem:
    @pytest.mark.parametrize("geometry", [HYP, SPH])
    def test_linear_relations_campaign(self, geometry):
        worst = 0.0
        for i in range(100):
            fr = sample_frame(geometry, substream("pqr", 11, i))
            sys_ = pqr_system(fr)
            scale = 1.0 + max(
                abs(fr.alpha * sys_.P), abs(fr.beta * sys_.Q), abs(fr.gamma * sys_.R)
            )
            worst = max(worst, max(sys_.residuals) / scale)
        assert worst < 1e-12

    def test_quantities_match_definition(self):
        fr = fixture_frame()
        sys_ = pqr_system(fr)
        assert sys_.P == pytest.approx(math.sin(fr.p) / math.tanh(fr.ao), abs=0)
        assert sys_.Q == pytest.approx(math.sin(fr.q) / math.tanh(fr.bo), abs=0)
        assert sys_.R == pytest.approx(math.sin(fr.r) / math.tanh(fr.co), abs=0)

    def test_euclidean_frame_rejected(self):
        fr = sample_frame(EUC, substream("pqr-euc", 1, 0))
        with pytest.raises(DomainError):
            pqr_system(fr)


class TestProjectionOracle:
    def test_ratio_agreement_campaign(self):
        worst_dev = worst_col = worst_rel = 0.0
        for i in range(100):
            fr = sample_frame(HYP, substream("proj", 11, i))
            po = projection_oracle(fr)
            worst_dev = max(worst_dev, po.max_deviation)
            worst_col = max(worst_col, po.collinearity_residual)
            prod = po.ratios[0] * po.ratios[1] * po.ratios[2]
            worst_rel = max(
                worst_rel, abs(po.euclid_relation_residual) / (1.0 + abs(prod))
            )
        assert worst_dev < 1e-11
        assert worst_col < 1e-11
        assert worst_rel < 1e-12

    def test_spherical_frame_rejected(self):
        fr = sample_frame(SPH, substream("proj-sph", 1, 0))
        with pytest.raises(DomainError):
            projection_oracle(fr)


class TestConverseConstruction:
    def test_round_trip_campaign(self):
        worst_len = worst_ang = 0.0
        for i in range(100):
            fr = sample_frame(HYP, substream("construct", 11, i))
            rebuilt = construct_from_ratios(RatioSumInput.from_frame(fr)).frame
            for name in ("ao", "bo", "co", "od", "oe", "of"):
                worst_len = max(worst_len, abs(getattr(rebuilt, name) - getattr(fr, name)))
            worst_ang = max(
                worst_ang,
                abs(rebuilt.p - fr.p),
                abs(rebuilt.q - fr.q),
                abs(rebuilt.r - fr.r),
            )
        assert worst_len < 1e-12
        assert worst_ang < 1e-11

    def test_equilateral_center_angles(self):
        # Medians of an equilateral triangle: the cevian angles p, q, r
        # come out pi/3 each, while consecutive vertex rays around the
        # center open up 2*pi/3.
        fr = _equilateral_frame(2.0)
        res = construct_from_ratios(RatioSumInput.from_frame(fr))
        third = math.pi / 3.0
        assert res.frame.p == pytest.approx(third, abs=1e-12)
        assert res.frame.q == pytest.approx(third, abs=1e-12)
        assert res.frame.r == pytest.approx(third, abs=1e-12)
        tri, o = res.frame.tri, res.center
        for u, v in ((tri.a, tri.b), (tri.b, tri.c), (tri.c, tri.a)):
            assert angle_at(o, u, v) == pytest.approx(2.0 * third, abs=1e-12)

    def test_containment_residual_tiny_for_exact_input(self):
        fr = sample_frame(HYP, substream("construct-exact", 5, 0))
        res = construct_from_ratios(RatioSumInput.from_frame(fr))
        assert res.containment_residual < 1e-12
        assert abs(res.relation_residual) < 1e-12

    def test_relation_violation_rejected(self):
        with pytest.raises(InfeasibleInputError):
            construct_from_ratios(RatioSumInput(1.0, 1.0, 1.0, 1.0, 1.0, 1.0))

    def test_helper_triangle_inequality_rejected(self):
        # Ratios (1/9, 19, 19) satisfy the relation exactly but give
        # helper sides with G > H + I once AO is pushed long and BO,
        # CO are tiny.
        od = 5.0
        ao = math.atanh(math.tanh(od) / 9.0)
        oe = math.atanh(math.tanh(0.01) / 19.0)
        with pytest.raises(InfeasibleGeometryError):
            construct_from_ratios(RatioSumInput(ao, 0.01, 0.01, od, oe, oe))

    def test_length_domain_rejected(self):
        with pytest.raises(DomainError):
            RatioSumInput(0.0, 1.0, 1.0, 1.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            RatioSumInput(1.0, 1.0, 1.0, 1.0, 1.0, 11.0)

    def test_from_frame_requires_hyperbolic(self):
        fr = sample_frame(SPH, substream("construct-sph", 1, 0))
        with pytest.raises(DomainError):
            RatioSumInput.from_frame(fr)

    def test_sine_factor_reproduces_sines(self):
        fr = fixture_frame()
        res = construct_from_ratios(RatioSumInput.from_frame(fr))
        assert res.sine_factor * res.aux_a == pytest.approx(
            math.sin(res.angle_bof), abs=1e-13
        )
        assert res.sine_factor * res.aux_b == pytest.approx(
            math.sin(res.angle_aof), abs=1e-13
        )
        assert res.sine_factor * res.aux_c == pytest.approx(
            math.sin(res.angle_bod), abs=1e-13
        )


def _equilateral_frame(side: float, geometry: Geometry = HYP) -> CevianFrame:
    from ccplane.cevians import _line_meet_segment, _mid

    tri = equilateral_triangle(side, geometry)
    d = _mid(geometry, tri.b, tri.c)
    e = _mid(geometry, tri.c, tri.a)
    o = _line_meet_segment(geometry, tri.a, d, tri.b, e)
    return cevian_frame(tri, o)


class TestCevaProduct:
    @pytest.mark.parametrize("geometry", [HYP, SPH, EUC])
    def test_concurrent_cevians_multiply_to_one(self, geometry):
        worst = 0.0
        for i in range(100):
            fr = sample_frame(geometry, substream("ceva", 11, i))
            worst = max(worst, abs(ceva_product(fr.tri, fr.d, fr.e, fr.f) - 1.0))
        assert worst < 1e-11

    @pytest.mark.parametrize("geometry", [HYP, SPH, EUC])
    def test_medians_give_exactly_one(self, geometry):
        from ccplane.cevians import _mid

        tri = sample_triangle(geometry, substream("ceva-med", 2, 0))
        d = _mid(geometry, tri.b, tri.c)
        e = _mid(geometry, tri.c, tri.a)
        f = _mid(geometry, tri.a, tri.b)
        assert ceva_product(tri, d, e, f) == pytest.approx(1.0, abs=1e-13)

    def test_perturbed_foot_breaks_concurrency(self):
        fr = sample_frame(HYP, substream("ceva-perturb", 4, 0))
        tri = fr.tri
        from ccplane.kernel import direction

        moved = point_along(fr.d, direction(fr.d, tri.b), 1e-3)
        with pytest.raises(DomainError):
            ceva_product(tri, moved, fr.e, fr.f)
        value = ceva_product(tri, moved, fr.e, fr.f, require_concurrent=False)
        assert abs(value - 1.0) > 1e-5

    def test_foot_off_side_rejected(self):
        fr = sample_frame(HYP, substream("ceva-off", 4, 0))
        with pytest.raises(DomainError):
            ceva_product(fr.tri, fr.o, fr.e, fr.f)


class TestStretchRatio:
    def test_geometry_specific_forms(self):
        assert stretch_ratio(HYP, 1.0, 0.5) == math.tanh(1.0) / math.tanh(0.5)
        assert stretch_ratio(SPH, 0.8, 0.4) == math.tan(0.8) / math.tan(0.4)
        assert stretch_ratio(EUC, 1.0, 0.5) == 2.0

    def test_domain_rejections(self):
        with pytest.raises(DomainError):
            stretch_ratio(HYP, -1.0, 0.5)
        with pytest.raises(DomainError):
            stretch_ratio(SPH, 1.6, 0.4)


class TestEquilateralMedians:
    def test_alpha_is_two_in_every_geometry(self):
        cases = [
            (HYP, (0.5, 1.0, 2.0, 4.0)),
            (EUC, (1.0, 2.5)),
            (SPH, (0.3, 0.6, 1.2)),
        ]
        for geometry, sides in cases:
            for side in sides:
                report = lambert_median_report(side, geometry)
                assert report.alpha == pytest.approx(2.0, abs=1e-12), (geometry, side)
                assert report.median_residual < 1e-12

    def test_ad_over_od_frozen_values(self):
        expected = {
            (HYP, 0.5): 3.041382762089923,
            (HYP, 1.0): 3.162355994214564,
            (HYP, 2.0): 3.608106559502942,
            (HYP, 4.0): 5.027025429886764,
            (EUC, 1.0): 3.0,
            (SPH, 0.3): 2.984962234326773,
            (SPH, 0.6): 2.939382349964313,
            (SPH, 1.2): 2.749056241271953,
        }
        for (geometry, side), value in expected.items():
            report = lambert_median_report(side, geometry)
            assert report.ad_over_od == pytest.approx(value, abs=1e-12), (geometry, side)

    def test_curvature_splits_three(self):
        for side in (0.25, 0.5, 1.0, 2.0, 4.0):
            assert lambert_median_report(side, HYP).ad_over_od > 3.0
        for side in (0.2, 0.5, 1.0, 1.4):
            assert lambert_median_report(side, SPH).ad_over_od < 3.0
        assert lambert_median_report(0.77, EUC).ad_over_od == pytest.approx(3.0, abs=1e-13)

    def test_small_side_approaches_euclidean(self):
        report = lambert_median_report(1e-3, HYP)
        assert report.ad_over_od > 3.0
        assert report.ad_over_od == pytest.approx(3.0, abs=1e-4)

    def test_equilateral_triangle_has_equal_sides(self):
        for geometry, side in ((HYP, 1.3), (SPH, 0.9), (EUC, 2.0)):
            tri = equilateral_triangle(side, geometry)
            for s in tri.side_lengths():
                assert s == pytest.approx(side, abs=1e-12)

    def test_domain_rejections(self):
        with pytest.raises(DomainError):
            equilateral_triangle(-1.0, HYP)
        with pytest.raises(DomainError):
            equilateral_triangle(1.6, SPH)
        with pytest.raises(DomainError):
            equilateral_triangle(10.5, HYP)


class TestSampling:
    def test_substream_is_deterministic(self):
        a = substream("det", 9, 3)
        b = substream("det", 9, 3)
        assert [a.random() for _ in range(5)] == [b.random() for _ in range(5)]

    def test_sample_frame_reproduces(self):
        f1 = sample_frame(HYP, substream("repro", 42, 17))
        f2 = sample_frame(HYP, substream("repro", 42, 17))
        assert f1.alpha == f2.alpha
        assert f1.p == f2.p

    @pytest.mark.parametrize("geometry", [HYP, SPH, EUC])
    def test_sampled_triangles_respect_floors(self, geometry):
        for i in range(25):
            tri = sample_triangle(geometry, substream("floors", 6, i))
            assert min(tri.side_lengths()) >= 0.05
