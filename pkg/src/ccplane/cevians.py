"""Cevian frames, the ratio-sum relation, and its converse construction.

A cevian frame is a triangle ABC with an interior point O and the three
feet D, E, F where the rays from A, B, C through O meet the opposite
sides.  With the length ratios

    alpha = th(AO)/th(OD),  beta = th(BO)/th(OE),  gamma = th(CO)/th(OF)

(th = tanh on the hyperbolic plane, tan on the sphere, identity in the
euclidean plane), the frame satisfies

    alpha * beta * gamma = alpha + beta + gamma + 2

equivalently 1/(alpha+1) + 1/(beta+1) + 1/(gamma+1) = 1.  The relation
is verified along two independent routes: direct measurement in the
model, and a central projection onto the tangent plane at O that maps
the frame to a euclidean one with the same ratios.

The converse construction recovers a frame from the six lengths alone.
The auxiliary quantities G = th(AO)/(alpha+1), H = th(BO)/(beta+1) and
I = th(CO)/(gamma+1) form a euclidean triangle whose angles are exactly
the angles BOF, AOF, BOD of the frame, which fixes the six rays around
O and lets every length be laid off directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import corevec as vec
from . import kernel as k
from .constants import (
    MAX_HYPERBOLIC_SIDE,
    MAX_SPHERICAL_SIDE,
    TOL_CLAMP,
    TOL_CONSTRUCT,
    TOL_ID,
)
from .errors import (
    DegenerateInputError,
    DomainError,
    GeometryError,
    InfeasibleGeometryError,
    InfeasibleInputError,
)
from .kernel import Geometry, HPoint, SpherePoint
from .trig import clamped_acos

EuclidPoint = tuple[float, float]

# Feet are accepted as lying on a side up to this residual.
_SIDE_EPS = 1e-7


def _eu_dist(p: EuclidPoint, q: EuclidPoint) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def _eu_mid(p: EuclidPoint, q: EuclidPoint) -> EuclidPoint:
    return (0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1]))


def _eu_angle(v: EuclidPoint, p: EuclidPoint, q: EuclidPoint) -> float:
    ax, ay = p[0] - v[0], p[1] - v[1]
    bx, by = q[0] - v[0], q[1] - v[1]
    return abs(math.atan2(ax * by - ay * bx, ax * bx + ay * by))


def _eu_line_intersect(
    p1: EuclidPoint, p2: EuclidPoint, q1: EuclidPoint, q2: EuclidPoint
) -> EuclidPoint | None:
    du = (p2[0] - p1[0], p2[1] - p1[1])
    dv = (q2[0] - q1[0], q2[1] - q1[1])
    den = du[0] * dv[1] - du[1] * dv[0]
    if abs(den) <= 1e-14 * (_eu_dist(p1, p2) * _eu_dist(q1, q2) + 1e-300):
        return None
    t = ((q1[0] - p1[0]) * dv[1] - (q1[1] - p1[1]) * dv[0]) / den
    return (p1[0] + t * du[0], p1[1] + t * du[1])


def _dist(geometry: Geometry, p, q) -> float:
    if geometry is Geometry.HYPERBOLIC:
        return k.hdist(p, q)
    if geometry is Geometry.SPHERICAL:
        return k.sphere_dist(p, q)
    return _eu_dist(p, q)


def _mid(geometry: Geometry, p, q):
    if geometry is Geometry.HYPERBOLIC:
        return k.midpoint(p, q)
    if geometry is Geometry.SPHERICAL:
        return k.sphere_midpoint(p, q)
    return _eu_mid(p, q)


def _angle(geometry: Geometry, v, p, q) -> float:
    if geometry is Geometry.HYPERBOLIC:
        return k.angle_at(v, p, q)
    if geometry is Geometry.SPHERICAL:
        return k.sphere_angle_at(v, p, q)
    return _eu_angle(v, p, q)


def stretch_ratio(geometry: Geometry, numerator: float, denominator: float) -> float:
    """The length ratio th(num)/th(den) used by the ratio-sum relation."""
    if not (numerator > 0.0 and denominator > 0.0):
        raise DomainError("ratio lengths must be positive")
    if geometry is Geometry.HYPERBOLIC:
        return math.tanh(numerator) / math.tanh(denominator)
    if geometry is Geometry.SPHERICAL:
        if max(numerator, denominator) >= MAX_SPHERICAL_SIDE:
            raise DomainError("spherical ratio lengths must stay below pi/2")
        return math.tan(numerator) / math.tan(denominator)
    return numerator / denominator


def _between_residual(geometry: Geometry, s1, m, s2) -> float:
    return _dist(geometry, s1, m) + _dist(geometry, m, s2) - _dist(geometry, s1, s2)


def _on_side_residual(geometry: Geometry, p, s1, s2) -> float:
    if geometry is Geometry.HYPERBOLIC:
        return k.geodesic_residual(k.geodesic_through(s1, s2), p)
    if geometry is Geometry.SPHERICAL:
        return k.sphere_geodesic_residual(k.sphere_geodesic(s1, s2), p)
    ux, uy = s2[0] - s1[0], s2[1] - s1[1]
    wx, wy = p[0] - s1[0], p[1] - s1[1]
    return abs(ux * wy - uy * wx) / math.hypot(ux, uy)


def _line_meet_segment(geometry: Geometry, p1, p2, s1, s2):
    """Meet of line(p1, p2) with line(s1, s2), the candidate on [s1, s2]."""
    if geometry is Geometry.HYPERBOLIC:
        x = k.intersect_geodesics(k.geodesic_through(p1, p2), k.geodesic_through(s1, s2))
        if x is None:
            raise GeometryError("cevian does not reach the opposite side")
        return x
    if geometry is Geometry.SPHERICAL:
        a, b = k.sphere_intersections(
            k.sphere_geodesic(p1, p2), k.sphere_geodesic(s1, s2)
        )
        if _between_residual(geometry, s1, a, s2) <= _between_residual(
            geometry, s1, b, s2
        ):
            return a
        return b
    x = _eu_line_intersect(p1, p2, s1, s2)
    if x is None:
        raise GeometryError("cevian does not reach the opposite side")
    return x


def _orientation_values(geometry: Geometry, tri: "Triangle", o):
    """Per side: signed positions of o and of the opposite vertex."""
    pairs = ((tri.b, tri.c, tri.a), (tri.c, tri.a, tri.b), (tri.a, tri.b, tri.c))
    out = []
    for s1, s2, opposite in pairs:
        if geometry is Geometry.HYPERBOLIC:
            n = vec.mnormalize_space(vec.mcross(s1.v, s2.v))
            out.append((vec.minner(o.v, n), vec.minner(opposite.v, n)))
        elif geometry is Geometry.SPHERICAL:
            n = vec.snormalize(vec.scross(s1.v, s2.v))
            out.append((vec.sdot(o.v, n), vec.sdot(opposite.v, n)))
        else:
            ux, uy = s2[0] - s1[0], s2[1] - s1[1]
            out.append(
                (
                    ux * (o[1] - s1[1]) - uy * (o[0] - s1[0]),
                    ux * (opposite[1] - s1[1]) - uy * (opposite[0] - s1[0]),
                )
            )
    return out


@dataclass(frozen=True)
class Triangle:
    """Nondegenerate triangle with vertices a, b, c in one geometry."""

    geometry: Geometry
    a: object
    b: object
    c: object

    def __post_init__(self) -> None:
        if self.geometry is Geometry.HYPERBOLIC:
            expected: type | tuple = HPoint
        elif self.geometry is Geometry.SPHERICAL:
            expected = SpherePoint
        else:
            expected = tuple
        for v in (self.a, self.b, self.c):
            if not isinstance(v, expected):
                raise DomainError(f"vertex type does not match {self.geometry.value}: {v!r}")
        sides = self.side_lengths()
        limit = {
            Geometry.HYPERBOLIC: MAX_HYPERBOLIC_SIDE,
            Geometry.SPHERICAL: MAX_SPHERICAL_SIDE,
            Geometry.EUCLIDEAN: math.inf,
        }[self.geometry]
        for s in sides:
            if s <= 1e-10:
                raise DegenerateInputError("coincident vertices")
            if s > limit:
                raise DomainError(f"side {s} above the working range {limit}")
        if _on_side_residual(self.geometry, self.c, self.a, self.b) <= 1e-12:
            raise DegenerateInputError("collinear vertices")

    def side_lengths(self) -> tuple[float, float, float]:
        """(|BC|, |CA|, |AB|), each opposite the same-named vertex."""
        return (
            _dist(self.geometry, self.b, self.c),
            _dist(self.geometry, self.c, self.a),
            _dist(self.geometry, self.a, self.b),
        )


@dataclass(frozen=True)
class CevianFrame:
    """Measured cevian data of a triangle with an interior point.

    Feet: d on BC, e on CA, f on AB.  Lengths are the six cevian
    segments around o; p, q, r are the angles BOF, AOF, BOD at o,
    which always close up to a straight angle.
    """

    tri: Triangle
    o: object
    d: object
    e: object
    f: object
    ao: float
    bo: float
    co: float
    od: float
    oe: float
    of: float
    alpha: float
    beta: float
    gamma: float
    p: float
    q: float
    r: float

    def __post_init__(self) -> None:
        if abs(self.p + self.q + self.r - math.pi) > TOL_ID:
            raise GeometryError("angles at the interior point do not close up")


def cevian_frame(tri: Triangle, o) -> CevianFrame:
    """Measure the cevian frame of tri with interior point o.

    o must be strictly inside the triangle: a point on a side or at a
    vertex is degenerate, an exterior point is out of scope.
    """
    geometry = tri.geometry
    for s_o, s_v in _orientation_values(geometry, tri, o):
        if abs(s_o) <= 1e-12:
            raise DegenerateInputError("interior point lies on a side or vertex")
        if s_o * s_v < 0.0:
            raise DomainError("point outside the triangle is out of scope")
    d = _line_meet_segment(geometry, tri.a, o, tri.b, tri.c)
    e = _line_meet_segment(geometry, tri.b, o, tri.c, tri.a)
    f = _line_meet_segment(geometry, tri.c, o, tri.a, tri.b)
    for foot, (s1, s2) in ((d, (tri.b, tri.c)), (e, (tri.c, tri.a)), (f, (tri.a, tri.b))):
        if _between_residual(geometry, s1, foot, s2) > _SIDE_EPS:
            raise GeometryError("computed foot left its side segment")
    ao = _dist(geometry, tri.a, o)
    bo = _dist(geometry, tri.b, o)
    co = _dist(geometry, tri.c, o)
    od = _dist(geometry, o, d)
    oe = _dist(geometry, o, e)
    of = _dist(geometry, o, f)
    return CevianFrame(
        tri=tri,
        o=o,
        d=d,
        e=e,
        f=f,
        ao=ao,
        bo=bo,
        co=co,
        od=od,
        oe=oe,
        of=of,
        alpha=stretch_ratio(geometry, ao, od),
        beta=stretch_ratio(geometry, bo, oe),
        gamma=stretch_ratio(geometry, co, of),
        p=_angle(geometry, o, tri.b, f),
        q=_angle(geometry, o, tri.a, f),
        r=_angle(geometry, o, tri.b, d),
    )


def euler_relation_residual(frame: CevianFrame) -> float:
    """alpha*beta*gamma - (alpha + beta + gamma + 2) for the frame."""
    a, b, g = frame.alpha, frame.beta, frame.gamma
    return a * b * g - (a + b + g + 2.0)


def unit_sum_residual(frame: CevianFrame) -> float:
    """1/(alpha+1) + 1/(beta+1) + 1/(gamma+1) - 1 for the frame."""
    return (
        1.0 / (frame.alpha + 1.0)
        + 1.0 / (frame.beta + 1.0)
        + 1.0 / (frame.gamma + 1.0)
        - 1.0
    )


@dataclass(frozen=True)
class PqrSystem:
    """Sine-weighted cevian quantities and their linear relations.

    P = sin(p)/th(AO), Q = sin(q)/th(BO), R = sin(r)/th(CO), which obey
    alpha*P = Q + R, beta*Q = R + P, gamma*R = P + Q.  ``residuals``
    reports those three equations in that order.
    """

    P: float
    Q: float
    R: float
    residuals: tuple[float, float, float]


def pqr_system(frame: CevianFrame) -> PqrSystem:
    """Evaluate the sine-weighted system of a curved-geometry frame."""
    geometry = frame.tri.geometry
    if geometry is Geometry.EUCLIDEAN:
        raise DomainError("the sine-weighted system applies to curved geometries")
    th = math.tanh if geometry is Geometry.HYPERBOLIC else math.tan
    big_p = math.sin(frame.p) / th(frame.ao)
    big_q = math.sin(frame.q) / th(frame.bo)
    big_r = math.sin(frame.r) / th(frame.co)
    return PqrSystem(
        P=big_p,
        Q=big_q,
        R=big_r,
        residuals=(
            abs(frame.alpha * big_p - (big_q + big_r)),
            abs(frame.beta * big_q - (big_r + big_p)),
            abs(frame.gamma * big_r - (big_p + big_q)),
        ),
    )


@dataclass(frozen=True)
class RatioSumInput:
    """Six cevian lengths handed to the converse construction."""

    ao: float
    bo: float
    co: float
    od: float
    oe: float
    of: float

    def __post_init__(self) -> None:
        for name in ("ao", "bo", "co", "od", "oe", "of"):
            value = getattr(self, name)
            if not 0.0 < value <= MAX_HYPERBOLIC_SIDE:
                raise DomainError(f"length {name}={value} outside (0, {MAX_HYPERBOLIC_SIDE}]")

    @classmethod
    def from_frame(cls, frame: CevianFrame) -> "RatioSumInput":
        if frame.tri.geometry is not Geometry.HYPERBOLIC:
            raise DomainError("length extraction expects a hyperbolic frame")
        return cls(frame.ao, frame.bo, frame.co, frame.od, frame.oe, frame.of)


@dataclass(frozen=True)
class ConstructionResult:
    """Frame rebuilt from six lengths, with the auxiliary data used.

    aux_a, aux_b, aux_c are the euclidean helper sides G, H, I;
    ``aux_area`` is their Heron area and ``sine_factor`` the reciprocal
    circumdiameter, so each recovered sine is sine_factor times the
    matching helper side.
    """

    triangle: Triangle
    center: HPoint
    frame: CevianFrame
    aux_a: float
    aux_b: float
    aux_c: float
    aux_area: float
    sine_factor: float
    angle_bof: float
    angle_aof: float
    angle_bod: float
    relation_residual: float
    containment_residual: float


def construct_from_ratios(inp: RatioSumInput) -> ConstructionResult:
    """Rebuild a hyperbolic cevian frame from its six lengths.

    Fails as infeasible when the ratio-sum relation residual exceeds
    the construction tolerance, when the helper sides violate the
    triangle inequality (Heron radicand), or when a recovered sine
    leaves [0, 1].
    """
    ta, tb, tc = math.tanh(inp.ao), math.tanh(inp.bo), math.tanh(inp.co)
    alpha = ta / math.tanh(inp.od)
    beta = tb / math.tanh(inp.oe)
    gamma = tc / math.tanh(inp.of)
    relation_residual = alpha * beta * gamma - (alpha + beta + gamma + 2.0)
    if abs(relation_residual) > TOL_CONSTRUCT:
        raise InfeasibleInputError(
            f"ratio-sum relation residual {relation_residual:.3e} exceeds {TOL_CONSTRUCT}"
        )
    aux_a = ta / (alpha + 1.0)
    aux_b = tb / (beta + 1.0)
    aux_c = tc / (gamma + 1.0)
    radicand = (
        (aux_a + aux_b + aux_c)
        * (aux_a + aux_b - aux_c)
        * (aux_c + aux_a - aux_b)
        * (aux_b + aux_c - aux_a)
    )
    if radicand <= 0.0:
        raise InfeasibleGeometryError(
            "helper sides fail the triangle inequality (Heron radicand nonpositive)"
        )
    aux_area = 0.25 * math.sqrt(radicand)
    sine_factor = 2.0 * aux_area / (aux_a * aux_b * aux_c)
    for sine in (sine_factor * aux_a, sine_factor * aux_b, sine_factor * aux_c):
        if sine > 1.0 + TOL_CLAMP:
            raise InfeasibleGeometryError(f"recovered sine {sine} exceeds 1 (sine bound)")
    angle_bof = clamped_acos(
        (aux_b * aux_b + aux_c * aux_c - aux_a * aux_a) / (2.0 * aux_b * aux_c)
    )
    angle_aof = clamped_acos(
        (aux_c * aux_c + aux_a * aux_a - aux_b * aux_b) / (2.0 * aux_c * aux_a)
    )
    angle_bod = clamped_acos(
        (aux_a * aux_a + aux_b * aux_b - aux_c * aux_c) / (2.0 * aux_a * aux_b)
    )
    if abs(angle_bof + angle_aof + angle_bod - math.pi) > TOL_ID:
        raise InfeasibleGeometryError("recovered angles do not close up to pi")
    center = k.ORIGIN
    rays = {
        "a": (0.0, inp.ao),
        "f": (angle_aof, inp.of),
        "b": (angle_aof + angle_bof, inp.bo),
        "d": (math.pi, inp.od),
        "c": (angle_aof + math.pi, inp.co),
        "e": (angle_aof + angle_bof + math.pi, inp.oe),
    }
    laid = {
        name: k.point_along(center, k.tangent_direction(center, theta), length)
        for name, (theta, length) in rays.items()
    }
    containment_residual = max(
        k.geodesic_residual(k.geodesic_through(laid["b"], laid["c"]), laid["d"]),
        k.geodesic_residual(k.geodesic_through(laid["c"], laid["a"]), laid["e"]),
        k.geodesic_residual(k.geodesic_through(laid["a"], laid["b"]), laid["f"]),
    )
    if containment_residual > 1e-6:
        raise InfeasibleGeometryError(
            f"laid-off feet miss the opposite sides by {containment_residual:.3e}"
        )
    triangle = Triangle(Geometry.HYPERBOLIC, laid["a"], laid["b"], laid["c"])
    frame = cevian_frame(triangle, center)
    return ConstructionResult(
        triangle=triangle,
        center=center,
        frame=frame,
        aux_a=aux_a,
        aux_b=aux_b,
        aux_c=aux_c,
        aux_area=aux_area,
        sine_factor=sine_factor,
        angle_bof=angle_bof,
        angle_aof=angle_aof,
        angle_bod=angle_bod,
        relation_residual=relation_residual,
        containment_residual=containment_residual,
    )


@dataclass(frozen=True)
class ProjectionOracle:
    """Frame ratios recomputed through the tangent-plane projection."""

    ratios: tuple[float, float, float]
    max_deviation: float
    euclid_relation_residual: float
    collinearity_residual: float


def projection_oracle(frame: CevianFrame) -> ProjectionOracle:
    """Check a hyperbolic frame against its central projection.

    Projecting from the Minkowski origin onto the tangent plane at o
    sends geodesics to straight lines and every cevian length x to a
    euclidean length tanh(x), so the projected euclidean ratios must
    reproduce alpha, beta, gamma exactly.
    """
    if frame.tri.geometry is not Geometry.HYPERBOLIC:
        raise DomainError("the projection oracle expects a hyperbolic frame")
    base = frame.o
    pts = {
        name: k.radial_project(base, point)
        for name, point in (
            ("a", frame.tri.a),
            ("b", frame.tri.b),
            ("c", frame.tri.c),
            ("d", frame.d),
            ("e", frame.e),
            ("f", frame.f),
        )
    }
    norms = {name: math.hypot(tp.s, tp.t) for name, tp in pts.items()}
    ratios = (
        norms["a"] / norms["d"],
        norms["b"] / norms["e"],
        norms["c"] / norms["f"],
    )
    deviation = max(
        abs(ratios[0] - frame.alpha),
        abs(ratios[1] - frame.beta),
        abs(ratios[2] - frame.gamma),
    )
    r1, r2, r3 = ratios
    collinearity = max(
        abs(pts["a"].s * pts["d"].t - pts["a"].t * pts["d"].s)
        / (norms["a"] * norms["d"]),
        abs(pts["b"].s * pts["e"].t - pts["b"].t * pts["e"].s)
        / (norms["b"] * norms["e"]),
        abs(pts["c"].s * pts["f"].t - pts["c"].t * pts["f"].s)
        / (norms["c"] * norms["f"]),
    )
    return ProjectionOracle(
        ratios=ratios,
        max_deviation=deviation,
        euclid_relation_residual=r1 * r2 * r3 - (r1 + r2 + r3 + 2.0),
        collinearity_residual=collinearity,
    )


def ceva_product(tri: Triangle, d, e, f, require_concurrent: bool = True) -> float:
    """th(DB)/th(DC) * th(EC)/th(EA) * th(FA)/th(FB) ... no: the sinh form.

    Product sh(DB)/sh(DC) * sh(EC)/sh(EA) * sh(FA)/sh(FB) with sh = sinh,
    sin, or the identity per geometry.  The feet must lie on their side
    segments; with ``require_concurrent`` the three cevians must meet in
    one point, verified by pairwise intersection agreement.
    """
    geometry = tri.geometry
    for foot, (s1, s2) in ((d, (tri.b, tri.c)), (e, (tri.c, tri.a)), (f, (tri.a, tri.b))):
        if _on_side_residual(geometry, foot, s1, s2) > _SIDE_EPS:
            raise DomainError("a foot does not lie on its side line")
        if _between_residual(geometry, s1, foot, s2) > _SIDE_EPS:
            raise DomainError("a foot lies outside its side segment")
    if require_concurrent:
        meets = (
            _line_meet_segment(geometry, tri.a, d, tri.b, e),
            _line_meet_segment(geometry, tri.b, e, tri.c, f),
            _line_meet_segment(geometry, tri.c, f, tri.a, d),
        )
        spread = max(
            _dist(geometry, meets[0], meets[1]),
            _dist(geometry, meets[1], meets[2]),
            _dist(geometry, meets[2], meets[0]),
        )
        if spread > TOL_ID:
            raise DomainError(f"cevians are not concurrent (spread {spread:.3e})")
    if geometry is Geometry.HYPERBOLIC:
        sh = math.sinh
    elif geometry is Geometry.SPHERICAL:
        sh = math.sin
    else:
        sh = lambda x: x  # noqa: E731
    return (
        sh(_dist(geometry, d, tri.b))
        / sh(_dist(geometry, d, tri.c))
        * sh(_dist(geometry, e, tri.c))
        / sh(_dist(geometry, e, tri.a))
        * sh(_dist(geometry, f, tri.a))
        / sh(_dist(geometry, f, tri.b))
    )


def _concurrency_meet(geometry: Geometry, tri: Triangle, d, e):
    return _line_meet_segment(geometry, tri.a, d, tri.b, e)


def equilateral_triangle(side: float, geometry: Geometry) -> Triangle:
    """Equilateral triangle of the given side, centered on the base point."""
    if not side > 0.0:
        raise DomainError(f"side must be positive: {side}")
    if geometry is Geometry.HYPERBOLIC:
        if side > MAX_HYPERBOLIC_SIDE:
            raise DomainError(f"side above working range: {side}")
        radius = math.asinh(math.sqrt((2.0 / 3.0) * (math.cosh(side) - 1.0)))
        verts = [
            k.point_along(
                k.ORIGIN, k.tangent_direction(k.ORIGIN, 2.0 * math.pi * i / 3.0), radius
            )
            for i in range(3)
        ]
    elif geometry is Geometry.SPHERICAL:
        if side >= MAX_SPHERICAL_SIDE:
            raise DomainError(f"spherical side must stay below pi/2: {side}")
        radius = math.asin(math.sqrt((2.0 / 3.0) * (1.0 - math.cos(side))))
        e1, e2 = (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)
        verts = []
        for i in range(3):
            theta = 2.0 * math.pi * i / 3.0
            u = (
                math.cos(theta) * e1[0] + math.sin(theta) * e2[0],
                math.cos(theta) * e1[1] + math.sin(theta) * e2[1],
                math.cos(theta) * e1[2] + math.sin(theta) * e2[2],
            )
            verts.append(k.sphere_point_along(k.NORTH_POLE, u, radius))
    else:
        radius = side / math.sqrt(3.0)
        verts = [
            (
                radius * math.cos(2.0 * math.pi * i / 3.0),
                radius * math.sin(2.0 * math.pi * i / 3.0),
            )
            for i in range(3)
        ]
    return Triangle(geometry, *verts)


@dataclass(frozen=True)
class LambertReport:
    """Median measurements of an equilateral triangle.

    ``alpha`` is the cevian stretch ratio th(AO)/th(OD) of a median,
    ``ad_over_od`` the plain length ratio AD/OD, and
    ``median_residual`` how far the third median misses the common
    point of the first two.
    """

    geometry: Geometry
    side: float
    alpha: float
    ad_over_od: float
    median_residual: float


def lambert_median_report(side: float, geometry: Geometry) -> LambertReport:
    """Build the equilateral triangle, cut its medians, and measure."""
    tri = equilateral_triangle(side, geometry)
    d = _mid(geometry, tri.b, tri.c)
    e = _mid(geometry, tri.c, tri.a)
    f = _mid(geometry, tri.a, tri.b)
    o = _line_meet_segment(geometry, tri.a, d, tri.b, e)
    median_residual = _on_side_residual(geometry, o, tri.c, f)
    return LambertReport(
        geometry=geometry,
        side=side,
        alpha=stretch_ratio(geometry, _dist(geometry, tri.a, o), _dist(geometry, o, d)),
        ad_over_od=_dist(geometry, tri.a, d) / _dist(geometry, o, d),
        median_residual=median_residual,
    )
