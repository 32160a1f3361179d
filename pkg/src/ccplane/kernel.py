"""Point and geodesic primitives on the hyperboloid and the sphere.

The hyperbolic plane is the upper sheet x0 > 0 of <x, x> = -1 in
Minkowski 3-space with <x, y> = -x0*y0 + x1*y1 + x2*y2.  Distances obey
cosh d(p, q) = -<p, q>, geodesics are cut out by unit spacelike normals
(containment is <x, n> = 0), and moving distance t from p along a unit
tangent n gives cosh(t) p + sinh(t) n.  The sphere uses unit vectors in
ordinary Euclidean 3-space with the same vocabulary.

Composite results are renormalized onto their surface, so drift stays
below TOL_POINT and constructions compose safely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import corevec as vec
from .constants import MAX_HYPERBOLIC_SIDE, TOL_CLAMP, TOL_ID, TOL_POINT
from .errors import (
    ContractViolationError,
    DegenerateInputError,
    DomainError,
    InvalidPointError,
    OutOfModelError,
)

Vec3 = tuple[float, float, float]

# Two curves count as identical when their cross product is this small.
_CROSS_EPS = 1e-10


class Geometry(str, Enum):
    HYPERBOLIC = "hyperbolic"
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"


@dataclass(frozen=True)
class HPoint:
    """Point of the hyperbolic plane, hyperboloid coordinates."""

    v: Vec3

    def __post_init__(self) -> None:
        # The quadratic form carries rounding noise of order eps * v0^2,
        # so the acceptance band must widen with the point's height.
        q = vec.minner(self.v, self.v)
        band = TOL_POINT * (1.0 + self.v[0] * self.v[0])
        if not (abs(q + 1.0) <= band) or self.v[0] <= 0.0:
            raise InvalidPointError(f"not on the upper hyperboloid sheet: {self.v}")


@dataclass(frozen=True)
class SpherePoint:
    """Point of the unit sphere."""

    v: Vec3

    def __post_init__(self) -> None:
        q = vec.sdot(self.v, self.v)
        if not (abs(q - 1.0) <= TOL_POINT):
            raise InvalidPointError(f"not on the unit sphere: {self.v}")


@dataclass(frozen=True)
class DiskPoint:
    """Conformal disk coordinates, strictly inside the unit circle."""

    u: float
    w: float

    def __post_init__(self) -> None:
        if not (self.u * self.u + self.w * self.w < 1.0):
            raise OutOfModelError(f"outside the open unit disk: ({self.u}, {self.w})")


@dataclass(frozen=True)
class TangentPoint:
    """Cartesian coordinates in a tangent plane at a chosen base point."""

    s: float
    t: float


@dataclass(frozen=True)
class Geodesic:
    """Complete geodesic, stored as the unit normal of its plane.

    Hyperbolic: <n, n> = +1 and the curve is {x upper sheet: <x, n> = 0}.
    Spherical: |n| = 1 and the curve is the great circle {x: x . n = 0}.
    """

    normal: Vec3
    geometry: Geometry = Geometry.HYPERBOLIC

    def __post_init__(self) -> None:
        if self.geometry is Geometry.HYPERBOLIC:
            q = vec.minner(self.normal, self.normal)
            # A geodesic far from the origin has a large timelike normal
            # component whose squares cancel; widen the band with it.
            band = TOL_POINT * (1.0 + self.normal[0] * self.normal[0])
        elif self.geometry is Geometry.SPHERICAL:
            q = vec.sdot(self.normal, self.normal)
            band = TOL_POINT
        else:
            raise ContractViolationError("geodesic tag must be hyperbolic or spherical")
        if not (abs(q - 1.0) <= band):
            raise InvalidPointError(f"normal is not unit for {self.geometry}: {self.normal}")


ORIGIN = HPoint((1.0, 0.0, 0.0))
NORTH_POLE = SpherePoint((0.0, 0.0, 1.0))


def mink_inner(x: Vec3, y: Vec3) -> float:
    """Minkowski bilinear form of two raw coordinate triples."""
    return vec.minner(x, y)


def normalize_to_hyperboloid(v: Vec3) -> HPoint:
    """Scale a timelike vector onto the upper sheet."""
    if vec.minner(v, v) >= 0.0:
        raise InvalidPointError(f"not timelike: {v}")
    return HPoint(vec.mnormalize_point(v))


def hdist(p: HPoint, q: HPoint) -> float:
    """Hyperbolic distance between two points."""
    m = -vec.minner(p.v, q.v)
    # The inner product of two far points carries rounding noise of
    # order eps * p0 * q0, so the invariant clamp widens with height.
    if m < 1.0 - TOL_CLAMP * (1.0 + p.v[0] * q.v[0]):
        raise InvalidPointError(f"separation invariant violated: -<p,q> = {m}")
    return vec.mdist(p.v, q.v)


def _check_unit_tangent(p: HPoint, n: Vec3) -> None:
    # Tangent components at a far base point grow like cosh(d); both
    # checks widen with the rounding noise of their inner products.
    if abs(vec.minner(n, n) - 1.0) > TOL_ID * (1.0 + n[0] * n[0]):
        raise ContractViolationError(f"direction is not unit spacelike: {n}")
    if abs(vec.minner(p.v, n)) > TOL_ID * (1.0 + p.v[0] * abs(n[0])):
        raise ContractViolationError(f"direction is not tangent at the point: {n}")


def point_along(p: HPoint, n: Vec3, t: float) -> HPoint:
    """Point at signed arclength t from p along the unit tangent n."""
    _check_unit_tangent(p, n)
    return HPoint(vec.mgeo_point(p.v, n, t))


def direction(p: HPoint, q: HPoint) -> Vec3:
    """Unit tangent at p toward q; the two points must be distinct."""
    if hdist(p, q) <= TOL_POINT:
        raise DegenerateInputError("cannot take a direction between coincident points")
    return vec.mtangent(p.v, q.v)


def geodesic_through(p: HPoint, q: HPoint) -> Geodesic:
    """Oriented geodesic through two distinct points.

    The normal is fixed so that (p, direction(p, q), normal) is a
    right-handed frame; swapping the arguments flips it.
    """
    if hdist(p, q) <= TOL_POINT:
        raise DegenerateInputError("geodesic through coincident points")
    return Geodesic(vec.mnormalize_space(vec.mcross(p.v, q.v)))


def geodesic_residual(g: Geodesic, p: HPoint) -> float:
    """|<p, n>|: zero exactly when p lies on g."""
    _expect(g, Geometry.HYPERBOLIC)
    return abs(vec.minner(p.v, g.normal))


def signed_geodesic_distance(g: Geodesic, p: HPoint) -> float:
    """Distance from p to g, signed by the side of the normal."""
    _expect(g, Geometry.HYPERBOLIC)
    return math.asinh(vec.minner(p.v, g.normal))


def _expect(g: Geodesic, geometry: Geometry) -> None:
    if g.geometry is not geometry:
        raise ContractViolationError(f"expected a {geometry.value} geodesic")


def intersect_geodesics(g1: Geodesic, g2: Geodesic) -> HPoint | None:
    """Common point of two geodesics, or None when they do not meet.

    Returns None for ultraparallel and asymptotically parallel pairs;
    identical geodesics are rejected as degenerate.
    """
    _expect(g1, Geometry.HYPERBOLIC)
    _expect(g2, Geometry.HYPERBOLIC)
    c = vec.mcross(g1.normal, g2.normal)
    if max(abs(c[0]), abs(c[1]), abs(c[2])) <= _CROSS_EPS:
        raise DegenerateInputError("identical geodesics")
    if vec.minner(c, c) >= 0.0:
        return None
    return HPoint(vec.mnormalize_point(c))


# Beyond this time coordinate (distance ~5 from the origin) tangent
# components grow large enough for their Gram products to wash out
# small angles, so the vertex is first moved onto the origin.
_RECENTRE_LIMIT = 75.0
_E0: Vec3 = (1.0, 0.0, 0.0)


def _recentre(v: Vec3, pts: tuple[Vec3, ...]) -> list[Vec3]:
    # Point reflection about the midpoint of [v, origin]: an isometry
    # taking v exactly to the origin.  <v+e0, v+e0> = -(2 + 2 v0), so
    # the midpoint comes out in closed form with no cancellation.
    s = math.sqrt(2.0 + 2.0 * v[0])
    m = ((v[0] + 1.0) / s, v[1] / s, v[2] / s)
    out = []
    for x in pts:
        d = 2.0 * vec.minner(x, m)
        out.append((-x[0] - d * m[0], -x[1] - d * m[1], -x[2] - d * m[2]))
    return out


def angle_at(v: HPoint, p: HPoint, q: HPoint) -> float:
    """Interior angle at v between the segments to p and to q."""
    if hdist(v, p) <= TOL_POINT or hdist(v, q) <= TOL_POINT:
        raise DegenerateInputError("cannot take a direction between coincident points")
    if v.v[0] > _RECENTRE_LIMIT:
        rp, rq = _recentre(v.v, (p.v, q.v))
        u1 = vec.mtangent(_E0, rp)
        u2 = vec.mtangent(_E0, rq)
    else:
        u1 = vec.mtangent(v.v, p.v)
        u2 = vec.mtangent(v.v, q.v)
    c = vec.minner(u1, u2)
    w = (u2[0] - c * u1[0], u2[1] - c * u1[1], u2[2] - c * u1[2])
    s = math.sqrt(max(vec.minner(w, w), 0.0))
    return math.atan2(s, c)


def foot_of_perpendicular(p: HPoint, g: Geodesic) -> HPoint:
    """Nearest point of g to p; sinh of the drop equals |<p, n>|."""
    _expect(g, Geometry.HYPERBOLIC)
    return HPoint(vec.mfoot(p.v, g.normal))


def midpoint(p: HPoint, q: HPoint) -> HPoint:
    """Point halfway along the segment from p to q."""
    return HPoint(vec.mmid(p.v, q.v))


def reflect_across(g: Geodesic, p: HPoint) -> HPoint:
    """Image of p under the reflection fixing g."""
    _expect(g, Geometry.HYPERBOLIC)
    return HPoint(vec.mreflect(p.v, g.normal))


def disk_to_hpoint(d: DiskPoint) -> HPoint:
    """Lift conformal disk coordinates onto the hyperboloid."""
    s = d.u * d.u + d.w * d.w
    f = 1.0 / (1.0 - s)
    return HPoint(vec.mnormalize_point(((1.0 + s) * f, 2.0 * d.u * f, 2.0 * d.w * f)))


def hpoint_to_disk(p: HPoint) -> DiskPoint:
    """Project a hyperboloid point into the conformal disk."""
    f = 1.0 / (1.0 + p.v[0])
    return DiskPoint(p.v[1] * f, p.v[2] * f)


def tangent_basis(base: HPoint) -> tuple[Vec3, Vec3]:
    """Deterministic orthonormal basis of the tangent plane at base."""
    a = (0.0, 1.0, 0.0)
    c = vec.minner(a, base.v)
    e1 = vec.mnormalize_space(
        (a[0] + c * base.v[0], a[1] + c * base.v[1], a[2] + c * base.v[2])
    )
    e2 = vec.mcross(base.v, e1)
    return e1, e2


def tangent_direction(base: HPoint, theta: float) -> Vec3:
    """Unit tangent at base making angle theta with the first basis leg."""
    e1, e2 = tangent_basis(base)
    c = math.cos(theta)
    s = math.sin(theta)
    return (
        c * e1[0] + s * e2[0],
        c * e1[1] + s * e2[1],
        c * e1[2] + s * e2[2],
    )


def radial_project(base: HPoint, p: HPoint) -> TangentPoint:
    """Central projection of p onto the tangent plane at base.

    The ray from the Minkowski origin through p meets the plane
    {y: <y, base> = -1} at p / cosh(hdist(base, p)); coordinates are
    taken in tangent_basis(base), so |result| = tanh(hdist(base, p))
    and geodesics through base project to straight lines through 0.
    """
    d = hdist(base, p)
    if d > MAX_HYPERBOLIC_SIDE:
        raise DomainError(f"projection point too far from base: {d}")
    f = 1.0 / math.cosh(d)
    pp = (p.v[0] * f, p.v[1] * f, p.v[2] * f)
    e1, e2 = tangent_basis(base)
    return TangentPoint(vec.minner(pp, e1), vec.minner(pp, e2))


def sphere_dist(p: SpherePoint, q: SpherePoint) -> float:
    """Great-circle distance between two sphere points."""
    return vec.sdist(p.v, q.v)


def sphere_direction(p: SpherePoint, q: SpherePoint) -> Vec3:
    """Unit tangent at p toward q; rejects coincident and antipodal pairs."""
    c = vec.scross(p.v, q.v)
    if math.sqrt(vec.sdot(c, c)) <= _CROSS_EPS:
        raise DegenerateInputError("direction undefined for coincident or antipodal points")
    return vec.stangent(p.v, q.v)


def sphere_geodesic(p: SpherePoint, q: SpherePoint) -> Geodesic:
    """Great circle through two points that span a unique one."""
    c = vec.scross(p.v, q.v)
    if math.sqrt(vec.sdot(c, c)) <= _CROSS_EPS:
        raise DegenerateInputError("great circle undefined for coincident or antipodal points")
    return Geodesic(vec.snormalize(c), Geometry.SPHERICAL)


def sphere_geodesic_residual(g: Geodesic, p: SpherePoint) -> float:
    """|p . n|: zero exactly when p lies on the great circle."""
    _expect(g, Geometry.SPHERICAL)
    return abs(vec.sdot(p.v, g.normal))


def sphere_point_along(p: SpherePoint, n: Vec3, t: float) -> SpherePoint:
    """Point at signed arclength t from p along the unit tangent n."""
    if abs(vec.sdot(n, n) - 1.0) > TOL_ID:
        raise ContractViolationError(f"direction is not unit: {n}")
    if abs(vec.sdot(p.v, n)) > TOL_ID:
        raise ContractViolationError(f"direction is not tangent at the point: {n}")
    return SpherePoint(vec.sgeo_point(p.v, n, t))


def sphere_angle_at(v: SpherePoint, p: SpherePoint, q: SpherePoint) -> float:
    """Interior angle at v between the arcs to p and to q."""
    u1 = sphere_direction(v, p)
    u2 = sphere_direction(v, q)
    c = vec.sdot(u1, u2)
    w = (u2[0] - c * u1[0], u2[1] - c * u1[1], u2[2] - c * u1[2])
    s = math.sqrt(max(vec.sdot(w, w), 0.0))
    return math.atan2(s, c)


def sphere_foot(p: SpherePoint, g: Geodesic) -> SpherePoint:
    """Nearest point of the great circle to p (p must not be its pole)."""
    _expect(g, Geometry.SPHERICAL)
    s = vec.sdot(p.v, g.normal)
    if 1.0 - abs(s) <= TOL_POINT:
        raise DegenerateInputError("every circle point is equidistant from its pole")
    return SpherePoint(vec.sfoot(p.v, g.normal))


def sphere_midpoint(p: SpherePoint, q: SpherePoint) -> SpherePoint:
    """Midpoint of the shorter arc between p and q."""
    w = (p.v[0] + q.v[0], p.v[1] + q.v[1], p.v[2] + q.v[2])
    if math.sqrt(vec.sdot(w, w)) <= _CROSS_EPS:
        raise DegenerateInputError("midpoint undefined for antipodal points")
    return SpherePoint(vec.snormalize(w))


def sphere_intersections(g1: Geodesic, g2: Geodesic) -> tuple[SpherePoint, SpherePoint]:
    """The antipodal pair where two distinct great circles meet."""
    _expect(g1, Geometry.SPHERICAL)
    _expect(g2, Geometry.SPHERICAL)
    c = vec.scross(g1.normal, g2.normal)
    if math.sqrt(vec.sdot(c, c)) <= _CROSS_EPS:
        raise DegenerateInputError("identical great circles")
    x = vec.snormalize(c)
    return SpherePoint(x), SpherePoint((-x[0], -x[1], -x[2]))
