"""Deterministic sample generators for the verification campaigns.

Streams are seeded with a string "label:seed:index" so that every
campaign, trial index, and geometry gets an independent substream that
reproduces exactly across platforms and processes.
"""

from __future__ import annotations

import math
import random

from . import kernel as k
from .cevians import Triangle
from .kernel import Geometry, HPoint

# Rejection thresholds keeping sampled triangles numerically honest.
_MIN_SIDE = 0.05
_MIN_ANGLE = 0.15

# Radius of the sampling disk around the base point.
_HYP_RADIUS = 3.0
_SPH_RADIUS = 0.6
_EUC_RADIUS = 3.0


def substream(label: str, seed: int, index: int = 0) -> random.Random:
    """Independent RNG for one (campaign, trial) pair."""
    return random.Random(f"{label}:{seed}:{index}")


def _hyp_disk_point(rng: random.Random) -> HPoint:
    # Area-uniform in the hyperbolic disk: cosh(r) is uniform.
    r = math.acosh(1.0 + rng.random() * (math.cosh(_HYP_RADIUS) - 1.0))
    theta = rng.random() * 2.0 * math.pi
    return k.point_along(k.ORIGIN, k.tangent_direction(k.ORIGIN, theta), r)


def _sph_cap_point(rng: random.Random):
    # Area-uniform in the polar cap: cos(colatitude) is uniform.
    c = 1.0 - rng.random() * (1.0 - math.cos(_SPH_RADIUS))
    colat = math.acos(c)
    theta = rng.random() * 2.0 * math.pi
    u = (math.cos(theta), math.sin(theta), 0.0)
    return k.sphere_point_along(k.NORTH_POLE, u, colat)


def _euc_disk_point(rng: random.Random) -> tuple[float, float]:
    r = _EUC_RADIUS * math.sqrt(rng.random())
    theta = rng.random() * 2.0 * math.pi
    return (r * math.cos(theta), r * math.sin(theta))


def _angles_ok(geometry: Geometry, tri: Triangle) -> bool:
    from .cevians import _angle  # local import avoids a cycle at module load

    corners = (
        (tri.a, tri.b, tri.c),
        (tri.b, tri.c, tri.a),
        (tri.c, tri.a, tri.b),
    )
    return all(_angle(geometry, v, p, q) >= _MIN_ANGLE for v, p, q in corners)


def sample_triangle(geometry: Geometry, rng: random.Random) -> Triangle:
    """Random nondegenerate triangle, rejection-sampled for fat corners."""
    picker = {
        Geometry.HYPERBOLIC: _hyp_disk_point,
        Geometry.SPHERICAL: _sph_cap_point,
        Geometry.EUCLIDEAN: _euc_disk_point,
    }[geometry]
    while True:
        verts = (picker(rng), picker(rng), picker(rng))
        try:
            tri = Triangle(geometry, *verts)
        except Exception:
            continue
        if min(tri.side_lengths()) < _MIN_SIDE:
            continue
        if not _angles_ok(geometry, tri):
            continue
        return tri


def sample_interior_point(tri: Triangle, rng: random.Random):
    """Point strictly inside the triangle.

    A positive combination of the vertex vectors, renormalized, stays
    inside on the hyperboloid and the sphere because central projection
    turns it into a convex combination; in the plane it is one already.
    Weights are bounded away from zero to keep the point off the sides.
    """
    w = [0.1 + 0.9 * rng.random() for _ in range(3)]
    s = sum(w)
    w = [x / s for x in w]
    if tri.geometry is Geometry.EUCLIDEAN:
        return (
            w[0] * tri.a[0] + w[1] * tri.b[0] + w[2] * tri.c[0],
            w[0] * tri.a[1] + w[1] * tri.b[1] + w[2] * tri.c[1],
        )
    combo = tuple(
        w[0] * tri.a.v[i] + w[1] * tri.b.v[i] + w[2] * tri.c.v[i] for i in range(3)
    )
    if tri.geometry is Geometry.HYPERBOLIC:
        return k.normalize_to_hyperboloid(combo)
    n = math.sqrt(combo[0] ** 2 + combo[1] ** 2 + combo[2] ** 2)
    return k.SpherePoint((combo[0] / n, combo[1] / n, combo[2] / n))


def sample_frame(geometry: Geometry, rng: random.Random):
    """Random cevian frame: a sampled triangle with an interior point."""
    from .cevians import cevian_frame

    tri = sample_triangle(geometry, rng)
    return cevian_frame(tri, sample_interior_point(tri, rng))
