"""Constant-curvature plane geometry with verified classical identities.

Cevian ratio sums, Menelaus and Ceva products, Lambert's median ratio
and Lexell-style equal-area loci, on the hyperbolic plane (hyperboloid
model), the unit sphere and the Euclidean plane.
"""

from .corevec import BACKEND
from .kernel import (
    ORIGIN,
    DiskPoint,
    Geodesic,
    Geometry,
    HPoint,
    SpherePoint,
    TangentPoint,
    angle_at,
    disk_to_hpoint,
    foot_of_perpendicular,
    geodesic_through,
    hdist,
    hpoint_to_disk,
    intersect_geodesics,
    midpoint,
    mink_inner,
    point_along,
    radial_project,
    reflect_across,
    sphere_angle_at,
    sphere_dist,
    sphere_geodesic,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ORIGIN",
    "DiskPoint",
    "Geodesic",
    "Geometry",
    "HPoint",
    "SpherePoint",
    "TangentPoint",
    "angle_at",
    "disk_to_hpoint",
    "foot_of_perpendicular",
    "geodesic_through",
    "hdist",
    "hpoint_to_disk",
    "intersect_geodesics",
    "midpoint",
    "mink_inner",
    "point_along",
    "radial_project",
    "reflect_across",
    "sphere_angle_at",
    "sphere_dist",
    "sphere_geodesic",
    "__version__",
]
