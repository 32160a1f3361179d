"""Disk-model figures: scene assembly, invariant checks, SVG output.

Everything here works in conformal disk coordinates.  Geodesics become
circular arcs meeting the unit circle at right angles (or straight
chords through the center); hypercycles are drawn as sampled polylines
since they meet the boundary obliquely and no single circular arc
shared with the validation rule applies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernel as k
from .cevians import CevianFrame, ConstructionResult
from .errors import DomainError, GeometryError
from .kernel import Geodesic, Geometry, HPoint
from .lexell import AreaLocus, BaseConfig, Hypercycle, hypercycle_point

# Interior coordinates may poke out of the unit circle by rounding only.
_DISK_SLACK = 1e-9
# Orthogonality of arc circles against the boundary: |c|^2 = r^2 + 1.
_ORTHO_TOL = 1e-6
_CHORD_EPS = 1e-9
HYPERCYCLE_SEGMENTS = 64
HYPERCYCLE_SPAN = 3.0

XY = tuple[float, float]


@dataclass(frozen=True)
class ScenePoint:
    """Labeled marker at disk coordinates."""

    x: float
    y: float
    label: str
    style: str = "point"


@dataclass(frozen=True)
class SceneArc:
    """Arc of a circle orthogonal to the unit circle.

    The endpoints are where drawing starts and stops; the full circle
    has center (cx, cy) outside the disk and radius r.
    """

    x1: float
    y1: float
    x2: float
    y2: float
    cx: float
    cy: float
    r: float
    style: str = "side"


@dataclass(frozen=True)
class SceneChord:
    """Straight segment; the arc degenerates for geodesics through 0."""

    x1: float
    y1: float
    x2: float
    y2: float
    style: str = "side"


@dataclass(frozen=True)
class ScenePolyline:
    """Sampled curve, used for hypercycles."""

    points: tuple[XY, ...]
    style: str = "carrier"


@dataclass(frozen=True)
class SceneTriangle:
    """Shaded triangle, straight-edged in disk coordinates."""

    vertices: tuple[XY, XY, XY]
    style: str = "fill"


@dataclass(frozen=True)
class RenderScene:
    """Complete figure: every element in closed-unit-disk coordinates."""

    points: tuple[ScenePoint, ...] = ()
    arcs: tuple[SceneArc, ...] = ()
    chords: tuple[SceneChord, ...] = ()
    polylines: tuple[ScenePolyline, ...] = ()
    triangles: tuple[SceneTriangle, ...] = ()


def disk_xy(p: HPoint) -> XY:
    """Disk coordinates of a hyperboloid point."""
    d = k.hpoint_to_disk(p)
    return (d.u, d.w)


def ideal_endpoints(g: Geodesic) -> tuple[XY, XY]:
    """Boundary-circle points of a geodesic.

    A lightlike direction (1, x, y) lies on the geodesic's plane when
    n1 x + n2 y = n0; with a unit spacelike normal the line always cuts
    the unit circle twice.
    """
    if g.geometry is not Geometry.HYPERBOLIC:
        raise DomainError("only hyperbolic geodesics reach the disk boundary")
    n0, n1, n2 = g.normal
    l2 = n1 * n1 + n2 * n2
    fx, fy = n0 * n1 / l2, n0 * n2 / l2
    # l2 - n0^2 = <n, n> = 1 exactly, so the half-chord is 1/l2.
    hx, hy = -n2 / l2, n1 / l2
    return ((fx + hx, fy + hy), (fx - hx, fy - hy))


def _arc_center(u: XY, v: XY) -> tuple[XY, float]:
    dot = u[0] * v[0] + u[1] * v[1]
    denom = 1.0 + dot
    c = ((u[0] + v[0]) / denom, (u[1] + v[1]) / denom)
    r = math.sqrt((1.0 - dot) / denom)
    return c, r


def arc_for_geodesic(g: Geodesic, style: str = "side") -> SceneArc | SceneChord:
    """Full geodesic as a boundary-to-boundary arc or diameter."""
    u, v = ideal_endpoints(g)
    if abs(g.normal[0]) <= _CHORD_EPS:
        return SceneChord(u[0], u[1], v[0], v[1], style=style)
    c, r = _arc_center(u, v)
    return SceneArc(u[0], u[1], v[0], v[1], c[0], c[1], r, style=style)


def arc_for_segment(p: HPoint, q: HPoint, style: str = "side") -> SceneArc | SceneChord:
    """Geodesic segment between two points as an arc or chord."""
    g = k.geodesic_through(p, q)
    dp, dq = disk_xy(p), disk_xy(q)
    if abs(g.normal[0]) <= _CHORD_EPS:
        return SceneChord(dp[0], dp[1], dq[0], dq[1], style=style)
    u, v = ideal_endpoints(g)
    c, r = _arc_center(u, v)
    return SceneArc(dp[0], dp[1], dq[0], dq[1], c[0], c[1], r, style=style)


def polyline_for_hypercycle(
    hc: Hypercycle,
    span: float = HYPERCYCLE_SPAN,
    segments: int = HYPERCYCLE_SEGMENTS,
    style: str = "carrier",
) -> ScenePolyline:
    """Hypercycle sampled at evenly spaced axis arclengths."""
    if segments < 2:
        raise DomainError("need at least two segments")
    step = 2.0 * span / segments
    pts = tuple(
        disk_xy(hypercycle_point(hc, -span + i * step)) for i in range(segments + 1)
    )
    return ScenePolyline(pts, style=style)


def _point(p: HPoint, label: str) -> ScenePoint:
    x, y = disk_xy(p)
    return ScenePoint(x, y, label)


def scene_for_frame(frame: CevianFrame) -> RenderScene:
    """Triangle, cevians and their feet for one cevian frame."""
    tri = frame.tri
    if tri.geometry is not Geometry.HYPERBOLIC:
        raise DomainError("disk figures exist for hyperbolic frames only")
    sides = tuple(
        arc_for_segment(p, q, style="side")
        for p, q in ((tri.a, tri.b), (tri.b, tri.c), (tri.c, tri.a))
    )
    cevians = tuple(
        arc_for_segment(p, q, style="cevian")
        for p, q in ((tri.a, frame.d), (tri.b, frame.e), (tri.c, frame.f))
    )
    elements = sides + cevians
    return RenderScene(
        points=(
            _point(tri.a, "A"),
            _point(tri.b, "B"),
            _point(tri.c, "C"),
            _point(frame.o, "O"),
            _point(frame.d, "D"),
            _point(frame.e, "E"),
            _point(frame.f, "F"),
        ),
        arcs=tuple(e for e in elements if isinstance(e, SceneArc)),
        chords=tuple(e for e in elements if isinstance(e, SceneChord)),
        triangles=(
            SceneTriangle((disk_xy(tri.a), disk_xy(tri.b), disk_xy(tri.c))),
        ),
    )


def scene_for_construction(result: ConstructionResult) -> RenderScene:
    """Figure for a frame reconstructed from six cevian lengths."""
    return scene_for_frame(result.frame)


def _curve_label(p: HPoint, label: str) -> ScenePoint:
    x, y = disk_xy(p)
    return ScenePoint(x, y, label, style="curve")


def scene_for_locus(locus: AreaLocus, apex: HPoint) -> RenderScene:
    """Base, axis, carrier and mirror hypercycles, and the apex.

    The mirror through the base vertices is labeled C, the carrier the
    apex rides on C′, and the equidistant axis geodesic G.
    """
    base_line = arc_for_geodesic(locus.base.base_line(), style="base")
    axis = arc_for_geodesic(locus.carrier.axis, style="axis")
    elements = (base_line, axis)
    label_s = 0.85 * HYPERCYCLE_SPAN
    return RenderScene(
        points=(
            _point(locus.base.a, "A"),
            _point(locus.base.b, "B"),
            _point(apex, "P"),
            _curve_label(hypercycle_point(locus.mirror, label_s), "C"),
            _curve_label(hypercycle_point(locus.carrier, label_s), "C′"),
            _curve_label(
                hypercycle_point(Hypercycle(locus.carrier.axis, 0.0), label_s), "G"
            ),
        ),
        arcs=tuple(e for e in elements if isinstance(e, SceneArc)),
        chords=tuple(e for e in elements if isinstance(e, SceneChord)),
        polylines=(
            polyline_for_hypercycle(locus.carrier, style="carrier"),
            polyline_for_hypercycle(locus.mirror, style="mirror"),
        ),
        triangles=(
            SceneTriangle(
                (disk_xy(locus.base.a), disk_xy(locus.base.b), disk_xy(apex))
            ),
        ),
    )


def scene_for_foliation(base: BaseConfig, leaves: tuple[AreaLocus, ...]) -> RenderScene:
    """Nested constant-area leaves over one base."""
    base_line = arc_for_geodesic(base.base_line(), style="base")
    return RenderScene(
        points=(_point(base.a, "A"), _point(base.b, "B")),
        arcs=(base_line,) if isinstance(base_line, SceneArc) else (),
        chords=(base_line,) if isinstance(base_line, SceneChord) else (),
        polylines=tuple(
            polyline_for_hypercycle(leaf.carrier, style="carrier") for leaf in leaves
        ),
    )


def _check_inside(x: float, y: float, what: str) -> None:
    if x * x + y * y > 1.0 + _DISK_SLACK:
        raise GeometryError(f"{what} outside the closed unit disk: ({x}, {y})")


def validate_scene(scene: RenderScene) -> None:
    """Check every invariant a disk figure must satisfy.

    Coordinates stay in the closed unit disk (arc centers excepted:
    orthogonal circles keep their centers outside), every arc circle is
    orthogonal to the boundary, and arc endpoints lie on their circle.
    """
    for pt in scene.points:
        _check_inside(pt.x, pt.y, f"point {pt.label!r}")
    for ch in scene.chords:
        _check_inside(ch.x1, ch.y1, "chord endpoint")
        _check_inside(ch.x2, ch.y2, "chord endpoint")
    for arc in scene.arcs:
        _check_inside(arc.x1, arc.y1, "arc endpoint")
        _check_inside(arc.x2, arc.y2, "arc endpoint")
        ortho = abs(arc.cx * arc.cx + arc.cy * arc.cy - (arc.r * arc.r + 1.0))
        if ortho > _ORTHO_TOL:
            raise GeometryError(f"arc circle not orthogonal to the boundary: {ortho}")
        for ex, ey in ((arc.x1, arc.y1), (arc.x2, arc.y2)):
            gap = abs(math.hypot(ex - arc.cx, ey - arc.cy) - arc.r)
            if gap > _ORTHO_TOL:
                raise GeometryError(f"arc endpoint off its circle by {gap}")
    for pl in scene.polylines:
        if len(pl.points) < 2:
            raise GeometryError("polyline needs at least two points")
        for x, y in pl.points:
            _check_inside(x, y, "polyline vertex")
    for tr in scene.triangles:
        for x, y in tr.vertices:
            _check_inside(x, y, "triangle vertex")


_SVG_SIZE = 1000.0
_SVG_CENTER = 500.0
_SVG_RADIUS = 480.0

_CSS = """\
.boundary { fill: none; stroke: #333; stroke-width: 2; }
.side { fill: none; stroke: #1f4e79; stroke-width: 2.5; }
.cevian { fill: none; stroke: #b05920; stroke-width: 1.8; }
.base { fill: none; stroke: #1f4e79; stroke-width: 2.5; }
.axis { fill: none; stroke: #777; stroke-width: 1.5; stroke-dasharray: 8 5; }
.carrier { fill: none; stroke: #1f7a33; stroke-width: 2.2; }
.mirror { fill: none; stroke: #1f7a33; stroke-width: 2.2; stroke-dasharray: 4 4; }
.fill { fill: #1f4e79; fill-opacity: 0.10; stroke: none; }
.point { fill: #111; }
.label { font: 28px sans-serif; fill: #111; }"""


def _sx(x: float) -> float:
    return _SVG_CENTER + _SVG_RADIUS * x


def _sy(y: float) -> float:
    return _SVG_CENTER - _SVG_RADIUS * y


def _f(v: float) -> str:
    return f"{v:.4f}"


def _arc_path(arc: SceneArc) -> str:
    # The visible piece of an orthogonal circle always subtends less
    # than pi at its center, so the small-arc flag is fixed.  The y
    # flip turns a counterclockwise sweep into an SVG sweep of 1.
    cross = (arc.x1 - arc.cx) * (arc.y2 - arc.cy) - (arc.y1 - arc.cy) * (
        arc.x2 - arc.cx
    )
    sweep = 1 if cross > 0.0 else 0
    sr = _f(_SVG_RADIUS * arc.r)
    return (
        f'<path class="{arc.style}" d="M {_f(_sx(arc.x1))} {_f(_sy(arc.y1))} '
        f'A {sr} {sr} 0 0 {sweep} {_f(_sx(arc.x2))} {_f(_sy(arc.y2))}"/>'
    )


def scene_to_svg(scene: RenderScene) -> str:
    """Serialize a validated scene as a standalone SVG document."""
    validate_scene(scene)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {_SVG_SIZE:.0f} {_SVG_SIZE:.0f}">',
        f"<style>{_CSS}</style>",
        f'<circle class="boundary" cx="{_f(_SVG_CENTER)}" cy="{_f(_SVG_CENTER)}" '
        f'r="{_f(_SVG_RADIUS)}"/>',
    ]
    for tr in scene.triangles:
        coords = " ".join(f"{_f(_sx(x))},{_f(_sy(y))}" for x, y in tr.vertices)
        parts.append(f'<polygon class="{tr.style}" points="{coords}"/>')
    for arc in scene.arcs:
        parts.append(_arc_path(arc))
    for ch in scene.chords:
        parts.append(
            f'<line class="{ch.style}" x1="{_f(_sx(ch.x1))}" y1="{_f(_sy(ch.y1))}" '
            f'x2="{_f(_sx(ch.x2))}" y2="{_f(_sy(ch.y2))}"/>'
        )
    for pl in scene.polylines:
        coords = " ".join(f"{_f(_sx(x))},{_f(_sy(y))}" for x, y in pl.points)
        parts.append(f'<polyline class="{pl.style}" points="{coords}"/>')
    for pt in scene.points:
        if pt.style != "curve":
            parts.append(
                f'<circle class="{pt.style}" cx="{_f(_sx(pt.x))}" '
                f'cy="{_f(_sy(pt.y))}" r="5"/>'
            )
        parts.append(
            f'<text class="label" x="{_f(_sx(pt.x) + 10.0)}" '
            f'y="{_f(_sy(pt.y) - 10.0)}">{pt.label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
