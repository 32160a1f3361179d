"""Command-line front end: campaigns, constructions, loci, figures.

Exit codes: 0 success, 1 infeasible input or failed verification,
2 usage error.  Identical flags produce byte-identical JSON.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import kernel as k
from .cevians import RatioSumInput, construct_from_ratios
from .errors import GeometryError
from .kernel import Geometry
from .lexell import BaseConfig, foliation, lexell_locus, locus_residuals
from .render import (
    ideal_endpoints,
    scene_for_construction,
    scene_for_foliation,
    scene_for_frame,
    scene_for_locus,
    scene_to_svg,
)
from .sampling import sample_frame, substream
from .verify import (
    SUPPORTED,
    THEOREMS,
    json_document,
    report_record,
    run_verification,
)

_UNITS = {"units": "model-units", "angle_units": "radians"}


def _parse_geometry(value: str) -> Geometry:
    try:
        return Geometry(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown geometry: {value!r}")


def _parse_areas(value: str) -> tuple[float, ...]:
    try:
        areas = tuple(float(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad area list: {value!r}")
    if not areas:
        raise argparse.ArgumentTypeError("area list is empty")
    return areas


def _parse_disk_point(value: str) -> tuple[float, float]:
    parts = value.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected U,W disk coordinates: {value!r}")
    try:
        return (float(parts[0]), float(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad disk coordinates: {value!r}")


def _emit(document: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(document)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(document)


def _write_svg(svg: str, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(svg)


def _cmd_verify(args, parser) -> int:
    if args.geometry not in SUPPORTED[args.theorem]:
        parser.error(
            f"{args.theorem} is not supported on {args.geometry.value} geometry"
        )
    report = run_verification(
        args.theorem, args.geometry, args.trials, args.seed, args.tolerance
    )
    _emit(json_document(report_record(report)), args.json)
    return 0 if report.passed else 1


def _cmd_construct(args, parser) -> int:
    ao, bo, co, od, oe, of = args.lengths
    result = construct_from_ratios(RatioSumInput(ao, bo, co, od, oe, of))
    frame = result.frame
    inputs = (ao, bo, co, od, oe, of)
    measured = (frame.ao, frame.bo, frame.co, frame.od, frame.oe, frame.of)
    length_residual = max(abs(m - i) for m, i in zip(measured, inputs))
    angle_residual = max(
        abs(frame.p - result.angle_bof),
        abs(frame.q - result.angle_aof),
        abs(frame.r - result.angle_bod),
    )
    da = k.hpoint_to_disk(result.triangle.a)
    db = k.hpoint_to_disk(result.triangle.b)
    dc = k.hpoint_to_disk(result.triangle.c)
    record = {
        "delta": result.sine_factor,
        "heron_area": result.aux_area,
        "aux_g": result.aux_a,
        "aux_h": result.aux_b,
        "aux_i": result.aux_c,
        "angle_bof": result.angle_bof,
        "angle_aof": result.angle_aof,
        "angle_bod": result.angle_bod,
        "angle_boc": math.pi - result.angle_bof,
        "angle_aoc": math.pi - result.angle_aof,
        "angle_aob": math.pi - result.angle_bod,
        "vertex_ax": da.u,
        "vertex_ay": da.w,
        "vertex_bx": db.u,
        "vertex_by": db.w,
        "vertex_cx": dc.u,
        "vertex_cy": dc.w,
        "relation_residual": result.relation_residual,
        "containment_residual": result.containment_residual,
        "roundtrip_length_residual": length_residual,
        "roundtrip_angle_residual": angle_residual,
        **_UNITS,
    }
    _emit(json_document(record), args.json)
    if args.svg is not None:
        _write_svg(scene_to_svg(scene_for_construction(result)), args.svg)
    return 0


def _axis_angles(axis) -> tuple[float, float]:
    (x1, y1), (x2, y2) = ideal_endpoints(axis)
    return tuple(sorted((math.atan2(y1, x1), math.atan2(y2, x2))))


def _lexell_apex(args):
    # A zero height or an on-axis disk point lands on the base line;
    # the locus construction rejects that as degenerate (exit 1).
    if args.apex_y is not None:
        e2 = k.tangent_direction(k.ORIGIN, math.pi / 2.0)
        return k.point_along(k.ORIGIN, e2, args.apex_y)
    u, w = args.apex
    return k.disk_to_hpoint(k.DiskPoint(u, w))


def _cmd_lexell(args, parser) -> int:
    if args.geometry is not Geometry.HYPERBOLIC:
        parser.error("the constant-area locus is hyperbolic-only")
    base = BaseConfig.from_half_distance(args.x)
    if args.foliate is not None:
        leaves = foliation(base, list(args.foliate))
        record = {
            "half_distance": args.x,
            "leaf_count": len(leaves),
            "areas": [leaf.area for leaf in leaves],
            "offsets": [leaf.carrier.offset for leaf in leaves],
            **_UNITS,
        }
        _emit(json_document(record), args.json)
        if args.svg is not None:
            _write_svg(scene_to_svg(scene_for_foliation(base, tuple(leaves))), args.svg)
        return 0
    if args.apex_y is None and args.apex is None:
        parser.error("need an apex: --apex-y or --apex (or --foliate)")
    apex = _lexell_apex(args)
    locus = lexell_locus(base, apex)
    residuals = locus_residuals(locus, samples=args.samples)
    angle_lo, angle_hi = _axis_angles(locus.carrier.axis)
    record = {
        "half_distance": args.x,
        "axis_angle_1": angle_lo,
        "axis_angle_2": angle_hi,
        "offset": locus.carrier.offset,
        "area": locus.area,
        "area_spread": residuals.area_spread,
        "samples": args.samples,
        **_UNITS,
    }
    _emit(json_document(record), args.json)
    if args.svg is not None:
        _write_svg(scene_to_svg(scene_for_locus(locus, apex)), args.svg)
    return 0


def _cmd_render(args, parser) -> int:
    if args.figure == "frame":
        frame = sample_frame(Geometry.HYPERBOLIC, substream("render-frame", args.seed))
        scene = scene_for_frame(frame)
    elif args.figure == "locus":
        if args.apex_y is None and args.apex is None:
            parser.error("locus figures need an apex: --apex-y or --apex")
        base = BaseConfig.from_half_distance(args.x)
        apex = _lexell_apex(args)
        scene = scene_for_locus(lexell_locus(base, apex), apex)
    else:
        if args.foliate is None:
            parser.error("foliation figures need --foliate AREAS")
        base = BaseConfig.from_half_distance(args.x)
        leaves = tuple(foliation(base, list(args.foliate)))
        scene = scene_for_foliation(base, leaves)
    _write_svg(scene_to_svg(scene), args.svg)
    return 0


def _add_apex_flags(sub) -> None:
    sub.add_argument("--apex-y", type=float, default=None,
                     help="apex height on the perpendicular axis (model units)")
    sub.add_argument("--apex", type=_parse_disk_point, default=None,
                     help="apex as U,W disk coordinates")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccplane",
        description="Constant-curvature plane toolkit: verification campaigns, "
        "cevian constructions, constant-area loci, disk figures.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_verify = subs.add_parser("verify", help="run a randomized identity campaign")
    p_verify.add_argument("theorem", choices=THEOREMS)
    p_verify.add_argument("--geometry", type=_parse_geometry,
                          default=Geometry.HYPERBOLIC)
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tolerance", type=float, default=None)
    p_verify.add_argument("--json", metavar="PATH", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_construct = subs.add_parser(
        "construct", help="rebuild a cevian frame from six lengths"
    )
    p_construct.add_argument(
        "lengths", type=float, nargs=6, metavar="LENGTH",
        help="the six cevian segment lengths AO BO CO OD OE OF",
    )
    p_construct.add_argument("--json", metavar="PATH", default=None)
    p_construct.add_argument("--svg", metavar="PATH", default=None)
    p_construct.set_defaults(func=_cmd_construct)

    p_lexell = subs.add_parser(
        "lexell", help="constant-area locus over a symmetric base"
    )
    p_lexell.add_argument("x", type=float, help="base half-distance")
    p_lexell.add_argument("--geometry", type=_parse_geometry,
                          default=Geometry.HYPERBOLIC)
    _add_apex_flags(p_lexell)
    p_lexell.add_argument("--samples", type=int, default=20)
    p_lexell.add_argument("--foliate", type=_parse_areas, default=None,
                          metavar="AREAS", help="comma-separated target areas")
    p_lexell.add_argument("--json", metavar="PATH", default=None)
    p_lexell.add_argument("--svg", metavar="PATH", default=None)
    p_lexell.set_defaults(func=_cmd_lexell)

    p_render = subs.add_parser("render", help="write a disk figure as SVG")
    p_render.add_argument("figure", choices=("frame", "locus", "foliation"))
    p_render.add_argument("--seed", type=int, default=0)
    p_render.add_argument("--x", type=float, default=0.8, help="base half-distance")
    _add_apex_flags(p_render)
    p_render.add_argument("--foliate", type=_parse_areas, default=None,
                          metavar="AREAS")
    p_render.add_argument("--svg", metavar="PATH", required=True)
    p_render.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
