"""Command-line interface.

Subcommands: ``census``, ``classify``, ``invariants``, ``render``,
``realize``, ``verify``.  Exit status 0 on success, 1 when verification
fails, 2 for invalid input (including unknown flags).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import census as census_mod
from . import geometry, render
from .diagram import (
    BUILTIN_NAMES,
    assignment_from_text,
    build_canonical_projection,
    builtin_diagram,
    diagram_to_text,
    to_diagram,
)
from .errors import CapacityError, DegeneracyError, InputError
from .invariants import (
    kauffman_bracket,
    linking_numbers,
    normalized_invariant,
    pairwise_linking,
    writhe,
)
from .symmetry import orbit_of


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _parse_colors(spec: str) -> dict[str, str]:
    colors = dict(render.DEFAULT_COLORS)
    for item in spec.split(","):
        if not item:
            continue
        label, _, value = item.partition("=")
        if not value or label not in ("A", "B", "C"):
            raise InputError(
                f"color overrides look like A=#11aa22,B=...,C=...; got {item!r}"
            )
        colors[label] = value
    return colors


def _curves_table(r: geometry.Realization3D) -> str:
    """Plain-text point table: one point per line, curve separator records."""
    lines = [f"trilink-curves v1 kind={r.kind}"]
    for key in sorted(r.params):
        lines.append(f"param {key} {r.params[key]:.12g}")
    for curve in r.curves:
        lines.append(f"curve {curve.label} n={curve.segment_count}")
        for p in curve.points:
            lines.append(f"{p[0]:.12g} {p[1]:.12g} {p[2]:.12g}")
    return "\n".join(lines) + "\n"


def _curves_obj(r: geometry.Realization3D) -> str:
    """Wavefront OBJ with closed polylines (``l`` elements, 1-based indices)."""
    lines = ["# trilink curves"]
    offset = 1
    for curve in r.curves:
        lines.append(f"o {curve.label}")
        for p in curve.points:
            lines.append(f"v {p[0]:.9g} {p[1]:.9g} {p[2]:.9g}")
        n = curve.segment_count
        indices = " ".join(str(offset + k) for k in range(n))
        lines.append(f"l {indices} {offset}")
        offset += n
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trilink",
        description=(
            "Enumerate, classify, realize and render the 64 three-circle "
            "link depictions of the fixed triangular projection."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_census = sub.add_parser("census", help="run the full 64-depiction census")
    p_census.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    p_census.add_argument("-o", "--output", default=None, metavar="PATH")

    p_classify = sub.add_parser("classify", help="classify one assignment word")
    p_classify.add_argument("bitword")

    p_inv = sub.add_parser("invariants", help="invariants of a depiction or builtin")
    group = p_inv.add_mutually_exclusive_group(required=True)
    group.add_argument("bitword", nargs="?")
    group.add_argument("--builtin", choices=BUILTIN_NAMES)

    p_render = sub.add_parser("render", help="emit SVG for a diagram, scene or realization")
    rgroup = p_render.add_mutually_exclusive_group(required=True)
    rgroup.add_argument("bitword", nargs="?")
    rgroup.add_argument("--scene", choices=geometry.SCENE_KINDS)
    rgroup.add_argument("--realize", choices=geometry.REALIZE_KINDS, dest="realize_kind")
    p_render.add_argument("-o", "--output", default=None, metavar="PATH")
    p_render.add_argument("--color", default=None, metavar="A=...,B=...,C=...")

    p_realize = sub.add_parser("realize", help="export 3D curves plus linking numbers")
    p_realize.add_argument("kind", choices=geometry.REALIZE_KINDS)
    p_realize.add_argument("--R", type=float, default=None)
    p_realize.add_argument("--r", type=float, default=None)
    p_realize.add_argument("--a", type=float, default=None)
    p_realize.add_argument("--b", type=float, default=None)
    p_realize.add_argument("--segments", type=int, default=geometry.DEFAULT_SEGMENTS)
    p_realize.add_argument(
        "--obj", action="store_true", help="emit Wavefront OBJ instead of the point table"
    )
    p_realize.add_argument("-o", "--output", default=None, metavar="PATH")

    p_verify = sub.add_parser("verify", help="run the full claim-verification suite")
    p_verify.add_argument("--format", choices=("table", "json"), default="table")
    p_verify.add_argument("-o", "--output", default=None, metavar="PATH")

    p_export = sub.add_parser("export", help="structured-text record of one diagram")
    egroup = p_export.add_mutually_exclusive_group(required=True)
    egroup.add_argument("bitword", nargs="?")
    egroup.add_argument("--builtin", choices=BUILTIN_NAMES)
    p_export.add_argument("-o", "--output", default=None, metavar="PATH")

    return parser


def _cmd_census(args) -> int:
    records, summary = census_mod.run_census()
    if args.format == "table":
        text = census_mod.census_table(records, summary)
    elif args.format == "json":
        text = census_mod.census_to_json(records, summary)
    else:
        text = census_mod.census_to_csv(records)
    _write_output(text, args.output)
    return 0


def _cmd_classify(args) -> int:
    asg = assignment_from_text(args.bitword)
    proj = build_canonical_projection()
    d = to_diagram(proj, asg)
    from .invariants import classify

    orbit = orbit_of(asg)
    profile = pairwise_linking(d)
    lines = [
        f"bitword          {asg.word}",
        f"embedding type   {classify(d).value}",
        f"orbit rep        {orbit.representative.word} (size {orbit.size})",
        f"linking profile  {profile}",
        f"bracket          {kauffman_bracket(d).to_text()}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _diagram_from_args(args):
    if getattr(args, "builtin", None):
        return builtin_diagram(args.builtin)
    return to_diagram(build_canonical_projection(), assignment_from_text(args.bitword))


def _cmd_invariants(args) -> int:
    d = _diagram_from_args(args)
    lines = [f"components       {d.component_count}", f"crossings        {d.crossing_count}"]
    if d.component_count >= 2:
        profile = pairwise_linking(d)
        pair_text = ", ".join(
            f"{'-'.join(sorted(pair))}={value}"
            for pair, value in sorted(linking_numbers(d).items(), key=lambda kv: sorted(kv[0]))
        )
        lines.append(f"linking          {pair_text} (profile {profile})")
    lines.append(f"writhe           {writhe(d)}")
    lines.append(f"bracket          {kauffman_bracket(d).to_text()}")
    lines.append(f"normalized       {normalized_invariant(d).to_text()}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_render(args) -> int:
    if args.scene:
        text = render.svg_scene(geometry.scene(args.scene))
    elif args.realize_kind:
        text = render.svg_scene(geometry.realize(args.realize_kind))
    else:
        style = render.RenderStyle(
            colors=_parse_colors(args.color) if args.color else dict(render.DEFAULT_COLORS)
        )
        d = to_diagram(build_canonical_projection(), assignment_from_text(args.bitword))
        text = render.svg_diagram(d, style)
    _write_output(text, args.output)
    return 0


def _cmd_realize(args) -> int:
    params = {}
    if args.kind == "torus-villarceau":
        if args.R is not None:
            params["R"] = args.R
        if args.r is not None:
            params["r"] = args.r
        if args.a is not None or args.b is not None:
            raise InputError("torus-villarceau takes --R and --r, not --a/--b")
    else:
        if args.a is not None:
            params["a"] = args.a
        if args.b is not None:
            params["b"] = args.b
        if args.R is not None or args.r is not None:
            raise InputError("borromean-ellipses takes --a and --b, not --R/--r")
    realization = geometry.realize(args.kind, segments=args.segments, **params)
    text = _curves_obj(realization) if args.obj else _curves_table(realization)
    _write_output(text, args.output)
    curves = realization.curves
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            lk = geometry.linking_number_3d(curves[i], curves[j])
            sys.stdout.write(
                f"lk({curves[i].label},{curves[j].label}) = {lk}\n"
            )
    sys.stdout.write(
        f"min pairwise curve distance = {geometry.validate_disjoint(realization):.6f}\n"
    )
    return 0


def _cmd_verify(args) -> int:
    report = census_mod.verify_claims()
    text = report.to_text() if args.format == "table" else report.to_json()
    _write_output(text, args.output)
    return 0 if report.all_passed else 1


def _cmd_export(args) -> int:
    d = _diagram_from_args(args)
    _write_output(diagram_to_text(d), args.output)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse reports its own diagnostic; keep its exit code (2 on bad input)
        return int(exc.code or 0)
    handlers = {
        "census": _cmd_census,
        "classify": _cmd_classify,
        "invariants": _cmd_invariants,
        "render": _cmd_render,
        "realize": _cmd_realize,
        "verify": _cmd_verify,
        "export": _cmd_export,
    }
    try:
        return handlers[args.command](args)
    except (InputError, CapacityError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except DegeneracyError as exc:
        sys.stderr.write(f"error: degenerate geometry: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
