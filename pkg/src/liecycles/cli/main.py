"""Command line entry point: ``liecycles run|render|check``."""

import argparse
import json
import sys

from ..config import tolerances
from ..errors import LieGeometryError
from .render import render_svg
from .report import dumps_report, run_queries
from .scene import load_scene
from .selfcheck import run_checks


def _parser():
    p = argparse.ArgumentParser(prog="liecycles", description="Oriented cycles in Lie coordinates.")
    p.add_argument("--tol-class", type=float, default=None,
                   help="threshold for sign classifications (default 1e-8)")
    p.add_argument("--tol-rank", type=float, default=None,
                   help="threshold for rank decisions (default 1e-10)")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evaluate the queries of a scene")
    run.add_argument("scene")
    run.add_argument("--out", help="write the report here instead of stdout")

    render = sub.add_parser("render", help="draw a planar scene as SVG")
    render.add_argument("scene")
    render.add_argument("--svg", help="output file (default: stdout)")
    render.add_argument("--report", help="use a precomputed report instead of running the scene")

    sub.add_parser("check", help="run quick invariant self-tests")
    return p


def _tol_overrides(args):
    out = {}
    if args.tol_class is not None:
        out["tau_class"] = args.tol_class
    if args.tol_rank is not None:
        out["tau_rank"] = args.tol_rank
    return out


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        with tolerances(**_tol_overrides(args)):
            if args.command == "check":
                return 0 if run_checks(sys.stdout) else 1
            scene = load_scene(args.scene)
            if args.command == "run":
                text = dumps_report(run_queries(scene))
                if args.out:
                    with open(args.out, "w", encoding="utf-8") as fh:
                        fh.write(text)
                else:
                    sys.stdout.write(text)
                return 0
            if args.report:
                with open(args.report, encoding="utf-8") as fh:
                    report = json.load(fh)
            else:
                report = run_queries(scene)
            svg = render_svg(scene, report, args.svg)
            if not args.svg:
                sys.stdout.write(svg)
            return 0
    except (LieGeometryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
