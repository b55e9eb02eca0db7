"""Command-line front end.

Subcommands: scroll, project, analyze, betti, verify.
Exit codes: 0 success, 1 check failure, 2 input error.
"""

import argparse
import concurrent.futures
import json
import sys

from .polyring import DEFAULT_PRIME
from .varieties import (ScrollSpec, ProjectionPoint, scroll_ideal,
                        project_from_point, random_point_off_variety)
from .amdcheck import analyze
from .resolve import hilbert_series, free_resolution, minimalize
from . import ideal_io
from .fixtures import FIXTURES, fixture_names, verify_fixture


class InputError(Exception):
    pass


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


def _emit(text, output=None):
    if output:
        with open(output, "w") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)


def _parse_window(text):
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise InputError(f"bad window {text!r}; expected lo..hi")


def _load_ideal(path):
    try:
        return ideal_io.read_ideal(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except ValueError as exc:
        raise InputError(f"cannot parse {path}: {exc}")


def _build_input(args):
    """Ideal from --ideal FILE or a scroll spec positional."""
    if getattr(args, "ideal", None):
        return None, _load_ideal(args.ideal)
    try:
        spec = ScrollSpec.parse(args.spec)
        mat, ideal = scroll_ideal(spec, prime=args.prime)
    except ValueError as exc:
        raise InputError(str(exc))
    return mat, ideal


def cmd_scroll(args):
    try:
        spec = ScrollSpec.parse(args.spec)
        mat, ideal = scroll_ideal(spec, prime=args.prime)
    except ValueError as exc:
        raise InputError(str(exc))
    if args.format == "json":
        doc = {
            "spec": str(spec),
            "matrix": [[str(mat.entry_poly(i, j)) for j in range(mat.ncols)]
                       for i in range(2)],
            "vertex_variables": [ideal.ring.variable_names[v]
                                 for v in mat.vertex_vars],
            "ideal": ideal_io.ideal_to_json(ideal),
        }
        _emit(ideal_io.dump_json(doc), args.output)
    else:
        text = (mat.render() + "\n\n"
                + ideal_io.render_ideal_text(ideal, comment=f"scroll {spec}"))
        _emit(text, args.output)
    return 0


def cmd_project(args):
    if args.ideal:
        ideal = _load_ideal(args.ideal)
        label = args.ideal
    else:
        if not args.spec:
            raise InputError("project needs a scroll spec or --ideal FILE")
        try:
            spec = ScrollSpec.parse(args.spec)
            _, ideal = scroll_ideal(spec, prime=args.prime)
        except ValueError as exc:
            raise InputError(str(exc))
        label = str(spec)
    nv = ideal.ring.nvars
    if args.random_point:
        point = random_point_off_variety(ideal, seed=args.seed)
    elif args.point:
        try:
            point = ProjectionPoint.parse(args.point, nv)
        except ValueError as exc:
            raise InputError(str(exc))
    else:
        raise InputError("project needs --point or --random-point")
    try:
        projected = project_from_point(ideal, point)
    except ValueError as exc:
        raise InputError(str(exc))
    comment = f"projection of {label} from {':'.join(map(str, point.coords))}"
    if args.format == "json":
        doc = {"point": list(point.coords),
               "ideal": ideal_io.ideal_to_json(projected)}
        _emit(ideal_io.dump_json(doc), args.output)
    else:
        _emit(ideal_io.render_ideal_text(projected, comment=comment),
              args.output)
    return 0


def cmd_analyze(args):
    ideal = _load_ideal(args.ideal_file)
    try:
        report = analyze(ideal, progress=_progress)
    except ValueError as exc:
        raise InputError(str(exc))
    if args.format == "json":
        _emit(ideal_io.dump_json(report.to_json()), args.output)
    else:
        _emit(report.render_text() + "\n", args.output)
    return 0 if all(report.formula_checks.values()) else 1


def cmd_betti(args):
    ideal = _load_ideal(args.ideal_file)
    res = free_resolution(ideal, progress=_progress)
    tab = minimalize(res, progress=_progress)
    if args.format == "json":
        _emit(ideal_io.dump_json(tab.to_json()), args.output)
    else:
        _emit(tab.render_text() + "\n", args.output)
    return 0


def _verify_one(name, prime, window):
    return name, verify_fixture(name, prime=prime, window=window,
                                progress=_progress)


def cmd_verify(args):
    if args.all:
        names = fixture_names()
    else:
        names = args.names
        if not names:
            raise InputError("verify needs fixture names or --all")
        unknown = [n for n in names if n not in FIXTURES]
        if unknown:
            raise InputError(f"unknown fixtures: {', '.join(unknown)}; "
                             f"known: {', '.join(fixture_names())}")
    window = _parse_window(args.window)
    jobs = max(1, args.jobs)
    results = {}
    if jobs > 1 and len(names) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = [pool.submit(_verify_one, n, args.prime, window)
                    for n in names]
            for fut in concurrent.futures.as_completed(futs):
                name, res = fut.result()
                results[name] = res
    else:
        for n in names:
            results[n] = verify_fixture(n, prime=args.prime, window=window,
                                        progress=_progress)
    any_fail = False
    doc = {}
    lines = []
    for name in names:
        checks = results[name]
        failed = [c for c in checks if not c[1]]
        any_fail = any_fail or bool(failed)
        doc[name] = {"passed": not failed,
                     "checks": [{"name": c[0], "passed": c[1],
                                 "detail": c[2]} for c in checks]}
        lines.append(f"== {name}: "
                     f"{'PASS' if not failed else 'FAIL'} "
                     f"({len(checks) - len(failed)}/{len(checks)} checks)")
        for cname, ok, detail in checks:
            mark = "ok  " if ok else "FAIL"
            lines.append(f"  [{mark}] {cname}" + (f" ({detail})" if detail and not ok else ""))
    if args.format == "json":
        _emit(ideal_io.dump_json(doc), args.output)
    else:
        _emit("\n".join(lines) + "\n", args.output)
    return 1 if any_fail else 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="amdeg",
        description="Graded algebra toolkit for projected rational normal "
                    "scrolls and near-minimal-degree varieties.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", help="write result to FILE instead of stdout")

    p = sub.add_parser("scroll", help="print a scroll matrix and its ideal")
    p.add_argument("spec", help="e.g. S(2,2,6) or S(1,1,2)+vertex:0")
    common(p)
    p.set_defaults(func=cmd_scroll)

    p = sub.add_parser("project", help="project a variety from a point")
    p.add_argument("spec", nargs="?", help="scroll spec, e.g. S(2,2,6)")
    p.add_argument("--ideal", help="ideal file instead of a scroll spec")
    p.add_argument("--point", help="e9 or comma-separated coordinates")
    p.add_argument("--random-point", action="store_true",
                   help="seeded random point off the variety")
    common(p)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("analyze", help="full invariant report for an ideal file")
    p.add_argument("ideal_file")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("betti", help="minimal Betti table of an ideal file")
    p.add_argument("ideal_file")
    common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="run all checks on named fixtures")
    p.add_argument("names", nargs="*", metavar="NAME")
    p.add_argument("--all", action="store_true", help="verify every fixture")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel worker processes across fixtures")
    p.add_argument("--window", default="-6..4",
                   help="degree window lo..hi for deficiency-module checks")
    common(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage already; re-raise unchanged
        raise
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
