"""Command-line interface.

Exit status: 0 on success, 1 on invalid input, 2 when a verification does
not reproduce the expected outcome.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

import numpy as np

from . import appendix
from .axioms import AXIOMS, verify_measure
from .documents import DocumentError, LoadedSet, json_schema, load_document
from .gt2 import sim_zslices, zlevel_union
from .it2 import ALL_MEASURES, Interval, Measure, MeasureKind, SimilarityValue, TNorm, gorzalczany_degenerate
from .mf import DomainGrid
from .sets import DEFAULT_LEVELS, GT2Set, as_gt2, ceiling_index

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2

DEFAULT_POINTS = 100


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _extent(fs: GT2Set) -> tuple[float, float]:
    bps = [x for s in fs.slices for f in (s.fou.lower, s.fou.upper) for x in f.breakpoints]
    return min(bps), max(bps)


def _uniform(points: Sequence[float]) -> bool:
    if len(points) < 2:
        return False
    steps = np.diff(points)
    return bool(np.allclose(steps, steps[0], rtol=1e-9, atol=0.0))


def resolve_grid(docs: Sequence[LoadedSet], points: int | None, domain: Sequence[float] | None) -> DomainGrid:
    """Grid for comparing ``docs``.

    An explicit ``domain`` wins. Otherwise, if every document is sampled on
    the same uniform points and no point count was requested, those points
    are the grid. Failing that the grid spans all documents' supports.
    """
    if domain is not None:
        return DomainGrid(domain[0], domain[1], points or DEFAULT_POINTS)
    shared = {d.sample_points for d in docs}
    if points is None and len(shared) == 1:
        (pts,) = shared
        if pts is not None and _uniform(pts):
            return DomainGrid(pts[0], pts[-1], len(pts))
    lo, hi = zip(*(_extent(as_gt2(d.fuzzy_set)) for d in docs))
    x_min, x_max = min(lo), max(hi)
    if x_min == x_max:
        x_min, x_max = x_min - 0.5, x_max + 0.5
    return DomainGrid(x_min, x_max, points or DEFAULT_POINTS)


def format_value(value: SimilarityValue) -> str:
    if isinstance(value, Interval):
        return f"({value.lo:.3f}, {value.hi:.3f})"
    return f"{value:.3f}"


def full_precision(value: SimilarityValue) -> str:
    if isinstance(value, Interval):
        return f"{value.lo!r};{value.hi!r}"
    return repr(float(value))


def parse_cell(cell: str) -> SimilarityValue:
    if ";" in cell:
        lo, hi = cell.split(";")
        return Interval(float(lo), float(hi))
    return float(cell)


def _degenerate_levels(a: GT2Set, b: GT2Set, grid: DomainGrid) -> list[float]:
    lower, upper = a.sample(grid)
    return [
        z for z in zlevel_union(a, b)
        if gorzalczany_degenerate(lower[ceiling_index(a.levels, z)], upper[ceiling_index(a.levels, z)])
    ]


def _measure(args) -> Measure:
    return Measure.parse(args.measure, args.tnorm)


def _load(paths: Sequence[str]) -> list[LoadedSet]:
    return [load_document(p) for p in paths]


def cmd_compute(args) -> int:
    measure = _measure(args)
    docs = _load([args.a, args.b])
    grid = resolve_grid(docs, args.points, args.domain)
    a, b = (as_gt2(d.fuzzy_set) for d in docs)
    value = sim_zslices(a, b, measure, grid)
    if measure.kind is MeasureKind.GORZALCZANY:
        for z in _degenerate_levels(a, b, grid):
            print(
                f"note: {docs[0].name} has an all-zero bounding function at z={z}; "
                "that ratio was set to 0",
                file=sys.stderr,
            )
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["a", "b", "measure", "value"])
        w.writerow([docs[0].name, docs[1].name, measure.name, full_precision(value)])
    else:
        print(f"{measure.name}({docs[0].name}, {docs[1].name}) = {format_value(value)}  [{full_precision(value)}]")
    return EXIT_OK


def similarity_matrix(docs: Sequence[LoadedSet], measure: Measure, grid: DomainGrid) -> list[list[SimilarityValue]]:
    sets = [as_gt2(d.fuzzy_set) for d in docs]
    return [[sim_zslices(a, b, measure, grid) for b in sets] for a in sets]


def cmd_matrix(args) -> int:
    if len(args.files) < 2:
        raise UsageError("matrix needs at least two set documents")
    measure = _measure(args)
    docs = _load(args.files)
    grid = resolve_grid(docs, args.points, args.domain)
    rows = similarity_matrix(docs, measure, grid)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow([measure.name] + [d.name for d in docs])
    for d, row in zip(docs, rows):
        w.writerow([d.name] + [full_precision(v) for v in row])
    return EXIT_OK


def _levels_arg(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated zLevels, got {text!r}") from None


def cmd_verify(args) -> int:
    levels = None if args.it2 else args.levels
    if args.trials < 1:
        raise UsageError(f"--trials must be at least 1, got {args.trials}")
    if args.measure == "all":
        measures = [Measure(m.kind, TNorm(args.tnorm)) for m in ALL_MEASURES]
    else:
        measures = [_measure(args)]
    mode = "interval type-2 sets" if levels is None else f"zSlices sets at zLevels {list(levels)}"
    print(f"{args.trials} trials per property, seed {args.seed}, {mode}")
    widths = [18] + [14] * len(AXIOMS)
    print("".join(h.ljust(w) for h, w in zip(["measure", *AXIOMS], widths)))
    status = EXIT_OK
    for measure in measures:
        report = verify_measure(measure, args.trials, args.seed, levels)
        expected = report.expected()
        cells = []
        for r in report.results:
            mark = "" if r.holds == expected[r.axiom] else " (!)"
            cells.append(r.verdict + mark)
        print("".join(c.ljust(w) for c, w in zip([measure.name, *cells], widths)))
        exp_cells = ["holds" if expected[ax] else "violated" for ax in AXIOMS]
        print("".join(c.ljust(w) for c, w in zip(["  expected", *exp_cells], widths)))
        for r in report.results:
            if r.witness is not None:
                vals = ", ".join(format_value(v) for v in r.witness.values)
                print(f"  {r.axiom} witness: {r.witness.reason} [{vals}]")
        if report.mismatches():
            status = EXIT_MISMATCH
    if status != EXIT_OK:
        print("verdicts contradict the expected property pattern", file=sys.stderr)
    return status


def cmd_reproduce_appendix(args) -> int:
    report = appendix.reproduce()
    print("zLevel   jaccard    reference")
    for z, got, want in zip(report.levels, report.values, appendix.REFERENCE_VALUES):
        print(f"{z:<8} {got:.6f}   {want:.3f}")
    print(f"weights  {report.weight_total:.6f}   {appendix.REFERENCE_WEIGHT_TOTAL:.3f}")
    print(f"result   {report.aggregate:.6f}   {appendix.REFERENCE_AGGREGATE:.3f}")
    problems = report.mismatches()
    for p in problems:
        print(f"mismatch: {p}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


def cmd_schema(args) -> int:
    print(json.dumps(json_schema(), indent=2))
    return EXIT_OK


def _add_measure_options(p: argparse.ArgumentParser, allow_all: bool = False) -> None:
    choices = [k.value for k in MeasureKind] + (["all"] if allow_all else [])
    p.add_argument("--measure", choices=choices, default="jaccard")
    p.add_argument("--tnorm", choices=[t.value for t in TNorm], default="minimum", help="t-norm for bustince")


def _add_grid_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--points", type=int, default=None, help=f"grid points (default {DEFAULT_POINTS})")
    p.add_argument("--domain", type=float, nargs=2, metavar=("MIN", "MAX"), default=None,
                   help="grid range (default: the sets' combined support)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zslices", description="Similarity of type-1, interval and general type-2 fuzzy sets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="similarity of two set documents")
    _add_measure_options(p)
    _add_grid_options(p)
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    p.add_argument("--csv", action="store_true", help="print a CSV row at full precision")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("matrix", help="CSV matrix of pairwise similarities")
    _add_measure_options(p)
    _add_grid_options(p)
    p.add_argument("files", nargs="+", metavar="FILE")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="check the similarity properties on random sets")
    _add_measure_options(p, allow_all=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--levels", type=_levels_arg, default=DEFAULT_LEVELS,
                   help="zLevels for the random GT2 sets (default 0.25,0.5,0.75,1)")
    p.add_argument("--it2", action="store_true", help="use interval type-2 sets instead of zSlices sets")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce-appendix", help="recompute the 4- vs 3-zLevel worked example")
    p.set_defaults(func=cmd_reproduce_appendix)

    p = sub.add_parser("schema", help="print the JSON schema of set documents")
    p.set_defaults(func=cmd_schema)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, UsageError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
