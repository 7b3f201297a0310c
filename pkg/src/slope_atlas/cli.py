"""Command line interface.

Subcommands: classify, monodromy, region, batch, plot.  Exit codes: 0 on
success, 2 on malformed input (the diagnostic names the offending token),
3 when independent verdict rules contradict each other.  The environment
variable SLOPE_ATLAS_THREADS caps the worker threads used by batch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .lspace import two_component_region
from .monodromy import (
    coherent_orientations,
    foliation_region,
    intervals,
    labels,
    parse_monodromy,
)
from .slopes import parse_slope
from .whitehead import (
    InconsistentVerdictError,
    classify,
    plot_class,
    wl_foliation_region,
)


class _Parser(argparse.ArgumentParser):
    # Accept slopes like -7/2 as positional values instead of option
    # strings; plain "--" before the slopes works as well.  The matcher is
    # an instance attribute set by argparse, so it must be replaced here,
    # not shadowed at class level.
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/-?\d+)?$")


def _arc_json(a):
    return {"start": str(a.start), "end": str(a.end),
            "start_closed": a.start_closed, "end_closed": a.end_closed}


def _region_json(r):
    return {"dim": r.dim,
            "boxes": [[_arc_json(a) for a in box] for box in r.boxes],
            "lines": list(r.lines)}


def _region_lines(r):
    out = []
    for box in r.boxes:
        out.append("  " + " x ".join(str(a) for a in box))
    for i in r.lines:
        coords = ["Q*"] * r.dim
        coords[i] = "{inf}"
        out.append("  " + " x ".join(coords))
    if not out:
        out.append("  (empty)")
    return out


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args):
    s1 = parse_slope(args.s1)
    s2 = parse_slope(args.s2)
    verdict = classify(s1, s2)
    _emit(json.dumps(verdict.to_json_dict(), indent=2) + "\n", args.out)
    return 0


def cmd_monodromy(args):
    m = parse_monodromy(args.word)
    labs = labels(m)
    i_arcs, j_arcs = intervals(m)
    o1, o2 = coherent_orientations(m)
    region = foliation_region(m)
    if args.json:
        doc = {
            "monodromy": str(m),
            "labels": [str(lab) for lab in labs],
            "intervals": {"I": [str(a) for a in i_arcs],
                          "J": [str(a) for a in j_arcs]},
            "orientations": [
                {"directions": list(o.directions),
                 "n_types": {str(i): str(t) for i, t in o.n_types}}
                for o in (o1, o2)
            ],
            "foliation_region": _region_json(region),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 0
    lines = [f"monodromy: {m}",
             "labels: " + " ".join(str(lab) for lab in labs),
             "I: " + " x ".join(str(a) for a in i_arcs),
             "J: " + " x ".join(str(a) for a in j_arcs)]
    for name, o in (("orientation 1", o1), ("orientation 2", o2)):
        dirs = " ".join("<-" if d else "->" for d in o.directions)
        if o.n_types:
            types = " ".join(f"{i}:{t}" for i, t in o.n_types)
            lines.append(f"{name}: {dirs}  ({types})")
        else:
            lines.append(f"{name}: {dirs}")
    lines.append("foliation region:")
    lines.extend(_region_lines(region))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_region(args):
    if args.b1 < 0 or args.b2 < 0:
        raise ValueError("framings must be nonnegative integers")
    lspace = two_component_region(args.b1, args.b2)
    foliation = wl_foliation_region()
    if args.json:
        doc = {"lspace_region": _region_json(lspace),
               "foliation_region": _region_json(foliation)}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 0
    lines = [f"L-space region (b1={args.b1}, b2={args.b2}):"]
    lines.extend(_region_lines(lspace))
    lines.append("taut-foliation region:")
    lines.extend(_region_lines(foliation))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _worker_count():
    env = os.environ.get("SLOPE_ATLAS_THREADS")
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            n = 0
        if n >= 1:
            return n
        print(f"warning: ignoring invalid SLOPE_ATLAS_THREADS={env!r}",
              file=sys.stderr)
    return min(8, os.cpu_count() or 1)


def parse_batch_header(row):
    """Validate the batch header; returns True when a label column is
    present."""
    if row == ["id", "s1", "s2"]:
        return False
    if row == ["id", "s1", "s2", "label"]:
        return True
    raise ValueError(f"bad header {','.join(row)!r}: expected "
                     "'id,s1,s2' or 'id,s1,s2,label'")


def parse_batch_row(row, has_label):
    width = 4 if has_label else 3
    if len(row) != width:
        raise ValueError(f"expected {width} fields, got {len(row)}")
    ident = row[0].strip()
    s1 = parse_slope(row[1])
    s2 = parse_slope(row[2])
    label = row[3].strip() if has_label else None
    return ident, s1, s2, label


def cmd_batch(args):
    with open(args.input, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ValueError(f"{args.input}: empty file, missing header")
    has_label = parse_batch_header(rows[0])
    parsed = []
    failures = 0
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        try:
            parsed.append(parse_batch_row(row, has_label))
        except ValueError as exc:
            failures += 1
            print(f"{args.input}:{lineno}: {exc}", file=sys.stderr)
    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        verdicts = list(pool.map(lambda r: classify(r[1], r[2]), parsed))
    header = ["id", "s1", "s2", "qhs", "h1", "h2", "lspace", "foliation",
              "euler_zero", "left_orderable"]
    if has_label:
        header += ["label", "agrees"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    counts = {"lspace": 0, "foliation": 0, "non-qhs": 0}
    lo_counts = {"yes": 0, "no": 0, "unknown": 0, "na": 0}
    agree = 0
    for (ident, s1, s2, label), v in zip(parsed, verdicts):
        counts[plot_class(v)] += 1
        lo_counts[v.left_orderable.value] += 1
        out_row = [ident, str(s1), str(s2),
                   "true" if v.is_qhs else "false",
                   str(v.homology[0]), str(v.homology[1]),
                   v.lspace.value, v.taut_foliation.value,
                   v.euler_vanishing.value, v.left_orderable.value]
        if has_label:
            ok = label == v.left_orderable.value
            agree += ok
            out_row += [label, "true" if ok else "false"]
        writer.writerow(out_row)
    with open(args.out, "w", newline="") as fh:
        fh.write(buf.getvalue())
    print(f"rows: {len(parsed)}")
    print(f"lspace: {counts['lspace']}")
    print(f"foliation: {counts['foliation']}")
    print(f"non-qhs: {counts['non-qhs']}")
    for key in ("yes", "no", "unknown", "na"):
        print(f"left-orderable {key}: {lo_counts[key]}")
    if has_label:
        print(f"label agreement: {agree}/{len(parsed)}")
    if failures:
        print(f"failed rows: {failures}", file=sys.stderr)
        return 2
    return 0


def parse_bounds(text):
    m = re.fullmatch(r"(-?\d+):(-?\d+),(-?\d+):(-?\d+)", text.strip())
    if not m:
        raise ValueError(f"invalid bounds {text!r}: expected "
                         "'pmin:pmax,qmin:qmax'")
    pmin, pmax, qmin, qmax = (int(g) for g in m.groups())
    if pmin > pmax or qmin > qmax:
        raise ValueError(f"degenerate bounds {text!r}")
    return pmin, pmax, qmin, qmax


def grid_slopes(bounds, max_den=None):
    """Canonical slopes p/q on the integer grid, sorted with infinity last."""
    pmin, pmax, qmin, qmax = bounds
    seen = set()
    for p in range(pmin, pmax + 1):
        for q in range(qmin, qmax + 1):
            if p == 0 and q == 0:
                continue
            s = parse_slope(f"{p}/{q}")
            if max_den is not None and s.den > max_den:
                continue
            seen.add(s)
    return sorted(seen, key=lambda s: (1,) if s.is_infinite()
                  else (0, Fraction(s.num, s.den)))


_PLOT_COLORS = {"lspace": "red", "foliation": "blue", "non-qhs": "gray"}


def svg_coord(value, lo, hi, flip=False):
    """Deterministic canvas coordinate string for an axis value."""
    if hi == lo:
        frac = Fraction(1, 2)
    else:
        frac = (value - lo) / (hi - lo)
    if flip:
        frac = 1 - frac
    return f"{float(40 + frac * 560):.2f}"

def _svg_scatter(points):
    values = [v for s1, s2, _ in points for v in (s1, s2)]
    lo, hi = min(values), max(values)
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="640" '
             'height="640" viewBox="0 0 640 640">',
             '<rect width="640" height="640" fill="white"/>',
             '<rect x="40" y="40" width="560" height="560" fill="none" '
             'stroke="black"/>']
    for s1, s2, cls in points:
        cx = svg_coord(s1, lo, hi)
        cy = svg_coord(s2, lo, hi, flip=True)
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="3" '
                     f'fill="{_PLOT_COLORS[cls]}"/>')
    parts.append('<text x="40" y="24" font-size="12">'
                 'red: lspace  blue: foliation  gray: non-qhs</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_plot(args):
    bounds = parse_bounds(args.bounds)
    if args.max_den is not None and args.max_den < 1:
        raise ValueError("--max-den must be a positive integer")
    slopes = grid_slopes(bounds, args.max_den)
    if not slopes:
        raise ValueError("bounds produce no slopes")
    records = []
    for s1 in slopes:
        for s2 in slopes:
            records.append((s1, s2, plot_class(classify(s1, s2))))
    if args.format == "tsv":
        lines = ["s1\ts2\tclass"]
        lines.extend(f"{s1}\t{s2}\t{cls}" for s1, s2, cls in records)
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    finite = [(Fraction(s1.num, s1.den), Fraction(s2.num, s2.den), cls)
              for s1, s2, cls in records
              if s1.is_finite() and s2.is_finite()]
    if not finite:
        raise ValueError("no finite slope pairs to plot")
    _emit(_svg_scatter(finite), args.out)
    return 0


def build_parser():
    parser = _Parser(prog="slope-atlas",
                     description="Exact classification of Whitehead-link "
                                 "surgeries and torus-bundle boundary data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one surgery multislope")
    p.add_argument("s1", help="first slope: p, p/q or inf")
    p.add_argument("s2", help="second slope: p, p/q or inf")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("monodromy", help="report boundary data of a "
                                         "monodromy word")
    p.add_argument("word", help="exponents 'a0; a1, a2, ..., ak'")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("region", help="print the L-space and "
                                      "taut-foliation regions")
    p.add_argument("--b1", type=int, default=0, help="first framing")
    p.add_argument("--b2", type=int, default=0, help="second framing")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write here instead of stdout")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("batch", help="classify a CSV of multislopes")
    p.add_argument("input", help="CSV with header id,s1,s2[,label]")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("plot", help="scatter the verdict classes over a "
                                    "slope grid")
    p.add_argument("--bounds", required=True,
                   help="integer grid 'pmin:pmax,qmin:qmax'")
    p.add_argument("--format", choices=("tsv", "svg"), default="tsv")
    p.add_argument("--max-den", type=int, default=None,
                   help="keep only slopes with denominator at most this")
    p.add_argument("--out", help="write here instead of stdout")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except InconsistentVerdictError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
