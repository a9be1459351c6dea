"""Command-line interface.

Subcommands: reduce, classify, spines, count, systole, spectrum, heatmap,
oracle-verify, extremal, disc-model.  All reports go to stdout as JSON
(UTF-8, fixed key order) except heatmap, which writes SVG/CSV files.
Floats carry at most 15 significant digits so identical invocations produce
byte-identical output.  Exit codes: 0 ok, 1 verification mismatch, 2 usage
or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import re as _re
import sys

import numpy as np

from . import chart, hexagon, hyperbolic, oracle, spines
from ._format import fmt_complex, round_floats
from .errors import SpinelabError
from .halfplane import (
    HEXAGONAL_POINT,
    SQUARE_POINT,
    classify_torus,
    reduce_to_fundamental_domain,
    require_upper,
)

_NAMED_TORI = {
    "square": SQUARE_POINT,
    "hex": HEXAGONAL_POINT,
    "hexagonal": HEXAGONAL_POINT,
}

_TERM_RE = _re.compile(r"([+-]?)((?:\d+\.?\d*|\.\d+)(?:e[+-]?\d+)?)?(i)?\Z")


def parse_torus(text: str) -> complex:
    """Parse 'a+bi' (either order, optional spaces) or a named torus."""
    t = text.strip().lower().replace(" ", "")
    if t in _NAMED_TORI:
        return _NAMED_TORI[t]
    if not t:
        raise ValueError("empty torus argument")
    re_part = im_part = 0.0
    terms = [part for part in _re.split(r"(?<!e)(?=[+-])", t) if part]
    if not terms:
        raise ValueError(f"cannot parse {text!r} as a complex number")
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse {text!r} as a complex number")
        sign = -1.0 if m.group(1) == "-" else 1.0
        value = float(m.group(2)) if m.group(2) is not None else 1.0
        if m.group(3):
            im_part += sign * value
        else:
            re_part += sign * value
    return complex(re_part, im_part)


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(round_floats(payload), indent=2) + "\n")


def _spine_rows(fiber: spines.FiberResult) -> list[dict]:
    rows = []
    for index, s in enumerate(fiber.spines):
        a, b, c = s.triple.as_tuple()
        l1, l2, l3 = s.edge_lengths
        rows.append(
            {
                "index": index,
                "a": a,
                "b": b,
                "c": c,
                "marker_re": s.marker.real,
                "marker_im": s.marker.imag,
                "l1": l1,
                "l2": l2,
                "l3": l3,
                "total": s.total_length,
            }
        )
    return rows


def cmd_reduce(args) -> int:
    z = require_upper(parse_torus(args.torus))
    z0, m = reduce_to_fundamental_domain(z)
    _emit(
        {
            "input": args.torus,
            "reduced": fmt_complex(z0),
            "matrix": m.rows(),
            "kind": classify_torus(z0).value,
        }
    )
    return 0


def cmd_classify(args) -> int:
    z = require_upper(parse_torus(args.torus))
    z0, _ = reduce_to_fundamental_domain(z)
    _emit(
        {
            "input": args.torus,
            "reduced": fmt_complex(z0),
            "kind": classify_torus(z0).value,
        }
    )
    return 0


def cmd_spines(args) -> int:
    z = require_upper(parse_torus(args.torus))
    fiber = spines.fiber_oriented(z) if args.oriented else spines.fiber_unoriented(z)
    rows = _spine_rows(fiber)
    if args.csv:
        from ._format import fmt_float

        cols = ["index", "a", "b", "c", "marker_re", "marker_im", "l1", "l2", "l3", "total"]
        lines = [",".join(cols)]
        for row in rows:
            lines.append(
                ",".join(
                    str(row[c]) if c == "index" else fmt_float(row[c]) for c in cols
                )
            )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _emit(
            {
                "torus": args.torus,
                "reduced": fmt_complex(fiber.torus),
                "kind": fiber.kind.value,
                "oriented": args.oriented,
                "count": fiber.count,
                "spines": rows,
            }
        )
    return 0


def cmd_count(args) -> int:
    z = require_upper(parse_torus(args.torus))
    n = spines.count_oriented(z) if args.oriented else spines.count_unoriented(z)
    _emit({"torus": args.torus, "oriented": args.oriented, "count": n})
    return 0


def cmd_systole(args) -> int:
    z = require_upper(parse_torus(args.torus))
    z0, _ = reduce_to_fundamental_domain(z)
    _emit(
        {
            "torus": args.torus,
            "reduced": fmt_complex(z0),
            "systole": spines.spine_systole(z),
        }
    )
    return 0


def cmd_spectrum(args) -> int:
    z = require_upper(parse_torus(args.torus))
    entries = spines.length_spectrum(z, oriented=args.oriented)
    _emit(
        {
            "torus": args.torus,
            "oriented": args.oriented,
            "count": len(entries),
            "entries": [
                {"lengths": list(lengths), "total": total}
                for lengths, total in entries
            ],
        }
    )
    return 0


def cmd_heatmap(args) -> int:
    grid = chart.GridSpec(
        args.re_min, args.re_max, args.im_min, args.im_max, args.cols, args.rows
    )
    values = chart.heatmap_values(grid, args.quantity)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(chart.heatmap_svg(grid, values, args.quantity))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(chart.heatmap_csv(grid, values, args.quantity))
    return 0


def sample_reduced_tori(count: int, seed: int, im_max: float = 3.0) -> list[complex]:
    """Seeded sample of fundamental-domain points with Im below im_max."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        z = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.87, im_max))
        if abs(z) >= 1.0:
            out.append(z)
    return out


def _oracle_report_payload(report: oracle.OracleReport) -> dict:
    return {
        "torus": fmt_complex(report.torus),
        "matched": report.matched,
        "analytic_count": report.analytic_count,
        "oracle_count": report.count,
        "max_length_error": report.max_length_error,
        "detail": report.detail,
    }


def cmd_oracle_verify(args) -> int:
    if (args.torus is None) == (args.random is None):
        raise ValueError("give exactly one of a torus argument or --random N")
    if args.torus is not None:
        tori = [require_upper(parse_torus(args.torus))]
    else:
        tori = sample_reduced_tori(args.random, args.seed)
    reports = [oracle.compare_with_analytic(z) for z in tori]
    ok = all(r.matched for r in reports)
    if len(reports) == 1 and args.torus is not None:
        _emit(_oracle_report_payload(reports[0]))
    else:
        _emit(
            {
                "seed": args.seed,
                "trials": len(reports),
                "all_matched": ok,
                "reports": [_oracle_report_payload(r) for r in reports],
            }
        )
    return 0 if ok else 1


def cmd_extremal(args) -> int:
    if args.genus < 2:
        raise ValueError(f"genus must be >= 2, got {args.genus}")
    poly = hyperbolic.regular_polygon(12 * args.genus - 6, 2.0 * math.pi / 3.0)
    _emit(
        {
            "genus": args.genus,
            "sides": poly.n,
            "side": poly.side,
            "inradius": poly.inradius,
            "circumradius": poly.circumradius,
            "perimeter": poly.n * poly.side,
            "spine_length": hyperbolic.extremal_spine_systole(args.genus),
            "area": poly.area,
        }
    )
    return 0


def cmd_disc_model(args) -> int:
    z = require_upper(parse_torus(args.torus))
    d = hexagon.disc_model_transform(z)
    payload = {"input": args.torus, "disc_re": d.real, "disc_im": d.imag, "modulus": abs(d)}
    _emit(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinelab",
        description="Minimal spines on flat tori and extremal hyperbolic surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def torus_cmd(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("torus", help="complex point 'a+bi', or 'square'/'hex'")
        p.set_defaults(fn=fn)
        return p

    torus_cmd("reduce", cmd_reduce, "reduce to the fundamental domain")
    torus_cmd("classify", cmd_classify, "name the torus kind")

    p = torus_cmd("spines", cmd_spines, "enumerate all minimal spines")
    ori = p.add_mutually_exclusive_group()
    ori.add_argument("--oriented", dest="oriented", action="store_true", default=True)
    ori.add_argument("--unoriented", dest="oriented", action="store_false")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="csv", action="store_false", default=False)
    fmt.add_argument("--csv", dest="csv", action="store_true")

    p = torus_cmd("count", cmd_count, "number of minimal spines")
    ori = p.add_mutually_exclusive_group()
    ori.add_argument("--oriented", dest="oriented", action="store_true", default=True)
    ori.add_argument("--unoriented", dest="oriented", action="store_false")

    torus_cmd("systole", cmd_systole, "length of the shortest spine")

    p = torus_cmd("spectrum", cmd_spectrum, "length spectrum of minimal spines")
    ori = p.add_mutually_exclusive_group()
    ori.add_argument("--oriented", dest="oriented", action="store_true", default=True)
    ori.add_argument("--unoriented", dest="oriented", action="store_false")

    p = sub.add_parser("heatmap", help="chart a quantity over moduli space")
    p.add_argument("--re-min", type=float, default=chart.DEFAULT_RE_MIN)
    p.add_argument("--re-max", type=float, default=chart.DEFAULT_RE_MAX)
    p.add_argument("--im-min", type=float, default=chart.DEFAULT_IM_MIN)
    p.add_argument("--im-max", type=float, default=chart.DEFAULT_IM_MAX)
    p.add_argument("--cols", type=int, default=chart.DEFAULT_COLS)
    p.add_argument("--rows", type=int, default=chart.DEFAULT_ROWS)
    p.add_argument("--quantity", choices=chart.QUANTITIES, default="count")
    p.add_argument("--svg", metavar="PATH", help="write an SVG chart")
    p.add_argument("--csv", metavar="PATH", help="write CSV values")
    p.set_defaults(fn=cmd_heatmap)

    p = sub.add_parser("oracle-verify", help="confront oracle and closed forms")
    p.add_argument("torus", nargs="?", default=None)
    p.add_argument(
        "--random", "--trials", dest="random", type=int, metavar="N",
        help="verify N seeded random tori",
    )
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_oracle_verify)

    p = sub.add_parser("extremal", help="extremal-surface quantities for genus g")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(fn=cmd_extremal)

    torus_cmd("disc-model", cmd_disc_model, "map a point to the disc picture")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "heatmap" and not (args.svg or args.csv):
        parser.error("heatmap needs --svg PATH and/or --csv PATH")
    try:
        return args.fn(args)
    except (SpinelabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
