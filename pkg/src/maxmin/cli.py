"""Command line front end.

Every subcommand reads exact rational inputs (matrix files, points on
the command line), computes with no rounding anywhere, and prints a
short text report; `--json` switches to a JSON report whose numeric
values are exact fraction strings. Indices in reports are 1-based.

Exit status: 0 when a report was produced, whatever the verdict; 2 for
usage, parse, or shape problems; anything else signals an internal
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Iterable

from .hull import hull_membership
from .linsys import solve
from .matrixfile import load_matrix, parse_point
from .plot import write_plot2d
from .quasibox import Quasibox, dimension_lower_bound
from .regularity import RankWitness, rank, trapezoidalize
from .segments import decompose

__all__ = ["main"]


def _vec(values: Iterable[Fraction]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _idx_set(indices: Iterable[int]) -> str:
    return "{" + ", ".join(str(i + 1) for i in sorted(indices)) + "}"


def _ones(indices: Iterable[int]) -> list[int]:
    return [i + 1 for i in indices]


def _report(args: argparse.Namespace, payload: dict, lines: list[str]) -> int:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)
    return 0


def _witness_payload(w: RankWitness) -> dict:
    payload: dict = {"rank": w.rank}
    if w.rank == 0:
        payload.update(rows=[], cols=[], omitted_column=None, pi=[], lambdas={})
        return payload
    cert = w.certificate
    assert cert is not None and cert.omitted_col is not None
    payload.update(
        rows=_ones(w.rows),
        cols=_ones(w.cols),
        omitted_column=w.cols[cert.omitted_col] + 1,
        pi=[w.cols[cert.pi[p]] + 1 for p in range(w.rank)],
        lambdas={
            str(w.cols[c] + 1): str(v) for c, v in sorted(cert.lambdas.items())
        },
    )
    return payload


def _witness_lines(w: RankWitness) -> list[str]:
    lines = [f"rank: {w.rank}"]
    if w.rank == 0:
        lines.append("witness: none (all columns coincide)")
        return lines
    cert = w.certificate
    assert cert is not None and cert.omitted_col is not None
    lines.append("witness rows: " + " ".join(str(i + 1) for i in w.rows))
    lines.append("witness cols: " + " ".join(str(j + 1) for j in w.cols))
    lines.append(f"omitted column: {w.cols[cert.omitted_col] + 1} (coefficient 1)")
    for p, row in enumerate(w.rows):
        col = w.cols[cert.pi[p]]
        lam = cert.lambdas[cert.pi[p]]
        lines.append(f"certified: row {row + 1} -> col {col + 1} (coefficient {lam})")
    return lines


def _cmd_rank(args: argparse.Namespace) -> int:
    a = load_matrix(args.matrix)
    w = rank(a)
    return _report(args, _witness_payload(w), _witness_lines(w))


def _box_payload(box: Quasibox | None) -> dict | None:
    if box is None:
        return None
    return {
        "blocks": [sorted(i + 1 for i in b) for b in box.blocks],
        "levels": [str(v) for v in box.levels],
        "epsilon": str(box.epsilon),
        "fixed": {str(i + 1): str(v) for i, v in sorted(box.fixed.items())},
    }


def _box_line(box: Quasibox) -> str:
    blocks = " ".join(_idx_set(b) for b in box.blocks)
    levels = ", ".join(str(v) for v in box.levels)
    fixed = (
        "; ".join(f"{i + 1}: {v}" for i, v in sorted(box.fixed.items())) or "none"
    )
    return (
        f"oracle box: blocks {blocks} levels {levels} "
        f"epsilon {box.epsilon} fixed {fixed}"
    )


def _cmd_dim(args: argparse.Namespace) -> int:
    if args.grid is not None and not args.oracle:
        raise ValueError("--grid only applies together with --oracle")
    a = load_matrix(args.matrix)
    w = rank(a)
    payload: dict = {"dimension": w.rank, "rank": w.rank}
    lines = [f"dimension: {w.rank}"]
    if args.oracle:
        grid = args.grid if args.grid is not None else 200
        if grid < 1:
            raise ValueError("grid denominator must be positive")
        bound, box = dimension_lower_bound(a, grid)
        payload.update(
            oracle_bound=bound,
            grid=grid,
            agree=bound == w.rank,
            box=_box_payload(box),
        )
        lines.append(f"oracle bound: {bound} (grid denominator {grid})")
        if box is not None:
            lines.append(_box_line(box))
        lines.append(f"agreement: {'yes' if bound == w.rank else 'no'}")
    return _report(args, payload, lines)


def _cmd_trapezoid(args: argparse.Namespace) -> int:
    a = load_matrix(args.matrix)
    found = trapezoidalize(a)
    if found is None:
        payload = {"trapezoidal": False, "row_order": None, "col_order": None}
        lines = ["trapezoidal: no"]
    else:
        row_order, col_order = found
        payload = {
            "trapezoidal": True,
            "row_order": _ones(row_order),
            "col_order": _ones(col_order),
        }
        lines = [
            "trapezoidal: yes",
            "row order: " + " ".join(str(i + 1) for i in row_order),
            "col order: " + " ".join(str(j + 1) for j in col_order),
        ]
    return _report(args, payload, lines)


def _cmd_solve(args: argparse.Namespace) -> int:
    a = load_matrix(args.matrix)
    b = parse_point(args.rhs)
    rep = solve(a, b)
    payload = {
        "principal": [str(v) for v in rep.principal],
        "image": [str(v) for v in rep.image],
        "solves": rep.solves,
        "failing_row": None if rep.failing_row is None else rep.failing_row + 1,
        "cover_sets": [sorted(j + 1 for j in s) for s in rep.cover_sets],
        "unique": rep.unique,
        "unique_normalized": rep.unique_normalized,
    }
    lines = [
        f"principal: {_vec(rep.principal)}",
        f"solves: {'yes' if rep.solves else 'no'}",
    ]
    if not rep.solves:
        assert rep.failing_row is not None
        lines.append(f"failing row: {rep.failing_row + 1} (image {rep.image[rep.failing_row]})")
    lines.append(f"unique: {'yes' if rep.unique else 'no'}")
    lines.append(f"unique normalized: {'yes' if rep.unique_normalized else 'no'}")
    lines.append(
        "cover sets: "
        + "  ".join(
            f"row {i + 1}: {_idx_set(s)}" for i, s in enumerate(rep.cover_sets)
        )
    )
    return _report(args, payload, lines)


def _cmd_segment(args: argparse.Namespace) -> int:
    x = parse_point(args.start)
    y = parse_point(args.end)
    seg = decompose(x, y)
    payload = {
        "comparable": seg.comparable,
        "junction": None if seg.junction is None else [str(v) for v in seg.junction],
        "pieces": [
            {
                "beta": [str(p.beta_interval[0]), str(p.beta_interval[1])],
                "active": sorted(i + 1 for i in p.active),
                "start": [str(v) for v in p.start],
                "end": [str(v) for v in p.end],
            }
            for p in seg.pieces
        ],
    }
    lines = [f"comparable: {'yes' if seg.comparable else 'no'}"]
    if seg.junction is not None:
        lines.append(f"junction: {_vec(seg.junction)}")
    lines.append(f"pieces: {len(seg.pieces)}")
    lines.append("piece\tbeta_lo\tbeta_hi\tactive\tstart\tend")
    for idx, p in enumerate(seg.pieces, start=1):
        lines.append(
            f"{idx}\t{p.beta_interval[0]}\t{p.beta_interval[1]}\t"
            f"{_idx_set(p.active)}\t{_vec(p.start)}\t{_vec(p.end)}"
        )
    return _report(args, payload, lines)


def _cmd_member(args: argparse.Namespace) -> int:
    a = load_matrix(args.matrix)
    x = parse_point(args.point)
    res = hull_membership(a, x)
    payload = {
        "member": res.member,
        "witness": None if res.witness is None else [str(v) for v in res.witness],
        "failing_row": None if res.failing_row is None else res.failing_row + 1,
    }
    lines = [f"member: {'yes' if res.member else 'no'}"]
    if res.member:
        assert res.witness is not None
        lines.append(f"witness: {_vec(res.witness)}")
    else:
        assert res.failing_row is not None
        suffix = " (normalization)" if res.failing_row == a.nrows else ""
        lines.append(f"failing row: {res.failing_row + 1}{suffix}")
    return _report(args, payload, lines)


def _cmd_plot2d(args: argparse.Namespace) -> int:
    a = load_matrix(args.matrix)
    out = write_plot2d(a, args.output, args.resolution)
    payload = {"output": str(out), "resolution": args.resolution}
    return _report(args, payload, [f"wrote {out} (resolution {args.resolution})"])


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="maxmin",
        description=(
            "Exact max-min (fuzzy) algebra over [0, 1]: rank and dimension, "
            "trapezoidal orderings, linear systems, segment decompositions, "
            "hull membership, and 2d hull plots."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_: str):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("rank", _cmd_rank, "max-min rank of a matrix, with a witness certificate")
    sp.add_argument("matrix", help="matrix file")

    sp = add("dim", _cmd_dim, "dimension of the hull of the matrix columns")
    sp.add_argument("matrix", help="matrix file")
    sp.add_argument(
        "--oracle",
        action="store_true",
        help="also run the certificate-free quasibox search and compare",
    )
    sp.add_argument(
        "--grid",
        type=int,
        default=None,
        metavar="DENOMINATOR",
        help="grid denominator for --oracle (default 200)",
    )

    sp = add("trapezoid", _cmd_trapezoid, "search row/column orders making the matrix trapezoidal")
    sp.add_argument("matrix", help="matrix file")

    sp = add("solve", _cmd_solve, "solve A (x) x = b and classify uniqueness")
    sp.add_argument("matrix", help="matrix file")
    sp.add_argument("rhs", help="right hand side, comma-separated (e.g. '.04,.07,.10')")

    sp = add("segment", _cmd_segment, "decompose the max-min segment between two points")
    sp.add_argument("start", help="first endpoint, comma-separated")
    sp.add_argument("end", help="second endpoint, comma-separated")

    sp = add("member", _cmd_member, "test hull membership of a point")
    sp.add_argument("matrix", help="matrix file")
    sp.add_argument("point", help="query point, comma-separated")

    sp = add("plot2d", _cmd_plot2d, "render the hull of a 2-row matrix to SVG or PNG")
    sp.add_argument("matrix", help="matrix file")
    sp.add_argument("output", help="output file (.svg or .png)")
    sp.add_argument("--resolution", type=int, default=100, help="grid resolution (default 100)")

    return p


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
