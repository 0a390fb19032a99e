"""Plain-text matrix and point files.

Format: optional comment and blank lines anywhere ('#' starts a comment,
rest of line ignored); the first significant line is the header `d n`;
the next d significant lines carry n whitespace-separated entries each.
Entries are exact: decimal literals like .07 or 0.125, ratios like
7/100, or the integers 0 and 1, all within [0, 1].

Points on the command line use the same entry syntax, separated by
commas (spaces allowed).
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .core import Matrix, Vector, scalar, vector

__all__ = ["MatrixParseError", "parse_matrix", "load_matrix", "parse_point"]

_TOKEN = re.compile(r"\S+")


class MatrixParseError(ValueError):
    """Malformed matrix text; the message carries source:line[:column]."""


def _entry(token: str, source: str, line: int, col: int) -> Fraction:
    try:
        return scalar(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise MatrixParseError(f"{source}:{line}:{col}: {exc}") from None


def parse_matrix(text: str, source: str = "<string>") -> Matrix:
    header: tuple[int, int] | None = None
    rows: list[tuple[Fraction, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        code = raw.split("#", 1)[0]
        tokens = list(_TOKEN.finditer(code))
        if not tokens:
            continue
        if header is None:
            if len(tokens) != 2:
                raise MatrixParseError(
                    f"{source}:{lineno}: header must be 'nrows ncols', got {len(tokens)} tokens"
                )
            try:
                d, n = (int(t.group()) for t in tokens)
            except ValueError:
                raise MatrixParseError(
                    f"{source}:{lineno}: header must contain two integers"
                ) from None
            if d < 1 or n < 1:
                raise MatrixParseError(f"{source}:{lineno}: dimensions must be positive")
            header = (d, n)
            continue
        d, n = header
        if len(rows) == d:
            raise MatrixParseError(
                f"{source}:{lineno}: expected {d} rows, found extra data"
            )
        if len(tokens) != n:
            raise MatrixParseError(
                f"{source}:{lineno}: expected {n} entries, got {len(tokens)}"
            )
        rows.append(
            tuple(
                _entry(t.group(), source, lineno, t.start() + 1) for t in tokens
            )
        )
    if header is None:
        raise MatrixParseError(f"{source}: no header line found")
    if len(rows) != header[0]:
        raise MatrixParseError(
            f"{source}: expected {header[0]} rows, got {len(rows)}"
        )
    return Matrix(tuple(rows))


def load_matrix(path: str | Path) -> Matrix:
    p = Path(path)
    return parse_matrix(p.read_text(encoding="utf-8"), source=str(p))


def parse_point(text: str) -> Vector:
    """A comma-separated point like '.7,.2' or '1/2, 3/4'."""
    parts = [p.strip() for p in text.split(",")]
    if any(not p for p in parts):
        raise MatrixParseError(f"malformed point {text!r}")
    try:
        return vector(parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise MatrixParseError(f"malformed point {text!r}: {exc}") from None
