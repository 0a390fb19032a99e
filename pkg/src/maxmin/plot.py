"""Rendering 2-coordinate hulls to SVG or PNG files.

The SVG writer is deterministic: the same matrix and resolution produce
byte-identical output. Membership is evaluated exactly on an evenly
spaced grid and painted as run-merged rectangles; generator columns are
drawn on top as dots. PNG output goes through matplotlib and is meant
for quick visual checks, not for byte comparison.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .core import Matrix, ShapeError
from .hull import hull_raster_2d

__all__ = ["render_hull_svg", "write_plot2d"]

_SIZE = 600
_MARGIN = 50
_SPAN = _SIZE - 2 * _MARGIN


def _fmt(v: Fraction) -> str:
    return f"{float(v):.2f}"


def _px(t: Fraction) -> Fraction:
    return _MARGIN + t * _SPAN


def _py(t: Fraction) -> Fraction:
    return _MARGIN + (1 - t) * _SPAN


def render_hull_svg(a: Matrix, resolution: int = 100) -> str:
    """SVG 1.1 image of the hull of a 2-row matrix's columns."""
    grid = hull_raster_2d(a, resolution)
    res = Fraction(resolution)
    half = Fraction(_SPAN, 2 * resolution)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SIZE}" height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="#ffffff"/>',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{_SPAN}" height="{_SPAN}" '
        'fill="none" stroke="#444444" stroke-width="1"/>',
        '<g fill="#7eb3dd">',
    ]
    for i in range(resolution + 1):
        x = _px(Fraction(i, resolution))
        j = 0
        while j <= resolution:
            if not grid[i][j]:
                j += 1
                continue
            j0 = j
            while j <= resolution and grid[i][j]:
                j += 1
            top = _py(Fraction(j - 1, resolution)) - half
            height = _py(Fraction(j0, resolution)) + half - top
            parts.append(
                f'<rect x="{_fmt(x - half)}" y="{_fmt(top)}" '
                f'width="{_fmt(2 * half)}" height="{_fmt(height)}"/>'
            )
    parts.append("</g>")
    labels = (
        (_px(Fraction(0)), _py(Fraction(0)) + 30, "0"),
        (_px(Fraction(1)), _py(Fraction(0)) + 30, "1"),
        (_px(Fraction(0)) - 30, _py(Fraction(1)), "1"),
    )
    parts.append('<g font-family="monospace" font-size="16" fill="#222222">')
    for lx, ly, text in labels:
        parts.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}">{text}</text>')
    parts.append("</g>")
    parts.append('<g fill="#b33636">')
    for j in range(a.ncols):
        parts.append(
            f'<circle cx="{_fmt(_px(a.rows[0][j]))}" cy="{_fmt(_py(a.rows[1][j]))}" r="4"/>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _write_png(a: Matrix, path: Path, resolution: int) -> None:
    try:
        import matplotlib
    except ImportError as exc:
        raise RuntimeError(
            "PNG output needs matplotlib; install the 'plots' extra or write SVG instead"
        ) from exc
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    grid = hull_raster_2d(a, resolution)
    data = [
        [1 if grid[i][j] else 0 for i in range(resolution + 1)]
        for j in range(resolution + 1)
    ]
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.imshow(
        data,
        origin="lower",
        extent=(0, 1, 0, 1),
        cmap="Blues",
        vmin=0,
        vmax=2,
        interpolation="nearest",
    )
    xs = [float(a.rows[0][j]) for j in range(a.ncols)]
    ys = [float(a.rows[1][j]) for j in range(a.ncols)]
    ax.scatter(xs, ys, color="#b33636", zorder=3)
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.set_xlabel("coordinate 1")
    ax.set_ylabel("coordinate 2")
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_plot2d(a: Matrix, path: str | Path, resolution: int = 100) -> Path:
    """Render the hull to `path`; the suffix picks SVG or PNG."""
    if a.nrows != 2:
        raise ShapeError(f"plotting needs a 2-row matrix, got {a.nrows} rows")
    out = Path(path)
    suffix = out.suffix.lower()
    if suffix == ".svg":
        out.write_text(render_hull_svg(a, resolution), encoding="utf-8")
    elif suffix == ".png":
        _write_png(a, out, resolution)
    else:
        raise ValueError(f"unsupported plot format {out.suffix!r}; use .svg or .png")
    return out
