"""CSV and SVG emission for sweep results.

Both writers produce deterministic bytes for identical rows and replace the
target file atomically.
"""

import os
import tempfile
from xml.sax.saxutils import escape

__all__ = ["CSV_HEADER", "format_number", "write_csv", "emit_plot", "atomic_write"]

CSV_HEADER = "x,lqu,lqfi,partition"

_COLORS = {"lqu": "#1f77b4", "lqfi": "#d62728"}
_LABELS = {"lqu": "LQU", "lqfi": "LQFI"}


def format_number(value):
    """Shortest round-trip decimal; integral values lose the trailing '.0'."""
    if value is None:
        return ""
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def atomic_write(path, text):
    """Write ``text`` as UTF-8 with LF endings, then rename over ``path``."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def write_csv(rows, path):
    if not rows:
        raise ValueError("no rows to write")
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(",".join(format_number(v) for v in (row.x, row.lqu, row.lqfi, row.partition)))
    atomic_write(path, "\n".join(lines) + "\n")


def _fmt(v):
    return f"{v:.3f}"


def emit_plot(rows, path, x_label="x", y_label="correlation", title=None,
              width=640, height=400):
    """Write an SVG 1.1 line plot with one polyline per measure present in ``rows``.

    The y range always contains [0, 1] so that a measure that is
    identically zero lies on the x-axis baseline.
    """
    if not rows:
        raise ValueError("no rows to plot")
    measures = [m for m in ("lqu", "lqfi") if any(getattr(r, m) is not None for r in rows)]

    left, right, top, bottom = 70, 20, 40 if title else 20, 50
    pw, ph = width - left - right, height - top - bottom
    xs = [r.x for r in rows]
    x0, x1 = min(xs), max(xs)
    if x0 == x1:
        x0, x1 = x0 - 0.5, x1 + 0.5
    ys = [getattr(r, m) for r in rows for m in measures if getattr(r, m) is not None]
    y0, y1 = min([0.0] + ys), max([1.0] + ys)

    def sx(x):
        return left + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return top + (y1 - y) / (y1 - y0) * ph

    base = sy(0.0)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{_fmt(left)}" y1="{_fmt(base)}" x2="{_fmt(left + pw)}" y2="{_fmt(base)}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{_fmt(left)}" y1="{_fmt(top)}" x2="{_fmt(left)}" y2="{_fmt(top + ph)}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for xv in (x0, x1):
        out.append(f'<text x="{_fmt(sx(xv))}" y="{_fmt(top + ph + 18)}" font-size="12" '
                   f'text-anchor="middle">{escape(format_number(xv))}</text>')
    for yv in (y0, y1):
        out.append(f'<text x="{_fmt(left - 6)}" y="{_fmt(sy(yv) + 4)}" font-size="12" '
                   f'text-anchor="end">{escape(format_number(yv))}</text>')
    out.append(f'<text x="{_fmt(left + pw / 2)}" y="{_fmt(height - 10)}" font-size="14" '
               f'text-anchor="middle">{escape(x_label)}</text>')
    out.append(f'<text x="16" y="{_fmt(top + ph / 2)}" font-size="14" text-anchor="middle" '
               f'transform="rotate(-90 16 {_fmt(top + ph / 2)})">{escape(y_label)}</text>')
    if title:
        out.append(f'<text x="{_fmt(width / 2)}" y="24" font-size="15" '
                   f'text-anchor="middle">{escape(title)}</text>')

    for i, m in enumerate(measures):
        pts = " ".join(f"{_fmt(sx(r.x))},{_fmt(sy(getattr(r, m)))}"
                       for r in rows if getattr(r, m) is not None)
        out.append(f'<polyline id="{m}" fill="none" stroke="{_COLORS[m]}" stroke-width="1.5" '
                   f'points="{pts}"/>')
        ly = top + 14 + 18 * i
        lx = left + pw - 90
        out.append(f'<line x1="{_fmt(lx)}" y1="{_fmt(ly)}" x2="{_fmt(lx + 24)}" y2="{_fmt(ly)}" '
                   f'stroke="{_COLORS[m]}" stroke-width="2"/>')
        out.append(f'<text x="{_fmt(lx + 30)}" y="{_fmt(ly + 4)}" font-size="12">{_LABELS[m]}</text>')
    out.append("</svg>")
    atomic_write(path, "\n".join(out) + "\n")
