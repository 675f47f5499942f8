"""Deterministic SVG drawing of a representation.

The coordinate span maps onto 1000 drawing units.  Vertex v sits on row v
from the top: a horizontal segment for its interval and, for interval-point
representations, a dot at its point.  Tolerance representations print the
tolerance as a label instead of a dot.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .reps import IntervalPointRep, Representation, fmt

SPAN = 1000
MARGIN = 60
ROW = 24


def _num(x: Fraction) -> str:
    # three decimals keeps the output byte-stable
    return f"{float(x):.3f}"


def render_svg(rep: Representation, title: str | None = None) -> str:
    n = rep.n
    coords = list(rep.a) + list(rep.b)
    lo = min(coords, default=Fraction(0))
    hi = max(coords, default=Fraction(1))
    width = hi - lo

    def x(c: Fraction) -> Fraction:
        if width == 0:
            return Fraction(MARGIN + SPAN // 2)
        return MARGIN + (c - lo) * SPAN / width

    total_w = SPAN + 2 * MARGIN
    total_h = ROW * (n + 1) + (ROW if title else 0)
    top = ROW + (ROW if title else 0)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" '
        f'viewBox="0 0 {total_w} {total_h}">',
        '<g font-family="monospace" font-size="12">',
    ]
    if title:
        out.append(f'<text x="{MARGIN}" y="{ROW - 6}">{escape(title)}</text>')
    with_points = isinstance(rep, IntervalPointRep)
    for v in range(n):
        y = top + ROW * v
        # x2 from a rounded width so equal lengths draw equally wide
        left = round(float(x(rep.a[v])), 3)
        x1 = f"{left:.3f}"
        x2 = f"{left + round(float(x(rep.b[v]) - x(rep.a[v])), 3):.3f}"
        out.append(f'<text x="8" y="{y + 4}">v{v + 1}</text>')
        out.append(
            f'<line class="interval" data-vertex="{v + 1}" x1="{x1}" y1="{y}" x2="{x2}" y2="{y}" '
            f'stroke="black" stroke-width="2"/>')
        if with_points:
            out.append(
                f'<circle class="point" data-vertex="{v + 1}" cx="{_num(x(rep.p[v]))}" cy="{y}" '
                f'r="4" fill="red"/>')
        else:
            out.append(
                f'<text class="tolerance" x="{x2}" y="{y - 4}">t={escape(fmt(rep.t[v]))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
