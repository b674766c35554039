"""SVG renderings of diagrams and complexes.

Two pictures: the fundamental square with both curves and base points, and
the generator plot of a complex with one dot per generator and one line
per arrow.  Both are plain strings with no external references.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

from .chain import KnotComplex
from .diagram import GenusOneDiagram

F = Fraction

_SIZE = 720
_PAD = 40


def _sq(v: Fraction) -> float:
    return _PAD + float(v) * (_SIZE - 2 * _PAD)


def _sq_y(v: Fraction) -> float:
    return _SIZE - _sq(v)


def _wrap_pieces(a: Fraction, b: Fraction) -> List[Tuple[Fraction, Fraction]]:
    """Split the 1-d segment [a, b] at integers; yield pieces reduced mod 1."""
    pieces = []
    lo, hi = (a, b) if a <= b else (b, a)
    cur = lo
    while cur < hi:
        shift = F(cur.numerator // cur.denominator)
        nxt = min(hi, shift + 1)
        pieces.append((cur - shift, nxt - shift))
        cur = nxt
    return pieces


def render_diagram_svg(diagram: GenusOneDiagram) -> str:
    verts = list(diagram.alpha.vertices)
    lines: List[str] = []
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">'
    )
    lines.append(f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>')
    lines.append(
        f'<rect x="{_PAD}" y="{_PAD}" width="{_SIZE - 2 * _PAD}" '
        f'height="{_SIZE - 2 * _PAD}" fill="none" stroke="#999" stroke-width="1"/>'
    )
    # the horizontal curve sits at height zero, the square's bottom edge
    lines.append(
        f'<line x1="{_PAD}" y1="{_sq_y(F(0))}" x2="{_SIZE - _PAD}" '
        f'y2="{_sq_y(F(0))}" stroke="#c43" stroke-width="2"/>'
    )
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        if x0 == x1:
            fx = x0 - (x0.numerator // x0.denominator)
            for lo, hi in _wrap_pieces(y0, y1):
                lines.append(
                    f'<line x1="{_sq(fx):.2f}" y1="{_sq_y(lo):.2f}" '
                    f'x2="{_sq(fx):.2f}" y2="{_sq_y(hi):.2f}" '
                    f'stroke="#2563c4" stroke-width="1.5"/>'
                )
        else:
            fy = y0 - (y0.numerator // y0.denominator)
            for lo, hi in _wrap_pieces(x0, x1):
                lines.append(
                    f'<line x1="{_sq(lo):.2f}" y1="{_sq_y(fy):.2f}" '
                    f'x2="{_sq(hi):.2f}" y2="{_sq_y(fy):.2f}" '
                    f'stroke="#2563c4" stroke-width="1.5"/>'
                )
    for (px, py), color, name in ((diagram.z, "#1a7f37", "z"), (diagram.w, "#b26a00", "w")):
        fx = px - (px.numerator // px.denominator)
        fy = py - (py.numerator // py.denominator)
        lines.append(
            f'<circle cx="{_sq(fx):.2f}" cy="{_sq_y(fy):.2f}" r="5" fill="{color}"/>'
        )
        lines.append(
            f'<text x="{_sq(fx) + 8:.2f}" y="{_sq_y(fy) - 8:.2f}" '
            f'font-size="16" fill="{color}">{name}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_staircase_svg(cx: KnotComplex) -> str:
    """One dot per generator at (-alexander, maslov), one line per arrow."""
    m = cx.generators
    pts: Dict[int, Tuple[float, float]] = {}
    used: Dict[Tuple[int, int], int] = {}
    for g in range(m):
        key = (-cx.alexander[g], cx.maslov[g])
        bump = used.get(key, 0)
        used[key] = bump + 1
        pts[g] = (key[0] + 0.18 * bump, key[1] + 0.18 * bump)
    min_x = min(x for x, _ in pts.values())
    max_x = max(x for x, _ in pts.values())
    min_y = min(y for _, y in pts.values())
    max_y = max(y for _, y in pts.values())
    span = max(max_x - min_x, max_y - min_y, 1)
    scale = (_SIZE - 2 * _PAD) / span

    def sx(x: float) -> float:
        return _PAD + (x - min_x) * scale

    def sy(y: float) -> float:
        return _SIZE - _PAD - (y - min_y) * scale

    lines: List[str] = []
    height = int(sy(min_y)) + _PAD
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{height}" '
        f'viewBox="0 0 {_SIZE} {height}">'
    )
    lines.append(f'<rect width="{_SIZE}" height="{height}" fill="white"/>')
    lines.append(
        '<defs><marker id="tip" markerWidth="8" markerHeight="8" refX="7" refY="4" '
        'orient="auto"><path d="M0,0 L8,4 L0,8 z" fill="#444"/></marker></defs>'
    )
    for a in cx.arrows:
        x0, y0 = pts[a.source]
        x1, y1 = pts[a.target]
        lines.append(
            f'<line x1="{sx(x0):.2f}" y1="{sy(y0):.2f}" x2="{sx(x1):.2f}" '
            f'y2="{sy(y1):.2f}" stroke="#444" stroke-width="1.5" '
            f'marker-end="url(#tip)"/>'
        )
    for g in range(m):
        x, y = pts[g]
        lines.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="6" fill="#2563c4"/>')
        lines.append(
            f'<text x="{sx(x) + 9:.2f}" y="{sy(y) - 9:.2f}" font-size="13" '
            f'fill="#333">{cx.alexander[g]},{cx.maslov[g]}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
