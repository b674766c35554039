"""Exact rectilinear geometry on the square torus R^2 / Z^2.

Curves are closed axis-aligned polylines with rational (dyadic) vertex
coordinates, stored unrolled in the plane: the final vertex differs from the
first by the integer closure vector.  Scaling helpers convert curves and
marked points to a common integer grid for the kernel backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import InvariantError

Point = Tuple[Fraction, Fraction]


def merge_collinear(points: Sequence[Point], closed: bool) -> List[Point]:
    """Drop repeated vertices and interior vertices of straight runs.

    For closed inputs (vertices[-1] = vertices[0] + closure) a straight seam
    is also merged by rotating the start to a genuine corner, so the result
    either is a 2-vertex straight circle or starts and ends at corners.
    """
    pts: List[Point] = []
    for p in points:
        if pts and pts[-1] == p:
            continue
        pts.append(p)
    if len(pts) < 3:
        return pts
    res: List[Point] = [pts[0]]
    for i in range(1, len(pts) - 1):
        a, b, c = res[-1], pts[i], pts[i + 1]
        if (a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1]):
            continue
        res.append(b)
    res.append(pts[-1])
    if not closed or len(res) < 3:
        return res
    wx = res[-1][0] - res[0][0]
    wy = res[-1][1] - res[0][1]
    a, b, c = res[-2], res[0], res[1]
    last_x = a[0] - wx == b[0] == c[0]
    last_y = a[1] - wy == b[1] == c[1]
    if last_x or last_y:
        # seam sits inside a straight run: restart the cycle at res[1]
        return res[1:-1] + [(res[1][0] + wx, res[1][1] + wy)]
    return res


def segment_kind(a: Point, b: Point) -> str:
    if a[1] == b[1] and a[0] != b[0]:
        return "h"
    if a[0] == b[0] and a[1] != b[1]:
        return "v"
    raise InvariantError(f"segment {a}->{b} is not axis-aligned or has zero length")


@dataclass(frozen=True)
class PlanarCurve:
    """Closed curve on the torus, unrolled: vertices[-1] - vertices[0] = closure."""

    vertices: Tuple[Point, ...]

    @staticmethod
    def make(points: Sequence[Point]) -> "PlanarCurve":
        pts = merge_collinear(points, closed=True)
        if len(pts) < 2:
            raise InvariantError("curve needs at least one segment")
        dx = pts[-1][0] - pts[0][0]
        dy = pts[-1][1] - pts[0][1]
        if dx.denominator != 1 or dy.denominator != 1:
            raise InvariantError(f"closure vector ({dx}, {dy}) is not integral")
        if len(pts) == 2:
            # straight circle: one full-period axis run, e.g. the initial alpha
            if not (
                (dx == 0 and abs(dy) == 1) or (dy == 0 and abs(dx) == 1)
            ):
                raise InvariantError("straight closed curve must wrap exactly once")
            return PlanarCurve(tuple(pts))
        kinds = [segment_kind(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]
        for i in range(len(kinds)):
            if kinds[i] == kinds[(i + 1) % len(kinds)]:
                raise InvariantError("consecutive segments must alternate h/v")
        return PlanarCurve(tuple(pts))

    @property
    def is_circle(self) -> bool:
        """True for the degenerate 2-vertex straight circle."""
        return len(self.vertices) == 2

    @property
    def closure(self) -> Tuple[int, int]:
        dx = self.vertices[-1][0] - self.vertices[0][0]
        dy = self.vertices[-1][1] - self.vertices[0][1]
        return (int(dx), int(dy))

    def segments(self) -> List[Tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[i + 1]) for i in range(len(v) - 1)]


def offset_path(points: Sequence[Point], eps: Fraction, start_below: bool) -> List[Point]:
    """Parallel of an open axis-aligned path at distance eps on one side.

    The side is fixed by the first segment, which must be horizontal:
    start_below=True puts the parallel at -eps in y along it.  Corners use
    the exact miter, which for axis-aligned paths is v + eps*(n_prev + n_cur).
    """
    if len(points) < 2:
        raise InvariantError("path needs at least one segment")
    dirs = []
    for i in range(len(points) - 1):
        (x0, y0), (x1, y1) = points[i], points[i + 1]
        if y0 == y1 and x0 != x1:
            dirs.append((1 if x1 > x0 else -1, 0))
        elif x0 == x1 and y0 != y1:
            dirs.append((0, 1 if y1 > y0 else -1))
        else:
            raise InvariantError("offset_path requires axis-aligned nonzero segments")
    if dirs[0][1] != 0:
        raise InvariantError("offset_path: first segment must be horizontal")
    sigma = dirs[0][0] if start_below else -dirs[0][0]
    normals = [(sigma * d[1], -sigma * d[0]) for d in dirs]
    out: List[Point] = []
    n0 = normals[0]
    out.append((points[0][0] + eps * n0[0], points[0][1] + eps * n0[1]))
    for i in range(1, len(points) - 1):
        na, nb = normals[i - 1], normals[i]
        out.append((points[i][0] + eps * (na[0] + nb[0]), points[i][1] + eps * (na[1] + nb[1])))
    nl = normals[-1]
    out.append((points[-1][0] + eps * nl[0], points[-1][1] + eps * nl[1]))
    return out


def common_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for v in values:
        dv = v.denominator
        d = d * dv // _gcd(d, dv)
    return d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def scale_curve(curve: PlanarCurve, denom: int) -> Tuple[List[int], List[int]]:
    xs, ys = [], []
    for x, y in curve.vertices:
        sx, sy = x * denom, y * denom
        if sx.denominator != 1 or sy.denominator != 1:
            raise InvariantError("denominator does not clear curve coordinates")
        xs.append(int(sx))
        ys.append(int(sy))
    return xs, ys


def scale_point(pt: Point, denom: int) -> Tuple[int, int]:
    sx, sy = pt[0] * denom, pt[1] * denom
    if sx.denominator != 1 or sy.denominator != 1:
        raise InvariantError("denominator does not clear point coordinates")
    return int(sx), int(sy)


def curve_denominator(curve: PlanarCurve, *extra_points: Point) -> int:
    vals = [c for v in curve.vertices for c in v]
    for p in extra_points:
        vals.extend(p)
    return common_denominator(vals)
