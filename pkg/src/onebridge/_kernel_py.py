"""Pure-Python integer geometry kernel.

All inputs are scaled integers: coordinates live on a grid with S units per
torus period.  The compiled twin (_kernel_c) implements the same three
functions with the same semantics; onebridge.kernel picks one at import.

Conventions shared by both backends:
  * A polyline is given by vertex arrays xs, ys (length N+1, unrolled,
    axis-aligned, alternating horizontal/vertical segments).  For closed
    curves on the torus the last vertex equals the first plus an integer
    multiple of S in each coordinate.
  * polyline_selfcheck verifies the projection mod S is an embedded closed
    curve: no transverse self-crossings and no touching, except each pair of
    consecutive segments meeting at exactly its one shared corner.
  * Polygons passed to the point counters are closed in the plane
    (last vertex == first) and are NOT reduced mod S.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import List, Optional, Sequence, Tuple

BACKEND = "python"


def _segments(xs: Sequence[int], ys: Sequence[int]):
    """Yield (kind, fixed, lo, hi, index); kind 'h' or 'v'; lo <= hi."""
    n = len(xs) - 1
    for i in range(n):
        x0, y0, x1, y1 = xs[i], ys[i], xs[i + 1], ys[i + 1]
        if y0 == y1 and x0 != x1:
            yield ("h", y0, min(x0, x1), max(x0, x1), i)
        elif x0 == x1 and y0 != y1:
            yield ("v", x0, min(y0, y1), max(y0, y1), i)
        elif x0 == x1 and y0 == y1:
            raise ValueError(f"zero-length segment at index {i}")
        else:
            raise ValueError(f"diagonal segment at index {i}")


def _mod_intervals_touch(a0: int, la: int, b0: int, lb: int, S: int) -> bool:
    """Do [a0, a0+la] and [b0+kS, b0+kS+lb] intersect for some integer k?"""
    if la >= S or lb >= S:
        return True
    d = (b0 - a0) % S
    return d <= la or d >= S - lb


def polyline_selfcheck(xs: Sequence[int], ys: Sequence[int], S: int) -> Optional[str]:
    """None if the mod-S projection is embedded; else a diagnostic string."""
    n = len(xs) - 1
    if n < 4:
        return "polyline needs at least 4 segments"
    segs = list(_segments(xs, ys))
    kinds = [s[0] for s in segs]
    for i in range(n):
        if kinds[i] == kinds[(i + 1) % n]:
            return f"segments {i},{(i + 1) % n} do not alternate"
    for _, _, lo, hi, i in segs:
        if hi - lo >= S:
            return f"segment {i} spans a full period"

    hsegs = [s for s in segs if s[0] == "h"]
    vsegs = [s for s in segs if s[0] == "v"]

    # horizontal-horizontal: same row mod S must never share a column
    by_row = {}
    for _, y, lo, hi, i in hsegs:
        by_row.setdefault(y % S, []).append((y, lo, hi, i))
    for row in by_row.values():
        for a in range(len(row)):
            for b in range(a + 1, len(row)):
                _, lo1, hi1, i1 = row[a]
                _, lo2, hi2, i2 = row[b]
                if _mod_intervals_touch(lo1, hi1 - lo1, lo2, hi2 - lo2, S):
                    return f"horizontal segments {i1},{i2} overlap mod {S}"

    # vertical-vertical
    by_col = {}
    for _, x, lo, hi, i in vsegs:
        by_col.setdefault(x % S, []).append((x, lo, hi, i))
    for col in by_col.values():
        for a in range(len(col)):
            for b in range(a + 1, len(col)):
                _, lo1, hi1, i1 = col[a]
                _, lo2, hi2, i2 = col[b]
                if _mod_intervals_touch(lo1, hi1 - lo1, lo2, hi2 - lo2, S):
                    return f"vertical segments {i1},{i2} overlap mod {S}"

    # horizontal-vertical: enumerate every contact mod S and classify it
    cols_sorted = sorted(set(x % S for _, x, _, _, _ in vsegs))
    col_map = {}
    for _, x, lo, hi, i in vsegs:
        col_map.setdefault(x % S, []).append((x, lo, hi, i))

    for _, hy, hlo, hhi, hi_idx in hsegs:
        length = hhi - hlo
        if length >= S:
            cand_cols = cols_sorted
        else:
            a, b = hlo % S, hhi % S
            if a <= b:
                cand_cols = cols_sorted[bisect_left(cols_sorted, a) : bisect_right(cols_sorted, b)]
            else:
                cand_cols = cols_sorted[bisect_left(cols_sorted, a) :] + cols_sorted[: bisect_right(cols_sorted, b)]
        for c in cand_cols:
            for vx, vlo, vhi, vi_idx in col_map[c]:
                adjacent = abs(hi_idx - vi_idx) == 1 or abs(hi_idx - vi_idx) == n - 1
                touches = 0
                # columns of the V segment inside the H span
                amin = -((hlo - vx) // -S)  # ceil((hlo - vx)/S)
                amax = (hhi - vx) // S
                for a in range(amin, amax + 1):
                    px = vx + a * S
                    x_interior = hlo < px < hhi
                    bmin = -((vlo - hy) // -S)
                    bmax = (vhi - hy) // S
                    for b in range(bmin, bmax + 1):
                        py = hy + b * S
                        y_interior = vlo < py < vhi
                        if x_interior and y_interior:
                            return f"segments {hi_idx},{vi_idx} cross mod {S}"
                        # an endpoint touch
                        touches += 1
                        if touches > (1 if adjacent else 0):
                            return f"segments {hi_idx},{vi_idx} touch mod {S}"
                        if adjacent and not (not x_interior and not y_interior):
                            return f"adjacent segments {hi_idx},{vi_idx} touch away from corner"
    return None


def point_in_polygon(xs: Sequence[int], ys: Sequence[int], px: int, py: int) -> int:
    """Even-odd test for a closed rectilinear polygon. 1 in, 0 out, -1 boundary.

    Crossing parity uses the half-open convention (count a vertical edge iff
    exactly one endpoint lies strictly above the ray), which is exact on
    integer inputs and needs no perturbation.
    """
    n = len(xs) - 1
    inside = 0
    for i in range(n):
        x0, y0, x1, y1 = xs[i], ys[i], xs[i + 1], ys[i + 1]
        if y0 == y1:
            if py == y0 and min(x0, x1) <= px <= max(x0, x1):
                return -1
        else:
            lo, hi = (y0, y1) if y0 < y1 else (y1, y0)
            if x0 == px and lo <= py <= hi:
                return -1
            if x0 > px and (y0 > py) != (y1 > py):
                inside ^= 1
    return inside


def winding_number(xs: Sequence[int], ys: Sequence[int], px: int, py: int) -> int:
    """Winding number of a closed rectilinear loop around an off-loop point.

    Signed crossings of the rightward ray from the point: vertical edges
    count +1 upward and -1 downward, half-open at their upper end so each
    corner contributes exactly once.  Raises ValueError on the boundary.
    """
    n = len(xs) - 1
    wind = 0
    for i in range(n):
        x0, y0, x1, y1 = xs[i], ys[i], xs[i + 1], ys[i + 1]
        if y0 == y1:
            if py == y0 and min(x0, x1) <= px <= max(x0, x1):
                raise ValueError("winding query point on loop boundary")
        else:
            lo, hi = (y0, y1) if y0 < y1 else (y1, y0)
            if x0 == px and lo <= py <= hi:
                raise ValueError("winding query point on loop boundary")
            if x0 > px:
                if y0 <= py < y1:
                    wind += 1
                elif y1 <= py < y0:
                    wind -= 1
    return wind


def lattice_winding_sum(
    xs: Sequence[int], ys: Sequence[int], px: int, py: int, S: int
) -> int:
    """Sum of loop winding numbers over all lattice translates of a point."""
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    total = 0
    a_lo = -((minx - px) // -S)
    a_hi = (maxx - px) // S
    b_lo = -((miny - py) // -S)
    b_hi = (maxy - py) // S
    for a in range(a_lo, a_hi + 1):
        qx = px + a * S
        if qx <= minx or qx >= maxx:
            continue
        for b in range(b_lo, b_hi + 1):
            qy = py + b * S
            if qy <= miny or qy >= maxy:
                continue
            total += winding_number(xs, ys, qx, qy)
    return total


def count_lattice_translates_inside(
    xs: Sequence[int], ys: Sequence[int], px: int, py: int, S: int
) -> int:
    """Count lattice translates (px + aS, py + bS) strictly inside the polygon."""
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    count = 0
    a_lo = -((minx - px) // -S)  # ceil((minx - px)/S)
    a_hi = (maxx - px) // S
    b_lo = -((miny - py) // -S)
    b_hi = (maxy - py) // S
    for a in range(a_lo, a_hi + 1):
        qx = px + a * S
        if qx <= minx or qx >= maxx:
            continue
        for b in range(b_lo, b_hi + 1):
            qy = py + b * S
            if qy <= miny or qy >= maxy:
                continue
            side = point_in_polygon(xs, ys, qx, qy)
            if side == -1:
                raise ValueError("lattice translate on polygon boundary")
            count += side
    return count
