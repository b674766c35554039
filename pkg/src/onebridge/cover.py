"""Bigons between attaching-curve crossings, counted in the universal cover.

The horizontal curve lifts to the integer-height lines of the plane and the
vertical curve lifts to one embedded polyline that climbs a single meridian
per period.  Crossings of the polyline with the lines, taken over one
period, are the intersection points of the two curves on the torus.

A bigon between two crossings is a Jordan region bounded by the polyline
arc joining lifts of the crossings and the chord between them on a shared
line, convex at both ends.  Because the polyline climbs exactly one unit
per period, the lift of the second crossing is forced: the height offset
between the two crossings names the period translate.  Each bigon records
how many translates of the two base points it encloses; those counts drive
every grading in the chain module.

Two crossings in distinct components of the bigon graph are compared via a
connecting domain instead: the chain bounded by the polyline arc and a
chord, with region multiplicities given by winding numbers.  Its index is
the Euler measure of the weighted regions plus the average corner
multiplicity at the two ends.  The index of a bigon is 1 and the index of
the full torus is 2; both are pinned in tests.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import kernel
from .diagram import GenusOneDiagram, alpha_events
from .errors import InvariantError
from .geom import common_denominator

F = Fraction
Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class LiftEvent:
    """One crossing of the lifted polyline with an integer-height line."""

    index: int
    height: int
    x: Fraction
    sign: int


@dataclass(frozen=True)
class LiftedAlpha:
    events: Tuple[LiftEvent, ...]
    period: Tuple[int, int]


@dataclass(frozen=True)
class Bigon:
    source: int
    target: int
    n_z: int
    n_w: int
    side: str


@dataclass(frozen=True)
class DomainVector:
    """A connecting chain between two crossings, reduced mod the torus.

    n_z and n_w are the signed counts of base point translates, maslov the
    index of the chain.  Grading differences read off a DomainVector are
    invariant under adding copies of the full torus, which shifts n_z and
    n_w by 1 each and maslov by 2; the stored form has n_w zero.
    """

    n_z: int
    n_w: int
    maslov: int


def lift_alpha(diagram: GenusOneDiagram) -> LiftedAlpha:
    alpha = diagram.alpha
    if tuple(alpha.closure) != (0, 1):
        raise InvariantError("lift expects a curve climbing one meridian per period")
    events = tuple(
        LiftEvent(index=i, height=h, x=x, sign=s)
        for i, (_, x, h, s) in enumerate(alpha_events(alpha))
    )
    if not events:
        raise InvariantError("attaching curves do not intersect")
    return LiftedAlpha(events=events, period=(0, 1))


def _unrolled_arc(
    verts: Sequence[Point],
    ev_i: Tuple[int, Fraction, int, int],
    ev_j: Tuple[int, Fraction, int, int],
    t: int,
) -> List[Point]:
    """Polyline from crossing i (period 0) forward to crossing j (period t)."""
    nseg = len(verts) - 1
    si, xi, hi, _ = ev_i
    sj, xj, _, _ = ev_j
    arc: List[Point] = [(xi, F(hi))]
    for g in range(si + 1, sj + t * nseg + 1):
        q, rem = divmod(g, nseg)
        vx, vy = verts[rem]
        arc.append((vx, vy + q))
    arc.append((xj, F(hi)))
    return arc


def enumerate_bigons(diagram: GenusOneDiagram) -> List[Bigon]:
    """All bigons of the diagram, one representative per period class.

    Convexity forces the two corner crossings to pass the shared line in
    opposite directions, and the region lies above the chord exactly when
    the arc leaves its first corner upward.  The source corner sits at the
    west end of the chord for a region above it and at the east end for a
    region below; the anchor tests pin this orientation against the
    staircase of the positive trefoil.
    """
    alpha = diagram.alpha
    verts = list(alpha.vertices)
    if tuple(alpha.closure) != (0, 1):
        raise InvariantError("bigon search expects a one-meridian climbing curve")
    evs = alpha_events(alpha)
    m = len(evs)
    den = common_denominator(
        [c for v in verts for c in v] + list(diagram.z) + list(diagram.w)
    )
    zx, zy = (int(c * den) for c in diagram.z)
    wx, wy = (int(c * den) for c in diagram.w)
    out: List[Bigon] = []
    for i in range(m):
        si, xi, hi, sgi = evs[i]
        for j in range(m):
            sj, xj, hj, sgj = evs[j]
            t = hi - hj
            if t < 0 or (t == 0 and j <= i):
                continue
            if sgj != -sgi:
                continue
            lo, hi_x = (xi, xj) if xi < xj else (xj, xi)
            blocked = False
            for jg in range(m):
                _, xg, hg, _ = evs[jg]
                tg = hi - hg
                if (tg, jg) <= (0, i) or (tg, jg) >= (t, j):
                    continue
                if lo < xg < hi_x:
                    blocked = True
                    break
            if blocked:
                continue
            arc = _unrolled_arc(verts, evs[i], evs[j], t)
            xs = [int(px * den) for px, _ in arc]
            ys = [int(py * den) for _, py in arc]
            n_z = kernel.count_lattice_translates_inside(xs, ys, zx, zy, den)
            n_w = kernel.count_lattice_translates_inside(xs, ys, wx, wy, den)
            side = "above" if sgi > 0 else "below"
            if side == "above":
                src, tgt = (i, j) if xi < xj else (j, i)
            else:
                src, tgt = (i, j) if xi > xj else (j, i)
            out.append(Bigon(source=src, target=tgt, n_z=n_z, n_w=n_w, side=side))
    return out


def periodic_domain() -> DomainVector:
    """The class of the full torus."""
    return DomainVector(n_z=1, n_w=1, maslov=2)


def _frac(v: Fraction) -> Fraction:
    return v - (v.numerator // v.denominator)


def _has_int_strict(u: Fraction, v: Fraction) -> bool:
    k = v.numerator // v.denominator
    if F(k) == v:
        k -= 1
    return F(k) > u


class _Regions:
    """Complement regions of the two curves in the fundamental square.

    The square is cut by all curve columns and rows into a rectangular grid
    whose cells are merged by flood fill across grid edges not covered by a
    curve.  Every complement region is a disk and the region count equals
    the crossing number.
    """

    def __init__(self, diagram: GenusOneDiagram):
        verts = list(diagram.alpha.vertices)
        xcuts = sorted({_frac(v[0]) for v in verts})
        ycuts = sorted({_frac(v[1]) for v in verts} | {F(0)})
        self.xcuts = xcuts
        self.ycuts = ycuts
        nx, ny = len(xcuts), len(ycuts)
        self.nx, self.ny = nx, ny
        self.xmids = [
            (xcuts[i] + (xcuts[i + 1] if i + 1 < nx else xcuts[0] + 1)) / 2
            for i in range(nx)
        ]
        self.ymids = [
            (ycuts[i] + (ycuts[i + 1] if i + 1 < ny else ycuts[0] + 1)) / 2
            for i in range(ny)
        ]

        vseg: Dict[Fraction, List[Tuple[Fraction, Fraction]]] = {}
        hseg: Dict[Fraction, List[Tuple[Fraction, Fraction]]] = {}
        for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
            if x0 == x1:
                lo, hi = sorted((y0, y1))
                vseg.setdefault(_frac(x0), []).append((lo, hi))
            else:
                lo, hi = sorted((x0, x1))
                hseg.setdefault(_frac(y0), []).append((lo, hi))

        def _covered(spans: List[Tuple[Fraction, Fraction]], a: Fraction) -> bool:
            # a is taken mod 1, spans are raw; shift by any whole period
            return any(_has_int_strict(lo - a, hi - a) for lo, hi in spans)

        # wall_e[i][j]: curve between cell (i, j) and its east neighbour;
        # wall_n: between (i, j) and its north neighbour
        wall_e = [[False] * ny for _ in range(nx)]
        wall_n = [[False] * ny for _ in range(nx)]
        for i in range(nx):
            spans = vseg.get(xcuts[(i + 1) % nx], [])
            for j in range(ny):
                if _covered(spans, self.ymids[j]):
                    wall_e[i][j] = True
        for j in range(ny):
            ycut = ycuts[(j + 1) % ny]
            if ycut == 0:
                for i in range(nx):
                    wall_n[i][j] = True
                continue
            spans = hseg.get(ycut, [])
            for i in range(nx):
                if _covered(spans, self.xmids[i]):
                    wall_n[i][j] = True

        label = [[-1] * ny for _ in range(nx)]
        nreg = 0
        for i0 in range(nx):
            for j0 in range(ny):
                if label[i0][j0] >= 0:
                    continue
                stack = [(i0, j0)]
                label[i0][j0] = nreg
                while stack:
                    ci, cj = stack.pop()
                    sides = (
                        ((ci + 1) % nx, cj, wall_e[ci][cj]),
                        ((ci - 1) % nx, cj, wall_e[(ci - 1) % nx][cj]),
                        (ci, (cj + 1) % ny, wall_n[ci][cj]),
                        (ci, (cj - 1) % ny, wall_n[ci][(cj - 1) % ny]),
                    )
                    for ti, tj, walled in sides:
                        if not walled and label[ti][tj] < 0:
                            label[ti][tj] = nreg
                            stack.append((ti, tj))
                nreg += 1
        self.label = label
        self.count = nreg

    def locate(self, p: Point) -> int:
        """Region containing p, which must avoid both curves."""
        i = bisect.bisect_right(self.xcuts, _frac(p[0])) - 1
        j = bisect.bisect_right(self.ycuts, _frac(p[1])) - 1
        return self.label[i][j]

    def samples(self) -> List[Point]:
        pts: List[Point] = [(F(0), F(0))] * self.count
        seen = [False] * self.count
        for i in range(self.nx):
            for j in range(self.ny):
                r = self.label[i][j]
                if not seen[r]:
                    seen[r] = True
                    pts[r] = (self.xmids[i], self.ymids[j])
        return pts

    def quadrant_step(self) -> Fraction:
        gaps = []
        for cuts in (self.xcuts, self.ycuts):
            gaps.extend(b - a for a, b in zip(cuts, cuts[1:]))
            gaps.append(cuts[0] + 1 - cuts[-1])
        return min(gaps) / 4


def connecting_domain(
    diagram: GenusOneDiagram, source: int, target: int
) -> DomainVector:
    """A chain joining two crossings, reduced mod the full torus.

    The chain's boundary runs along the polyline from a lift of the source
    crossing to the forced lift of the target, then back along the shared
    line.  Region multiplicities are winding numbers, so they may be
    negative; grading differences do not care.  The result is negated so
    that its grading differences agree with the arrow orientation of
    enumerate_bigons: for a bigon from x to y, the domain from x to y has
    n_z - n_w equal to the bigon's n_z - n_w and index 1 - 2 n_w.
    """
    alpha = diagram.alpha
    verts = list(alpha.vertices)
    evs = alpha_events(alpha)
    m = len(evs)
    if not (0 <= source < m and 0 <= target < m):
        raise InvariantError("crossing index out of range")
    if source == target:
        return DomainVector(n_z=0, n_w=0, maslov=0)
    _, xi, hi, _ = evs[source]
    _, xj, hj, _ = evs[target]
    t = hi - hj
    if t < 0 or (t == 0 and target < source):
        back = connecting_domain(diagram, target, source)
        return DomainVector(n_z=-back.n_z, n_w=0, maslov=-back.maslov)
    loop = _unrolled_arc(verts, evs[source], evs[target], t)

    regions = _Regions(diagram)
    samples = regions.samples()
    den = common_denominator(
        [c for v in verts for c in v]
        + list(diagram.z)
        + list(diagram.w)
        + [c for p in samples for c in p]
    )
    xs = [int(px * den) for px, _ in loop]
    ys = [int(py * den) for _, py in loop]
    winds = [
        kernel.lattice_winding_sum(xs, ys, int(px * den), int(py * den), den)
        for px, py in samples
    ]

    # Every region is a disk: its Euler measure is 1 minus a quarter per
    # corner.  Quadrant multiplicities at the two chain ends supply the
    # corner-average terms of the index.
    euler4 = 4 * sum(winds)
    quad_sums: List[int] = []
    eps = regions.quadrant_step()
    for _, ex, eh, _ in evs:
        total = 0
        for dx in (-eps, eps):
            for dy in (-eps, eps):
                total += winds[regions.locate((ex + dx, F(eh) + dy))]
        euler4 -= total
        quad_sums.append(total)
    maslov4 = euler4 + quad_sums[source] + quad_sums[target]
    if maslov4 % 4 != 0:
        raise InvariantError("connecting chain index is not an integer")
    maslov = maslov4 // 4

    n_z = kernel.lattice_winding_sum(
        xs, ys, int(diagram.z[0] * den), int(diagram.z[1] * den), den
    )
    n_w = kernel.lattice_winding_sum(
        xs, ys, int(diagram.w[0] * den), int(diagram.w[1] * den), den
    )
    return DomainVector(n_z=-(n_z - n_w), n_w=0, maslov=-(maslov - 2 * n_w))


def maslov_index(domain: DomainVector) -> int:
    """Index of a stored domain; bigons give 1 and the full torus 2."""
    return domain.maslov
