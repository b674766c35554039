"""Winding construction of genus-one doubly-pointed diagrams.

The torus is the unit square with opposite sides identified.  beta is the
horizontal circle at height 0 (its lifts are the integer-height lines) and
alpha starts as a vertical circle, the trunk.  A winding move drags alpha by
a finger move: the base point travels once around a longitude while climbing
a prescribed number of meridians, and every alpha strand the path crosses is
cut and rerouted as a thin U that follows the remainder of the path on both
sides and closes around the base point.  Strands crossed earlier ride at
smaller offsets, so the detours nest and the result is embedded by
construction; an exact kernel check verifies that after every move.

The meridian climb happens in a narrow column band placed hard against the
other base point's column, with nothing else in between.  Which side the
band sits on decides the move's twisting sense: climbing after passing the
other point traps it inside the returning detours, climbing before reaching
it leaves a removable pair instead.  Each base point climbs toward the
other one, z upward and w downward.

Coordinates are exact rationals.  Base points keep denominator 3 in both
coordinates while every offset is dyadic, so a base-point lattice translate
can never lie on the curve and interior counts are unambiguous.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import kernel
from .errors import InvariantError, ParameterError
from .geom import (
    PlanarCurve,
    Point,
    common_denominator,
    curve_denominator,
    scale_curve,
    scale_point,
)
from .params import TwistedTorusParams

log = logging.getLogger(__name__)

F = Fraction

# Fixed placement of the initial picture.  The trunk is the vertical circle
# alpha starts as; the base points sit in the single complementary region.
TRUNK_X = F(1, 2)
TRUNK_Y = F(1, 4)
Z_HOME: Point = (F(1, 3), F(1, 3))
W_HOME: Point = (F(2, 3), F(2, 3))

#: longitude travel of each base point's windings: +1 east, -1 west
TRAVEL = {"z": 1, "w": -1}
#: meridian climb of each base point, toward the other one: +1 up, -1 down
CLIMB = {"z": 1, "w": -1}

_DIRECTIONS = {"ccw": 1, "cw": -1}

#: smallest denominator exponent used for fresh dyadic offsets
MIN_EXPONENT = 4


def _v2(x: Fraction) -> int:
    """2-adic valuation of the denominator."""
    d = x.denominator
    return (d & -d).bit_length() - 1


def _fresh_exponent(values: Iterable[Fraction], floor: int = MIN_EXPONENT) -> int:
    j = floor
    for v in values:
        j = max(j, _v2(v) + 1)
    return j + 2


def _dyadic_at(x: Fraction, j: int) -> Fraction:
    """A dyadic with denominator exactly 2**j within 2**(1-j) of x."""
    half = F(1, 1 << (j - 1))
    k = (x / half).__floor__()
    return (2 * k + 1) * F(1, 1 << j)


def _frac_part(x: Fraction) -> Fraction:
    return x - x.__floor__()


def _min_gap(values: Iterable[Fraction]) -> Fraction:
    """Smallest positive circular gap between distinct fractional parts."""
    vals = sorted(set(_frac_part(v) for v in values))
    if len(vals) < 2:
        return F(1, 2)
    best = vals[0] + 1 - vals[-1]
    for a, b in zip(vals, vals[1:]):
        if b - a < best:
            best = b - a
    return best


@dataclass(frozen=True)
class GenusOneDiagram:
    """alpha plus the two base points; beta is implicit (height-0 circle)."""

    alpha: PlanarCurve
    z: Point
    w: Point

    def validate(self) -> None:
        curve = self.alpha
        for x, y in curve.vertices:
            if y.denominator == 1:
                raise InvariantError(f"alpha vertex at integer height {y}")
        _, b = curve.closure
        if abs(b) != 1:
            raise InvariantError(
                f"alpha closure {curve.closure} does not cross beta once algebraically"
            )
        for pt, name in ((self.z, "z"), (self.w, "w")):
            if pt[1].denominator == 1:
                raise InvariantError(f"{name} lies at integer height")
            if _point_on_curve(curve, pt):
                raise InvariantError(f"{name} lies on alpha")
        if not curve.is_circle:
            den = curve_denominator(curve)
            xs, ys = scale_curve(curve, den)
            diag = kernel.polyline_selfcheck(xs, ys, den)
            if diag is not None:
                raise InvariantError(f"alpha is not embedded: {diag}")
        if self.crossings() < 1:
            raise InvariantError("alpha misses beta")

    def crossings(self) -> int:
        return len(alpha_events(self.alpha))


def _point_on_curve(curve: PlanarCurve, pt: Point) -> bool:
    """Whether any lattice translate of pt lies on the curve."""
    px, py = _frac_part(pt[0]), _frac_part(pt[1])
    for (x0, y0), (x1, y1) in curve.segments():
        if y0 == y1:
            if _frac_part(y0) != py:
                continue
            lo, hi = min(x0, x1), max(x0, x1)
            if lo <= px + (lo - px).__ceil__() <= hi:
                return True
        else:
            if _frac_part(x0) != px:
                continue
            lo, hi = min(y0, y1), max(y0, y1)
            if lo <= py + (lo - py).__ceil__() <= hi:
                return True
    return False


@dataclass(frozen=True)
class DiagramState:
    diagram: GenusOneDiagram
    log: Tuple[str, ...]


Event = Tuple[int, Fraction, int, int]
"""(segment index, x position, line height, +1 upward / -1 downward)."""


def alpha_events(alpha: PlanarCurve) -> List[Event]:
    """Crossings of one alpha period with integer-height lines, in order."""
    events: List[Event] = []
    for i, ((x0, y0), (x1, y1)) in enumerate(alpha.segments()):
        if x0 != x1:
            continue
        if y1 > y0:
            h = y0.__floor__() + 1
            while h < y1:
                events.append((i, x0, h, 1))
                h += 1
        else:
            h = y0.__ceil__() - 1
            while h > y1:
                events.append((i, x0, h, -1))
                h -= 1
    return events


# ---------------------------------------------------------------------------
# winding paths


def _winding_path(
    b: Point,
    other: Point,
    travel: int,
    climb: int,
    meridians: int,
    pass_side: str,
    j: int,
    obstructions: Iterable[Fraction],
) -> List[Point]:
    """Open rectilinear path from b once around the longitude.

    Returns vertices from b to b + (travel, climb * meridians).  The climb
    happens in narrow column bands hugging the other base point's column.
    For pass_side 'left' every meridian is climbed past that column; for
    'right' exactly one meridian is climbed before reaching it and the rest
    past it, which shifts the path one level among the column's lattice
    translates and is what makes the opposite twisting sense.  Each band
    plus an 8-step standoff must have nothing between it and the column,
    so the step shrinks until both spans are clear.
    """
    bx, by = b
    ox = other[0]
    n = meridians
    if n == 0:
        return [b, (bx + travel, by)]
    if pass_side not in ("left", "right"):
        raise ParameterError(f"pass_side must be 'left' or 'right', got {pass_side!r}")
    t_near = 0 if pass_side == "left" else 1
    n_far = n - t_near

    blockers = list(obstructions) + [bx]

    def _clear(east: bool) -> Fraction:
        best = F(1)
        for v in blockers:
            delta = _frac_part(v - ox) if east else _frac_part(ox - v)
            if delta > 0:
                best = min(best, delta)
        return best

    far_east = travel > 0
    clear_near = _clear(not far_east)
    clear_far = _clear(far_east)
    while (t_near and (4 * t_near + 12) * F(1, 1 << j) >= clear_near) or (
        n_far and (4 * n_far + 12) * F(1, 1 << j) >= clear_far
    ):
        j += 1
    step = F(1, 1 << j)

    anchor = _dyadic_at(_frac_part(ox), j)
    if travel > 0 and anchor <= bx:
        anchor += 1
    if travel < 0 and anchor >= bx:
        anchor -= 1
    w_near = (4 * t_near + 2) * step
    w_far = (4 * n_far + 2) * step
    if travel > 0:
        near_cols = [
            anchor - 8 * step - w_near + (t + 1) * 2 * step for t in range(2 * t_near)
        ]
        far_cols = [anchor + 8 * step + (t + 1) * 2 * step for t in range(2 * n_far)]
    else:
        near_cols = [
            anchor + 8 * step + w_near - (t + 1) * 2 * step for t in range(2 * t_near)
        ]
        far_cols = [anchor - 8 * step - (t + 1) * 2 * step for t in range(2 * n_far)]
    cols = near_cols + far_cols
    lo, hi = min(bx, bx + travel), max(bx, bx + travel)
    if not all(lo < c < hi for c in cols):
        raise InvariantError("climb bands do not fit inside one longitude")

    rise = F(climb, 2)
    pts: List[Point] = [b]
    y = by
    for c in cols:
        pts.append((c, y))
        y = y + rise
        pts.append((c, y))
    pts.append((bx + travel, y))
    return pts


# ---------------------------------------------------------------------------
# the finger move


@dataclass
class _Crossing:
    seg_alpha: int
    point: Point            # crossing location in alpha's unrolled frame
    tau: Fraction           # arclength along the path at the foot
    foot_seg: int           # path segment index
    shift: Tuple[int, int]  # path + shift passes through point
    side: int               # +1 when the strand arrives from the path's left


def _seg_dir(a: Point, b: Point) -> Tuple[int, int]:
    if a[1] == b[1]:
        return (1 if b[0] > a[0] else -1, 0)
    return (0, 1 if b[1] > a[1] else -1)


def _left_normal(d: Tuple[int, int]) -> Tuple[int, int]:
    return (-d[1], d[0])


def _int_range(lo: Fraction, hi: Fraction) -> range:
    """Integers strictly inside the open interval (lo, hi)."""
    return range(lo.__floor__() + 1, hi.__ceil__())


def _path_crossings(alpha: PlanarCurve, path: Sequence[Point]) -> List[_Crossing]:
    out: List[_Crossing] = []
    pre = [F(0)]
    for i in range(len(path) - 1):
        (x0, y0), (x1, y1) = path[i], path[i + 1]
        pre.append(pre[-1] + abs(x1 - x0) + abs(y1 - y0))
    for ia, (a0, a1) in enumerate(alpha.segments()):
        d_str = _seg_dir(a0, a1)
        horizontal = d_str[1] == 0
        for ip in range(len(path) - 1):
            p0, p1 = path[ip], path[ip + 1]
            d_pth = _seg_dir(p0, p1)
            if (d_pth[1] == 0) == horizontal:
                continue
            nl = _left_normal(d_pth)
            side = -(d_str[0] * nl[0] + d_str[1] * nl[1])
            if horizontal:
                row = a0[1]
                ax0, ax1 = min(a0[0], a1[0]), max(a0[0], a1[0])
                col = p0[0]
                py0, py1 = min(p0[1], p1[1]), max(p0[1], p1[1])
                for a in _int_range(ax0 - col, ax1 - col):
                    for mb in _int_range(py0 - row, py1 - row):
                        pt = (col + a, row)
                        tau = pre[ip] + abs((row + mb) - p0[1])
                        out.append(_Crossing(ia, pt, tau, ip, (a, -mb), side))
            else:
                col = a0[0]
                ay0, ay1 = min(a0[1], a1[1]), max(a0[1], a1[1])
                row = p0[1]
                px0, px1 = min(p0[0], p1[0]), max(p0[0], p1[0])
                for bshift in _int_range(ay0 - row, ay1 - row):
                    for ma in _int_range(px0 - col, px1 - col):
                        pt = (col, row + bshift)
                        tau = pre[ip] + abs((col + ma) - p0[0])
                        out.append(_Crossing(ia, pt, tau, ip, (-ma, bshift), side))
    return out


def _miter(
    corner: Point,
    d_in: Tuple[int, int],
    d_out: Tuple[int, int],
    off: Fraction,
    shift: Tuple[int, int],
) -> Point:
    n_in = _left_normal(d_in)
    n_out = _left_normal(d_out)
    return (
        corner[0] + shift[0] + off * (n_in[0] + n_out[0]),
        corner[1] + shift[1] + off * (n_in[1] + n_out[1]),
    )


def _detour(
    path: Sequence[Point],
    c: _Crossing,
    lam: Fraction,
    d_strand: Tuple[int, int],
) -> List[Point]:
    """Vertices of the U replacing the cut strand chunk at crossing c.

    Starts at the inbound trim point and ends at the outbound one: a leg
    along the rest of the path at offset side*lam, a staple past the path
    end wrapping the base point, and the return leg at offset -side*lam.
    """
    s = c.side
    shift = c.shift
    dirs = [_seg_dir(path[i], path[i + 1]) for i in range(len(path) - 1)]
    fx, fy = c.point
    out: List[Point] = [(fx - lam * d_strand[0], fy - lam * d_strand[1])]
    for m in range(c.foot_seg + 1, len(path) - 1):
        out.append(_miter(path[m], dirs[m - 1], dirs[m], s * lam, shift))
    ex, ey = path[-1][0] + shift[0], path[-1][1] + shift[1]
    d_f = dirs[-1]
    n_f = _left_normal(d_f)
    out.append((ex + s * lam * n_f[0], ey + s * lam * n_f[1]))
    out.append(
        (ex + s * lam * n_f[0] + lam * d_f[0], ey + s * lam * n_f[1] + lam * d_f[1])
    )
    out.append(
        (ex - s * lam * n_f[0] + lam * d_f[0], ey - s * lam * n_f[1] + lam * d_f[1])
    )
    out.append((ex - s * lam * n_f[0], ey - s * lam * n_f[1]))
    for m in range(len(path) - 2, c.foot_seg, -1):
        out.append(_miter(path[m], dirs[m - 1], dirs[m], -s * lam, shift))
    out.append((fx + lam * d_strand[0], fy + lam * d_strand[1]))
    return out


def _apply_push(
    alpha: PlanarCurve, path: Sequence[Point], z: Point, w: Point
) -> PlanarCurve:
    crossings = _path_crossings(alpha, path)
    if not crossings:
        return alpha
    crossings.sort(key=lambda c: c.tau)

    coords_x: List[Fraction] = [F(0)]
    coords_y: List[Fraction] = [F(0)]
    for x, y in list(alpha.vertices) + list(path) + [z, w]:
        coords_x.append(x)
        coords_y.append(y)
    g = min(_min_gap(coords_x), _min_gap(coords_y))
    j = _fresh_exponent(coords_x + coords_y)
    amax = F(1, 1 << j)
    while amax * 8 > g:
        amax = amax / 2
    n = len(crossings)
    gap_lam = amax / (1 << (n + 1).bit_length())
    lam_of = {id(c): (rank + 1) * gap_lam for rank, c in enumerate(crossings)}

    by_seg: Dict[int, List[_Crossing]] = {}
    for c in crossings:
        by_seg.setdefault(c.seg_alpha, []).append(c)

    verts = list(alpha.vertices)
    out: List[Point] = []
    for i in range(len(verts) - 1):
        v0 = verts[i]
        out.append(v0)
        if i not in by_seg:
            continue
        d = _seg_dir(v0, verts[i + 1])
        cs = by_seg[i]
        cs.sort(
            key=lambda c: (c.point[0] - v0[0]) * d[0] + (c.point[1] - v0[1]) * d[1]
        )
        for c in cs:
            out.extend(_detour(path, c, lam_of[id(c)], d))
    out.append(verts[-1])
    return PlanarCurve.make(out)


# ---------------------------------------------------------------------------
# public operations


def initial_state(params: TwistedTorusParams) -> DiagramState:
    trunk = PlanarCurve.make([(TRUNK_X, TRUNK_Y), (TRUNK_X, TRUNK_Y + 1)])
    diagram = GenusOneDiagram(alpha=trunk, z=Z_HOME, w=W_HOME)
    diagram.validate()
    return DiagramState(diagram, (f"init {params.label()}",))


def wind_base_point(
    state: DiagramState,
    which: str,
    direction: str,
    meridian_count: int,
    pass_side: str = "left",
    seed_denominator: int = MIN_EXPONENT,
) -> DiagramState:
    """Drag alpha by pushing one base point once around the longitude.

    Every offset is chosen exactly, with clearances computed from the
    current coordinate set, so the move cannot produce a collision; the
    embeddedness check after the push is a verification, not a retry loop.
    Raising seed_denominator only shrinks the corridor widths and must not
    change any count derived from the result.
    """
    if which not in ("z", "w"):
        raise ParameterError(f"base point must be 'z' or 'w', got {which!r}")
    if direction not in _DIRECTIONS:
        raise ParameterError(f"direction must be 'ccw' or 'cw', got {direction!r}")
    if meridian_count < 0:
        raise ParameterError("meridian_count must be >= 0")
    if seed_denominator < MIN_EXPONENT:
        raise ParameterError(f"seed_denominator must be >= {MIN_EXPONENT}")
    diagram = state.diagram
    b, other = (diagram.z, diagram.w) if which == "z" else (diagram.w, diagram.z)
    travel = _DIRECTIONS[direction]
    coords = [c for v in diagram.alpha.vertices for c in v]
    j = _fresh_exponent(coords, floor=seed_denominator)
    path = _winding_path(
        b,
        other,
        travel,
        CLIMB[which],
        meridian_count,
        pass_side,
        j,
        [v[0] for v in diagram.alpha.vertices],
    )
    alpha = _apply_push(diagram.alpha, path, diagram.z, diagram.w)
    new = GenusOneDiagram(alpha=alpha, z=diagram.z, w=diagram.w)
    new.validate()
    entry = f"wind {which} {direction} meridians={meridian_count} pass={pass_side}"
    return DiagramState(new, state.log + (entry,))


def schedule(params: TwistedTorusParams) -> List[Tuple[str, int]]:
    """Winding moves (base point, meridian count) in order."""
    s, r = params.s, params.r
    if r == 0 or s == 1:
        s, r = 2, 0
    moves = [("z", params.k + r)]
    moves.extend(("w", params.k + r) for _ in range(s - 2))
    moves.extend(("w", params.k) for _ in range(params.p - s))
    return moves


def build_diagram(
    params: TwistedTorusParams, seed_denominator: int = MIN_EXPONENT
) -> GenusOneDiagram:
    pass_side = "left" if params.sign > 0 else "right"
    state = initial_state(params)
    for which, meridians in schedule(params):
        direction = "ccw" if TRAVEL[which] > 0 else "cw"
        state = wind_base_point(
            state, which, direction, meridians, pass_side, seed_denominator
        )
    reduced = reduce_diagram(state.diagram)
    reduced.validate()
    return reduced


# ---------------------------------------------------------------------------
# reduction to minimal position


def reduce_diagram(diagram: GenusOneDiagram) -> GenusOneDiagram:
    """Splice away empty bigons until alpha and beta are in minimal position.

    Intermediate diagrams are not revalidated; `build_diagram` checks the
    final one, which is the only one handed to callers.
    """
    current = diagram
    while True:
        spliced = _splice_one(current)
        if spliced is None:
            return current
        current = spliced


class _SpliceContext:
    """Scaled-integer view of a diagram, shared by the splice attempts of
    one reduction pass so the curve is converted only once."""

    def __init__(self, diagram: GenusOneDiagram):
        self.diagram = diagram
        self.events = alpha_events(diagram.alpha)
        self.verts = list(diagram.alpha.vertices)
        self.nseg = len(self.verts) - 1
        self.ax, self.ay = diagram.alpha.closure
        self.den = common_denominator(
            [c for v in self.verts for c in v] + list(diagram.z) + list(diagram.w)
        )
        self.vsx = [int(v[0] * self.den) for v in self.verts]
        self.vsy = [int(v[1] * self.den) for v in self.verts]
        self.iax = self.ax * self.den
        self.iay = self.ay * self.den
        self.sz = scale_point(diagram.z, self.den)
        self.sw = scale_point(diagram.w, self.den)

    def unrolled(self, t: int) -> Tuple[int, int]:
        if t <= self.nseg:
            return self.vsx[t], self.vsy[t]
        return self.vsx[t - self.nseg] + self.iax, self.vsy[t - self.nseg] + self.iay


def _splice_one(diagram: GenusOneDiagram) -> Optional[GenusOneDiagram]:
    ctx = _SpliceContext(diagram)
    events = ctx.events
    m = len(events)
    if m < 2:
        return None
    for idx in range(m):
        nxt = (idx + 1) % m
        h0 = events[idx][2]
        h1 = events[nxt][2] + (ctx.ay if nxt == 0 else 0)
        if h0 != h1:
            continue
        cand = _try_splice(ctx, idx)
        if cand is not None:
            return cand
    return None


def _chord_gap(verts: List[Point], lo: Fraction, hi: Fraction) -> Fraction:
    """Least distance from integer height to any curve level over the chord.

    Only segments whose column range meets the chord's column window (mod 1)
    matter: the rerouted chord stays inside that window, so levels elsewhere
    can never collide with it.
    """
    span = hi - lo
    best = F(1, 2)
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        if span < 1:
            u = _frac_part(min(x0, x1) - lo)
            if u > span and u + abs(x1 - x0) < 1:
                continue
        for y in (y0, y1):
            fy = _frac_part(y)
            d = min(fy, 1 - fy)
            if d < best:
                best = d
    return best


def _try_splice(ctx: _SpliceContext, idx: int) -> Optional[GenusOneDiagram]:
    """Splice the cap between consecutive events idx, idx+1 if its disk is empty."""
    diagram = ctx.diagram
    verts = ctx.verts
    nseg = ctx.nseg
    ax, ay = ctx.ax, ctx.ay
    den = ctx.den
    events = ctx.events
    m = len(events)
    nxt = (idx + 1) % m
    wrap = nxt == 0
    i0, x0, h0, s0 = events[idx]
    i1, x1, h1, s1 = events[nxt]
    if wrap:
        i1 += nseg
        x1 += ax
        h1 += ay
    if s0 != -s1:
        raise InvariantError("cap events do not bracket one excursion")
    h = h0
    lo, hi = min(x0, x1), max(x0, x1)

    # cap polygon in scaled integers: arc between the crossings plus the chord
    xs = [ctx.vsx[i0]]
    ys = [h * den]
    for t in range(i0 + 1, i1 + 1):
        px, py = ctx.unrolled(t)
        xs.append(px)
        ys.append(py)
    exit_x = ctx.unrolled(i1)[0]
    xs.append(exit_x)
    ys.append(h * den)
    xs.append(xs[0])
    ys.append(ys[0])

    # the disk must contain no base point translate, no other crossing on
    # the chord, and no alpha vertex translate
    for px, py in (ctx.sz, ctx.sw):
        if kernel.count_lattice_translates_inside(xs, ys, px, py, den) != 0:
            return None
    for _, xt, _, _ in events:
        if len(_int_range(lo - xt, hi - xt)) > 0:
            return None
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    for vi in range(nseg):
        px, py = ctx.vsx[vi], ctx.vsy[vi]
        for a in range(-((minx - px) // -den), (maxx - px) // den + 1):
            for b in range(-((miny - py) // -den), (maxy - py) // den + 1):
                if kernel.point_in_polygon(xs, ys, px + a * den, py + b * den) == 1:
                    return None

    # splice: reroute across the chord on the far side of the line, closer
    # to it than any curve level crossing the chord's column window
    above = ys[1] > h * den
    side = -1 if above else 1
    gap = _chord_gap(verts, lo, hi)
    j = MIN_EXPONENT
    while F(2, 1 << j) > gap:
        j += 1
    eta = F(1, 1 << j)
    ylvl = h + side * eta
    entry = (x0, ylvl)
    exitp = (x1, ylvl)
    if wrap:
        big = verts + [(vx + ax, vy + ay) for vx, vy in verts[1:]]
        new_verts = (
            [entry, exitp]
            + big[i1 + 1 : i0 + nseg + 1]
            + [(entry[0] + ax, entry[1] + ay)]
        )
    else:
        new_verts = verts[: i0 + 1] + [entry, exitp] + verts[i1 + 1 :]
    curve = PlanarCurve.make(new_verts)
    return GenusOneDiagram(alpha=curve, z=diagram.z, w=diagram.w)


# ---------------------------------------------------------------------------
# serialization


def serialize_diagram(diagram: GenusOneDiagram) -> str:
    lines = ["onebridge-diagram 1"]
    verts = diagram.alpha.vertices
    lines.append(f"alpha {len(verts)}")
    for x, y in verts:
        lines.append(f"{x} {y}")
    a, b = diagram.alpha.closure
    lines.append(f"closure {a} {b}")
    lines.append(f"z {diagram.z[0]} {diagram.z[1]}")
    lines.append(f"w {diagram.w[0]} {diagram.w[1]}")
    return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> GenusOneDiagram:
    rows = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not rows or rows[0].split() != ["onebridge-diagram", "1"]:
        raise ParameterError("unknown diagram format header")
    if len(rows) < 2 or not rows[1].startswith("alpha "):
        raise ParameterError("missing alpha section")
    count = int(rows[1].split()[1])
    if len(rows) < 2 + count + 3:
        raise ParameterError("truncated diagram text")
    verts: List[Point] = []
    for ln in rows[2 : 2 + count]:
        sx, sy = ln.split()
        verts.append((F(sx), F(sy)))
    tail: Dict[str, List[str]] = {}
    for ln in rows[2 + count :]:
        parts = ln.split()
        tail[parts[0]] = parts[1:]
    for key in ("closure", "z", "w"):
        if key not in tail:
            raise ParameterError(f"missing {key} line")
    curve = PlanarCurve.make(verts)
    if curve.closure != (int(tail["closure"][0]), int(tail["closure"][1])):
        raise ParameterError("closure line disagrees with vertex list")
    z = (F(tail["z"][0]), F(tail["z"][1]))
    w = (F(tail["w"][0]), F(tail["w"][1]))
    diagram = GenusOneDiagram(alpha=curve, z=z, w=w)
    diagram.validate()
    return diagram
