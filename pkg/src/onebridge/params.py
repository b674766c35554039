"""Twisted torus knot parameters and the braid-side oracles.

A twisted torus knot here is the closure of the positive braid

    (sigma_1 ... sigma_{p-1})^q  (sigma_1 ... sigma_{s-1})^(s*r)

on p strands, with q = k*p + sign restricted to the families q = kp+1 and
q = kp-1.  The two extra operations (`torus_alexander`, `satellite_alexander`)
are independent cross-checks used by the test suite, not by the diagram
pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .errors import ParameterError
from .laurent import LaurentPoly


@dataclass(frozen=True)
class TwistedTorusParams:
    p: int
    k: int
    sign: int
    s: int
    r: int

    @property
    def q(self) -> int:
        return self.k * self.p + self.sign

    def label(self) -> str:
        return f"K({self.p},{self.q};{self.s},{self.r})"


def make_params(p: int, k: int, sign: int, s: int, r: int) -> TwistedTorusParams:
    """Validate and freeze parameters.

    Bounds: p >= 2, k >= 1, sign in {+1, -1}, 0 < s < p, r >= 0, q >= 1.
    q = 1 (the unknot degeneration) and r = 0 / s = 1 (torus knots) are
    accepted; classification sweeps exclude some of them separately.
    """
    for name, val in (("p", p), ("k", k), ("sign", sign), ("s", s), ("r", r)):
        if not isinstance(val, int):
            raise ParameterError(f"{name} must be an int, got {val!r}")
    if p < 2:
        raise ParameterError(f"p must be >= 2, got {p}")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {sign}")
    if not (0 < s < p):
        raise ParameterError(f"s must satisfy 0 < s < p, got s={s}, p={p}")
    if r < 0:
        raise ParameterError(f"r must be >= 0, got {r}")
    q = k * p + sign
    if q < 1:
        raise ParameterError(f"q = k*p + sign must be >= 1, got {q}")
    if math.gcd(p, q) != 1:
        raise ParameterError(f"gcd(p, q) must be 1, got p={p}, q={q}")
    return TwistedTorusParams(p, k, sign, s, r)


@dataclass(frozen=True)
class BraidWord:
    """A positive braid word; letters are generator indices 1..n_strands-1."""

    n_strands: int
    word: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.word)


def braid_word(params: TwistedTorusParams) -> BraidWord:
    p, q, s, r = params.p, params.q, params.s, params.r
    torus_block = tuple(range(1, p)) * q
    twist_block = tuple(range(1, s)) * (s * r)
    return BraidWord(p, torus_block + twist_block)


def braid_permutation(braid: BraidWord) -> Tuple[int, ...]:
    """Permutation of strand endpoints, as a tuple perm[i] = image of i."""
    perm = list(range(braid.n_strands))
    for g in braid.word:
        if not (1 <= g < braid.n_strands):
            raise ParameterError(f"generator index {g} out of range for {braid.n_strands} strands")
        perm[g - 1], perm[g] = perm[g], perm[g - 1]
    return tuple(perm)


def closure_is_knot(braid: BraidWord) -> bool:
    """True when the braid closure has a single component."""
    perm = braid_permutation(braid)
    seen = 1
    at = perm[0]
    while at != 0:
        at = perm[at]
        seen += 1
    return seen == braid.n_strands


def positive_braid_genus(braid: BraidWord) -> int:
    """Seifert genus of the closure of a positive braid whose closure is a knot.

    Bennequin: the Seifert algorithm surface is minimal genus, so
    g = (c - n + 1) / 2 with c crossings and n strands.
    """
    if not closure_is_knot(braid):
        raise ParameterError("braid closure is a link, not a knot")
    c, n = len(braid.word), braid.n_strands
    if (c - n + 1) % 2:
        raise ParameterError("parity violation: c - n + 1 must be even for a knot")
    return (c - n + 1) // 2


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """Alexander polynomial of the (p, q) torus knot, symmetrized.

    (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)); both divisions are exact.
    """
    if p < 1 or q < 1:
        raise ParameterError(f"torus parameters must be positive, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ParameterError(f"gcd(p, q) must be 1, got ({p}, {q})")
    t = LaurentPoly.t_power
    num = (t(p * q) - 1) * (t(1) - 1)
    den = (t(p) - 1) * (t(q) - 1)
    return num.exact_div(den).normalized_alexander()


def satellite_alexander(pattern: LaurentPoly, companion: LaurentPoly, winding: int) -> LaurentPoly:
    """Alexander polynomial of a satellite: pattern(t) * companion(t^winding)."""
    if winding < 0:
        raise ParameterError(f"winding must be >= 0, got {winding}")
    return pattern * companion.substitute_power(winding)
