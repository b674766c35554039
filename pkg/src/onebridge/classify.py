"""Staircase recognition and the closed-form twisted torus classification.

A complex certifies an L-space knot when its arrow graph is a staircase:
an odd number of generators forming one path whose interior alternates
between sources with exactly two arrows, one horizontal and one vertical,
and sinks with none, with Alexander gradings strictly monotone along the
path.  A complex refutes the L-space property when some Alexander grading
carries rank at least two.  Anything else is reported undecided rather
than guessed.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .burau import burau_alexander
from .chain import (
    KnotComplex,
    alexander_poly,
    build_complex,
    check_d_squared,
    check_rank_symmetry,
    hat_hfk_ranks,
    hf_s3_check,
)
from .diagram import build_diagram
from .errors import InvariantError, ParameterError
from .laurent import LaurentPoly
from .params import TwistedTorusParams, braid_word, positive_braid_genus

logger = logging.getLogger("onebridge.classify")


@dataclass(frozen=True)
class ClassificationResult:
    verdict: str
    reason: str

    @property
    def is_lspace(self) -> Optional[bool]:
        if self.verdict == "yes":
            return True
        if self.verdict == "no":
            return False
        return None


def is_staircase(cx: KnotComplex) -> bool:
    m = cx.generators
    if m % 2 == 0:
        return False
    out: Dict[int, List] = {g: [] for g in range(m)}
    undirected: Dict[int, set] = {g: set() for g in range(m)}
    for a in cx.arrows:
        if (a.n_z == 0) == (a.n_w == 0):
            return False  # diagonal or empty arrow
        out[a.source].append(a)
        if a.target in undirected[a.source]:
            return False  # doubled edge
        undirected[a.source].add(a.target)
        undirected[a.target].add(a.source)

    for g in range(m):
        arrows = out[g]
        if len(arrows) == 0:
            continue
        if len(arrows) != 2:
            return False
        kinds = sorted((a.n_z == 0, a.n_w == 0) for a in arrows)
        if kinds != [(False, True), (True, False)]:
            return False  # need one vertical and one horizontal arrow

    # one simple path through all generators
    degrees = Counter(len(nbs) for nbs in undirected.values())
    if degrees.get(1, 0) != 2 or degrees.get(2, 0) != m - 2:
        return False
    start = max(
        (g for g in range(m) if len(undirected[g]) == 1),
        key=lambda g: cx.alexander[g],
    )
    seen = [start]
    prev, cur = None, start
    while True:
        nxt = [g for g in undirected[cur] if g != prev]
        if not nxt:
            break
        if len(nxt) != 1:
            return False
        prev, cur = cur, nxt[0]
        seen.append(cur)
    if len(seen) != m:
        return False
    alex_path = [cx.alexander[g] for g in seen]
    if any(a <= b for a, b in zip(alex_path, alex_path[1:])):
        return False  # descending from the top degree, strictly
    # interior sources alternate with sinks along the path
    for pos, g in enumerate(seen):
        want_source = pos % 2 == 1
        if (len(out[g]) == 2) != want_source:
            return False
    return True


def rank_obstruction(cx: KnotComplex) -> bool:
    """True when some Alexander grading has rank two or more."""
    per_alex = Counter(cx.alexander)
    return any(rank >= 2 for rank in per_alex.values())


def lspace_predicate(params: TwistedTorusParams) -> bool:
    """Closed-form answer for positive twisted torus knots in scope."""
    p, s, r = params.p, params.s, params.r
    if r == 0:
        raise ParameterError("predicate needs at least one full twist (r >= 1)")
    if s == 1 and p >= 3:
        raise ParameterError("predicate needs a genuine twist region (s >= 2)")
    if s == p - 1:
        return True
    return r == 1 and s in (2, p - 2)


def classify(cx: KnotComplex, label: str = "") -> ClassificationResult:
    if is_staircase(cx):
        return ClassificationResult(verdict="yes", reason="staircase")
    if rank_obstruction(cx):
        return ClassificationResult(verdict="no", reason="rank_obstruction")
    logger.warning(
        "complex %s is neither a staircase nor rank-obstructed; undecided", label
    )
    return ClassificationResult(verdict="undecided", reason="none")


@dataclass(frozen=True)
class Analysis:
    """Everything the command line reports for one knot."""

    params: TwistedTorusParams
    complex: KnotComplex
    ranks: Dict[Tuple[int, int], int]
    delta: LaurentPoly
    genus: int
    classification: ClassificationResult
    predicate: Optional[bool]

    @property
    def agree(self) -> Optional[bool]:
        if self.predicate is None:
            return None
        return self.classification.is_lspace == self.predicate

    @property
    def total_hat_rank(self) -> int:
        return sum(self.ranks.values())


def analyze(
    params: TwistedTorusParams, seed_denominator: Optional[int] = None
) -> Analysis:
    """Build the diagram and complex, run every cross-check, classify."""
    kwargs = {}
    if seed_denominator is not None:
        kwargs["seed_denominator"] = seed_denominator
    diagram = build_diagram(params, **kwargs)
    cx = build_complex(diagram)
    check_d_squared(cx)
    ranks = hat_hfk_ranks(cx)
    check_rank_symmetry(ranks)
    if hf_s3_check(cx) != 0:
        raise InvariantError("w-avoiding homology is not pinned at grading zero")
    delta = alexander_poly(ranks)
    braid = braid_word(params)
    oracle = burau_alexander(braid)
    if delta != oracle:
        raise InvariantError(
            f"chain-level Alexander polynomial disagrees with the braid oracle "
            f"for {params.label()}: {delta} vs {oracle}"
        )
    genus = positive_braid_genus(braid)
    result = classify(cx, label=params.label())
    try:
        predicate: Optional[bool] = lspace_predicate(params)
    except ParameterError:
        predicate = None
    return Analysis(
        params=params,
        complex=cx,
        ranks=ranks,
        delta=delta,
        genus=genus,
        classification=result,
        predicate=predicate,
    )
