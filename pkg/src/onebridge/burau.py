"""Alexander polynomials via the reduced Burau representation.

This is the independent oracle for the diagram pipeline: it never touches
Heegaard diagrams.  det(rho(beta) - I) * (1 - t) / (1 - t^n) gives the
Alexander polynomial of the closure of beta (up to units), provided the
closure is a knot.  All arithmetic is exact; the two divisions are exact by
construction and a failure raises InexactDivision, which callers treat as
an internal error.
"""

from __future__ import annotations

from typing import List

from .errors import ParameterError
from .laurent import LaurentPoly
from .params import BraidWord, closure_is_knot

Matrix = List[List[LaurentPoly]]


def _identity(n: int) -> Matrix:
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _reduced_burau_generator(i: int, n: int) -> Matrix:
    """Matrix of sigma_i on the reduced basis v_1..v_{n-1}.

    v_{i-1} -> v_{i-1} + t v_i ; v_i -> -t v_i ; v_{i+1} -> v_i + v_{i+1}.
    Columns are images of basis vectors.
    """
    m = _identity(n - 1)
    t = LaurentPoly.t_power(1)
    col = i - 1
    m[col][col] = -t
    if i >= 2:
        m[col][col - 1] = t
    if i <= n - 2:
        m[col][col + 1] = LaurentPoly.one()
    return m


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    zero = LaurentPoly.zero()
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for kk in range(n):
            v = ai[kk]
            if v.is_zero():
                continue
            bk = b[kk]
            row = out[i]
            for j in range(n):
                if not bk[j].is_zero():
                    row[j] = row[j] + v * bk[j]
    return out


def _det(mat: Matrix) -> LaurentPoly:
    """Bareiss fraction-free determinant; every division is exact."""
    n = len(mat)
    if n == 0:
        return LaurentPoly.one()
    m = [row[:] for row in mat]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = LaurentPoly.zero()
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def reduced_burau(braid: BraidWord) -> Matrix:
    n = braid.n_strands
    if n < 2:
        raise ParameterError("need at least 2 strands")
    acc = _identity(n - 1)
    for g in braid.word:
        acc = _mat_mul(acc, _reduced_burau_generator(g, n))
    return acc


def burau_alexander(braid: BraidWord) -> LaurentPoly:
    """Symmetrized Alexander polynomial (value 1 at t = 1) of the closure."""
    if not closure_is_knot(braid):
        raise ParameterError("braid closure is not a knot; Alexander oracle undefined")
    n = braid.n_strands
    rho = reduced_burau(braid)
    ident = _identity(n - 1)
    diff = [[rho[i][j] - ident[i][j] for j in range(n - 1)] for i in range(n - 1)]
    d = _det(diff)
    t = LaurentPoly.t_power
    num = d * (LaurentPoly.one() - t(1))
    den = LaurentPoly.one() - t(n)
    return num.exact_div(den).normalized_alexander()
