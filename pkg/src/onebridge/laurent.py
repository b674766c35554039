"""Exact integer Laurent polynomials in one variable t.

Coefficients are Python ints, exponents may be negative.  Every operation
is exact; division raises unless the quotient is again a Laurent
polynomial over the integers.  Instances are immutable and hashable.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple


class InexactDivision(ArithmeticError):
    """Raised when a quotient would leave the integer Laurent ring."""


class LaurentPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: Dict[int, int] = {}
        for e, v in items:
            if not isinstance(e, int) or not isinstance(v, int):
                raise TypeError("exponents and coefficients must be ints")
            if v:
                c[e] = c.get(e, 0) + v
                if not c[e]:
                    del c[e]
        self._c = c

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def t_power(e: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({e: coeff})

    # -- basic queries ----------------------------------------------------

    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
            if not c[e]:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly({0: other}) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {e: v * other for e, v in self._c.items()} if other else {}
            return out
        c: Dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: v for e, v in c.items() if v}
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not closed in the ring")
        acc = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by t^e."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {k + e: v for k, v in self._c.items()}
        return out

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises InexactDivision if the remainder is nonzero.

        Used for cancellations that are guaranteed exact by construction, so
        a failure here means an internal inconsistency upstream.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        num = dict(self._c)
        d_hi = other.max_exp
        d_lead = other._c[d_hi]
        q: Dict[int, int] = {}
        while num:
            n_hi = max(num)
            e = n_hi - d_hi
            v, rem = divmod(num[n_hi], d_lead)
            if rem:
                raise InexactDivision(f"leading coefficient {num[n_hi]} not divisible by {d_lead}")
            q[e] = v
            for de, dv in other._c.items():
                k = de + e
                num[k] = num.get(k, 0) - dv * v
                if not num[k]:
                    del num[k]
        return LaurentPoly(q)

    # -- evaluation and normal forms ---------------------------------------

    def eval_int(self, t: int) -> "int | None":
        """Evaluate at an integer t.  Requires t in {1, -1} unless all
        exponents are nonnegative (negative exponents need exact powers)."""
        if t in (1, -1):
            return sum(v * (t ** (e % 2)) if t == -1 else v for e, v in self._c.items())
        if self._c and self.min_exp < 0:
            raise ValueError("negative exponents: integer evaluation undefined")
        return sum(v * t**e for e, v in self._c.items())

    def reversed_var(self) -> "LaurentPoly":
        """Substitute t -> t^-1."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def substitute_power(self, w: int) -> "LaurentPoly":
        """Substitute t -> t^w.  w = 0 sends every term to its coefficient at t^0."""
        c: Dict[int, int] = {}
        for e, v in self._c.items():
            k = e * w
            c[k] = c.get(k, 0) + v
        return LaurentPoly(c)

    def is_symmetric(self) -> bool:
        return self._c == {-e: v for e, v in self._c.items()}

    def symmetrize(self) -> "LaurentPoly":
        """Center self so that coeff(e) == coeff(-e), allowing a sign flip.

        The input must equal +-t^k * S for a symmetric S; returns S with
        S(1) >= 0 when a sign choice exists.  Raises ValueError otherwise.
        """
        if self.is_zero():
            return self
        lo, hi = self.min_exp, self.max_exp
        if (lo + hi) % 2:
            raise ValueError("no symmetric center with integer exponents")
        centered = self.shift(-(lo + hi) // 2)
        if centered.is_symmetric():
            pass
        elif (-centered).is_symmetric():
            centered = -centered
        else:
            raise ValueError("polynomial is not symmetric up to units")
        if centered.eval_int(1) < 0:
            centered = -centered
        return centered

    def normalized_alexander(self) -> "LaurentPoly":
        """Symmetrize and scale the sign so the value at t = 1 is exactly 1.

        Knot Alexander polynomials satisfy |p(1)| = 1; anything else is an
        internal error in the caller.
        """
        s = self.symmetrize()
        v = s.eval_int(1)
        if v == 1:
            return s
        if v == -1:
            return -s
        raise ValueError(f"not a knot Alexander polynomial: value at 1 is {v}")

    # -- presentation -------------------------------------------------------

    def sorted_terms(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self._c.items(), key=lambda kv: -kv[0]))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, (e, v) in enumerate(self.sorted_terms()):
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                body = f"t^{e}" if mag == 1 else f"{mag}*t^{e}"
            if i == 0:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"
