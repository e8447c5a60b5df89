"""Small exact polynomial toolkit.

Univariate polynomials over the rationals with Sturm-chain root counting
and bracketed dyadic bisection (no floating point anywhere), and bivariate
polynomials in (u, v) used both numerically and as symbolic ring scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ComputationFault, CurveDomainError


def _q(x):
    if isinstance(x, (int, str)):
        return Fraction(x)
    return x


class Poly1:
    """Univariate polynomial, dense ascending coefficients over Fraction."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = [_q(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def const(cls, value) -> "Poly1":
        return cls([value])

    @classmethod
    def x(cls) -> "Poly1":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly1):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self == Poly1.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly1.const(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        n = max(len(self.c), len(other.c))
        return Poly1(
            [
                (self.c[i] if i < len(self.c) else 0) + (other.c[i] if i < len(other.c) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly1([-a for a in self.c])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly1.const(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly1([a * other for a in self.c])
        if not isinstance(other, Poly1):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly1([])
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                if b == 0:
                    continue
                out[i + j] += a * b
        return Poly1(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly1([a / other for a in self.c])
        return NotImplemented

    def __call__(self, x):
        acc = Fraction(0)
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def derivative(self) -> "Poly1":
        return Poly1([i * a for i, a in enumerate(self.c)][1:])

    def divmod(self, other: "Poly1") -> tuple["Poly1", "Poly1"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        div = other.c
        qdeg = len(rem) - len(div)
        if qdeg < 0:
            return Poly1([]), Poly1(rem)
        quot = [Fraction(0)] * (qdeg + 1)
        lead = div[-1]
        for k in range(qdeg, -1, -1):
            coeff = rem[k + len(div) - 1] / lead
            quot[k] = coeff
            if coeff != 0:
                for j, b in enumerate(div):
                    rem[k + j] -= coeff * b
        return Poly1(quot), Poly1(rem[: len(div) - 1])

    def squarefree(self) -> "Poly1":
        g = _gcd(self, self.derivative())
        if g.degree <= 0:
            return self
        q, r = self.divmod(g)
        if not r.is_zero():
            raise ComputationFault("inexact polynomial gcd division")
        return q


def _gcd(a: Poly1, b: Poly1) -> Poly1:
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    return a / a.c[-1]


def sturm_chain(p: Poly1) -> list[Poly1]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        _, r = chain[-2].divmod(chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    return [q for q in chain if not q.is_zero()]


def _sign_variations(chain, x) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def count_roots(p: Poly1, lo: Fraction, hi: Fraction, chain=None) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    if chain is None:
        chain = sturm_chain(p.squarefree())
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


@dataclass(frozen=True)
class RootInterval:
    """A certified root enclosure [lo, hi]; lo == hi means an exact root."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def isolate_positive_roots(p: Poly1, precision: Fraction) -> list[RootInterval]:
    """All positive real roots of p, each bracketed to the given width.

    Uses a Sturm chain for counting and dyadic bisection for refinement, so
    every returned interval is certified exactly.
    """
    p = p.squarefree()
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    lead = abs(p.c[-1])
    bound = Fraction(1) + max(abs(a) for a in p.c) / lead
    stack = [(Fraction(0), bound)]
    isolated: list[tuple[Fraction, Fraction]] = []
    while stack:
        lo, hi = stack.pop()
        k = count_roots(p, lo, hi, chain)
        if k == 0:
            continue
        if k == 1:
            isolated.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if p(mid) == 0:
            isolated.append((mid, mid))
        stack.append((lo, mid))
        stack.append((mid, hi))
    out = []
    for lo, hi in isolated:
        if lo == hi:
            out.append(RootInterval(lo, hi))
            continue
        while hi - lo > precision:
            mid = (lo + hi) / 2
            if p(mid) == 0:
                lo = hi = mid
                break
            if count_roots(p, lo, mid, chain) == 1:
                hi = mid
            else:
                lo = mid
        out.append(RootInterval(lo, hi))
    out.sort(key=lambda r: r.lo)
    return out


def refine_root(p: Poly1, bracket: RootInterval, precision: Fraction) -> RootInterval:
    """Shrink an isolating bracket of a squarefree p to the given width."""
    if bracket.exact:
        return bracket
    p = p.squarefree()
    chain = sturm_chain(p)
    lo, hi = bracket.lo, bracket.hi
    if count_roots(p, lo, hi, chain) != 1:
        raise CurveDomainError("bracket does not isolate a single root")
    while hi - lo > precision:
        mid = (lo + hi) / 2
        if p(mid) == 0:
            return RootInterval(mid, mid)
        if count_roots(p, lo, mid, chain) == 1:
            hi = mid
        else:
            lo = mid
    return RootInterval(lo, hi)


def eval_interval(p: Poly1, iv: RootInterval) -> tuple[Fraction, Fraction]:
    """Interval extension of p over [lo, hi] by Horner with interval steps."""
    alo = ahi = Fraction(0)
    for a in reversed(p.c):
        c1, c2, c3, c4 = alo * iv.lo, alo * iv.hi, ahi * iv.lo, ahi * iv.hi
        alo = min(c1, c2, c3, c4) + a
        ahi = max(c1, c2, c3, c4) + a
    return alo, ahi


class Poly2:
    """Bivariate polynomial in (u, v), sparse dict over Fraction.

    Also usable as a generic scalar inside the cohomology arithmetic, which
    turns ring computations into symbolic identities in (u, v).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for key, val in terms.items():
                val = _q(val)
                if val != 0:
                    clean[key] = val
        self.terms = clean

    @classmethod
    def const(cls, value) -> "Poly2":
        return cls({(0, 0): value})

    @classmethod
    def u(cls) -> "Poly2":
        return cls({(1, 0): 1})

    @classmethod
    def v(cls) -> "Poly2":
        return cls({(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly2):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly2.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        out = dict(self.terms)
        for key, val in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + val
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly2({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, Poly2):
            return NotImplemented
        out: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + a * b
        return Poly2(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly2({k: v / other for k, v in self.terms.items()})
        return NotImplemented

    def scale(self, c) -> "Poly2":
        return self * _q(c)

    def eval(self, u, v):
        u, v = _q(u), _q(v)
        total = Fraction(0)
        for (i, j), a in self.terms.items():
            total += a * u**i * v**j
        return total

    def eval_v(self, v) -> Poly1:
        """Substitute a rational v, leaving a univariate polynomial in u."""
        v = _q(v)
        deg = max((i for (i, _) in self.terms), default=-1)
        coeffs = [Fraction(0)] * (deg + 1)
        for (i, j), a in self.terms.items():
            coeffs[i] += a * v**j
        return Poly1(coeffs)

    def udegree(self) -> int:
        return max((i for (i, _) in self.terms), default=-1)

    def ucoefficient(self, k: int) -> Poly1:
        """Coefficient of u^k as a polynomial in v (ascending)."""
        deg = max((j for (i, j) in self.terms if i == k), default=-1)
        coeffs = [Fraction(0)] * (deg + 1)
        for (i, j), a in self.terms.items():
            if i == k:
                coeffs[j] += a
        return Poly1(coeffs)

    @classmethod
    def from_ucoefficients(cls, coeffs: list[Poly1]) -> "Poly2":
        terms: dict = {}
        for i, p in enumerate(coeffs):
            for j, a in enumerate(p.c):
                if a != 0:
                    terms[(i, j)] = a
        return cls(terms)


def reduce_mod_u(dividend: Poly2, divisor: Poly2) -> Poly2:
    """Remainder of dividend modulo divisor, eliminating the variable u.

    Works in v-coefficient polynomials and requires every elimination step
    to divide exactly; raises if it cannot (which never happens for the
    identities this package reduces).
    """
    d0 = divisor.udegree()
    if d0 < 0:
        raise ZeroDivisionError("reduction modulo the zero polynomial")
    lead = divisor.ucoefficient(d0)
    rem = dividend
    while True:
        d = rem.udegree()
        if d < d0 or rem.is_zero():
            return rem
        cd = rem.ucoefficient(d)
        q, r = cd.divmod(lead)
        if not r.is_zero():
            raise ComputationFault("non-exact coefficient division during reduction")
        shift = Poly2.from_ucoefficients([Poly1([])] * (d - d0) + [q])
        rem = rem - shift * divisor
