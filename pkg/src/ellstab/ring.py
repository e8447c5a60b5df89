"""Exact arithmetic in the even rational cohomology of an elliptically
fibered threefold with a section.

The even cohomology is modelled through the six-dimensional splitting

    1,  pullback divisor,  fiber   |   section,  section * pullback,  point

so a class is a vector ``(n, x, S, eta, a, s)`` standing for

    n * 1  +  x * Theta  +  pull(S)  +  Theta * pull(eta)  +  a * f  +  s * pt

where ``Theta`` is the section divisor, ``f`` the fiber class, and ``S``,
``eta`` live in the rational Picard lattice of the base surface.  The base
enters only through lattice data: a symmetric pairing ``gram``, the
coordinates ``hb`` of an ample class H, and the proportionality constant
``h`` with the canonical class of the base numerically equivalent to h*H.

Products are computed from the relations

    Theta^2 = h * Theta * pull(H),      Theta * f = pt,
    pull(A) * pull(B) = (A.B) * f,      Theta * pull(A) * pull(B) = (A.B) * pt,

truncated above the point class.  All arithmetic is exact; coordinates are
``fractions.Fraction`` values (polynomial coefficients are also accepted,
which lets the same formulas run symbolically).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ConfigurationError, DimensionError, DomainError


def _q(x):
    """Coerce ints and strings to Fraction, pass other scalars through."""
    if isinstance(x, (int, str)):
        return Fraction(x)
    return x


def _qtuple(xs) -> tuple:
    return tuple(_q(x) for x in xs)


@dataclass(frozen=True)
class DivisorB:
    """A class in the rational Picard lattice of the base surface."""

    coords: tuple

    def __init__(self, coords):
        object.__setattr__(self, "coords", _qtuple(coords))

    @classmethod
    def zero(cls, rank: int) -> "DivisorB":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "DivisorB") -> "DivisorB":
        if len(self.coords) != len(other.coords):
            raise DimensionError("divisor rank mismatch")
        return DivisorB(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorB") -> "DivisorB":
        return self + (-other)

    def __neg__(self) -> "DivisorB":
        return DivisorB(tuple(-a for a in self.coords))

    def scale(self, c) -> "DivisorB":
        c = _q(c)
        return DivisorB(tuple(c * a for a in self.coords))

    def __rmul__(self, c) -> "DivisorB":
        return self.scale(c)


@dataclass(frozen=True)
class DivisorX:
    """A divisor class on the threefold: theta * Theta + pull(base)."""

    theta: Fraction
    base: DivisorB

    def __init__(self, theta, base: DivisorB):
        object.__setattr__(self, "theta", _q(theta))
        object.__setattr__(self, "base", base)

    @classmethod
    def pullback(cls, d: DivisorB) -> "DivisorX":
        return cls(0, d)

    @classmethod
    def zero(cls, rank: int) -> "DivisorX":
        return cls(0, DivisorB.zero(rank))

    def __add__(self, other: "DivisorX") -> "DivisorX":
        return DivisorX(self.theta + other.theta, self.base + other.base)

    def __neg__(self) -> "DivisorX":
        return DivisorX(-self.theta, -self.base)


@dataclass(frozen=True)
class BaseGeometry:
    """Numeric intersection data of the base surface plus fibration constants.

    ``gram`` is the symmetric intersection pairing on the lattice model of
    the base, ``hb`` holds the coordinates of the ample class H, ``h`` is
    the constant with K_base numerically equivalent to h*H, ``vprime`` an
    ampleness bound below which Theta + v*pull(H) need not be ample, and
    ``m0`` a seed constant with m0 > vprime and h + 2*m0 > 0.
    """

    rank: int
    gram: tuple
    hb: tuple
    h: Fraction
    vprime: Fraction
    m0: Fraction
    hb2: Fraction = field(init=False, compare=False, repr=False)

    def __init__(self, rank, gram, hb, h, vprime=0, m0=1):
        rank = int(rank)
        gram = tuple(_qtuple(row) for row in gram)
        hb = _qtuple(hb)
        h = _q(h)
        vprime = _q(vprime)
        m0 = _q(m0)
        if rank <= 0:
            raise ConfigurationError("geometry.rank: must be positive")
        if len(gram) != rank or any(len(row) != rank for row in gram):
            raise ConfigurationError("geometry.gram: must be a rank x rank matrix")
        for i in range(rank):
            for j in range(rank):
                if gram[i][j] != gram[j][i]:
                    raise ConfigurationError("geometry.gram: must be symmetric")
        if len(hb) != rank:
            raise ConfigurationError("geometry.hb: length must equal rank")
        hb2 = sum(hb[i] * gram[i][j] * hb[j] for i in range(rank) for j in range(rank))
        if hb2 <= 0:
            raise ConfigurationError("geometry.hb: self-intersection must be positive")
        if h + 2 * m0 <= 0:
            raise ConfigurationError("geometry.m0: requires h + 2*m0 > 0")
        if m0 <= vprime:
            raise ConfigurationError("geometry.m0: requires m0 > vprime")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "hb", hb)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "vprime", vprime)
        object.__setattr__(self, "m0", m0)
        object.__setattr__(self, "hb2", hb2)

    @property
    def hb_divisor(self) -> DivisorB:
        return DivisorB(self.hb)

    def half_canonical_bfield(self) -> DivisorX:
        """The distinguished twist -(1/2) * pull(K_base) = -(h/2) * pull(H)."""
        return DivisorX(0, self.hb_divisor.scale(-Fraction(self.h) / 2))

    def zero_divisor(self) -> DivisorB:
        return DivisorB.zero(self.rank)


@dataclass(frozen=True)
class ChernVector:
    """A cohomology class in the six-component splitting.

    Components: ``n`` (rank), ``x`` (Theta coefficient of degree one),
    ``S`` (pullback part of degree one), ``eta`` (Theta*pullback part of
    degree two), ``a`` (fiber coefficient of degree two), ``s`` (point
    coefficient).  Addition is componentwise, matching direct sums.
    """

    n: Fraction
    x: Fraction
    S: DivisorB
    eta: DivisorB
    a: Fraction
    s: Fraction

    def __init__(self, n, x, S: DivisorB, eta: DivisorB, a, s):
        if S.rank != eta.rank:
            raise DimensionError("components S and eta have different ranks")
        object.__setattr__(self, "n", _q(n))
        object.__setattr__(self, "x", _q(x))
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "a", _q(a))
        object.__setattr__(self, "s", _q(s))

    @classmethod
    def zero(cls, rank: int) -> "ChernVector":
        z = DivisorB.zero(rank)
        return cls(0, 0, z, z, 0, 0)

    @classmethod
    def unit(cls, rank: int) -> "ChernVector":
        z = DivisorB.zero(rank)
        return cls(1, 0, z, z, 0, 0)

    @property
    def rank_lattice(self) -> int:
        return self.S.rank

    def is_zero(self) -> bool:
        return (
            self.n == 0
            and self.x == 0
            and self.S.is_zero()
            and self.eta.is_zero()
            and self.a == 0
            and self.s == 0
        )

    def __add__(self, other: "ChernVector") -> "ChernVector":
        return ChernVector(
            self.n + other.n,
            self.x + other.x,
            self.S + other.S,
            self.eta + other.eta,
            self.a + other.a,
            self.s + other.s,
        )

    def __sub__(self, other: "ChernVector") -> "ChernVector":
        return self + (-other)

    def __neg__(self) -> "ChernVector":
        return ChernVector(-self.n, -self.x, -self.S, -self.eta, -self.a, -self.s)

    def scale(self, c) -> "ChernVector":
        c = _q(c)
        return ChernVector(
            c * self.n, c * self.x, self.S.scale(c), self.eta.scale(c), c * self.a, c * self.s
        )

    def __rmul__(self, c) -> "ChernVector":
        return self.scale(c)

    def degree_part(self, d: int) -> "ChernVector":
        """The homogeneous piece of cohomological degree 2*d."""
        z = DivisorB.zero(self.rank_lattice)
        if d == 0:
            return ChernVector(self.n, 0, z, z, 0, 0)
        if d == 1:
            return ChernVector(0, self.x, self.S, z, 0, 0)
        if d == 2:
            return ChernVector(0, 0, z, self.eta, self.a, 0)
        if d == 3:
            return ChernVector(0, 0, z, z, 0, self.s)
        raise DomainError(f"no degree-{d} part on a threefold")

    def a1(self, g: BaseGeometry) -> Fraction:
        """Theta coefficient of the canonically twisted degree-one part."""
        return self.x

    def a2(self, g: BaseGeometry) -> DivisorB:
        """Pullback part of the canonically twisted degree-one component."""
        return self.S + g.hb_divisor.scale(self.n * g.h / 2)

    def a3(self, g: BaseGeometry) -> Fraction:
        """Fiber coefficient carried to degree two by the transform.

        Equals s + (h/2) H.eta + (1/12) x h^2 H^2 as a pure function of the
        stored fields.
        """
        heta = pair(g, g.hb_divisor, self.eta)
        return self.s + g.h * heta / 2 + self.x * g.h * g.h * g.hb2 * Fraction(1, 12)


def pair(g: BaseGeometry, d1: DivisorB, d2: DivisorB):
    """Intersection pairing of two base classes: d1^T * gram * d2."""
    if d1.rank != g.rank or d2.rank != g.rank:
        raise DimensionError("divisor rank does not match geometry rank")
    total = Fraction(0)
    for i in range(g.rank):
        ci = d1.coords[i]
        if ci == 0:
            continue
        row = g.gram[i]
        for j in range(g.rank):
            cj = d2.coords[j]
            if cj == 0 or row[j] == 0:
                continue
            total = total + ci * row[j] * cj
    return total


def mul(g: BaseGeometry, v1: ChernVector, v2: ChernVector) -> ChernVector:
    """Graded product of two classes, truncated above the point class."""
    if v1.rank_lattice != g.rank or v2.rank_lattice != g.rank:
        raise DimensionError("vector rank does not match geometry rank")
    n1, x1, S1, e1, a1, s1 = v1.n, v1.x, v1.S, v1.eta, v1.a, v1.s
    n2, x2, S2, e2, a2, s2 = v2.n, v2.x, v2.S, v2.eta, v2.a, v2.s
    hbd = g.hb_divisor

    n = n1 * n2
    x = n1 * x2 + n2 * x1
    S = S2.scale(n1) + S1.scale(n2)
    eta = (
        e2.scale(n1)
        + e1.scale(n2)
        + hbd.scale(x1 * x2 * g.h)
        + S2.scale(x1)
        + S1.scale(x2)
    )
    a = n1 * a2 + n2 * a1 + pair(g, S1, S2)
    s = (
        n1 * s2
        + n2 * s1
        + g.h * (x1 * pair(g, hbd, e2) + x2 * pair(g, hbd, e1))
        + x1 * a2
        + x2 * a1
        + pair(g, S1, e2)
        + pair(g, S2, e1)
    )
    return ChernVector(n, x, S, eta, a, s)


def divisor_vector(g: BaseGeometry, d: DivisorX) -> ChernVector:
    """Embed a divisor class as a degree-one cohomology vector."""
    z = DivisorB.zero(g.rank)
    return ChernVector(0, d.theta, d.base, z, 0, 0)


def twist(g: BaseGeometry, v: ChernVector, B: DivisorX) -> ChernVector:
    """Twist by a field B: multiply by exp(-B) = 1 - B + B^2/2 - B^3/6."""
    b = divisor_vector(g, B)
    b2 = mul(g, b, b)
    b3 = mul(g, b2, b)
    expo = ChernVector.unit(g.rank) - b + b2.scale(Fraction(1, 2)) - b3.scale(Fraction(1, 6))
    return mul(g, expo, v)


@lru_cache(maxsize=None)
def compute_m(g: BaseGeometry) -> Fraction:
    """The positivity constant m = m0^2 * H^2 / (h + 2*m0).

    For k >= m the class Theta*pull(H) + k*f pairs nonnegatively with every
    effective divisor, which makes the section-slope function well behaved.
    """
    m = g.m0 * g.m0 * g.hb2 / (g.h + 2 * g.m0)
    if m <= 0:
        raise ConfigurationError("geometry: derived constant m must be positive")
    return m
