"""Slope and slope-like functions with exact values in Q union {+infinity}.

Every kind is a quotient of two linear functionals of the Chern vector,
with numerators and denominators computed through the cohomology product so
that no intersection number is transcribed twice.  The value +infinity is
returned exactly when the kind's denominator vanishes; it compares strictly
greater than every finite value and equal to itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering

from .errors import ConfigurationError, DomainError
from .ring import (
    BaseGeometry,
    ChernVector,
    DivisorB,
    DivisorX,
    compute_m,
    divisor_vector,
    mul,
    twist,
)


class SlopeTag(Enum):
    MU_OMEGA_B = "MU_OMEGA_B"
    NU_OMEGA_B = "NU_OMEGA_B"
    MU_F = "MU_F"
    MU_THETA_M = "MU_THETA_M"
    MU_STAR = "MU_STAR"
    MU_STAR_B = "MU_STAR_B"
    MU_BAR = "MU_BAR"
    MU_PHB_PD = "MU_PHB_PD"
    MU_THETA_MPHB_PD = "MU_THETA_MPHB_PD"
    MU_OMEGA_PD = "MU_OMEGA_PD"


_REQUIRED = {
    SlopeTag.MU_OMEGA_B: ("omega", "bfield"),
    SlopeTag.NU_OMEGA_B: ("omega", "bfield"),
    SlopeTag.MU_F: (),
    SlopeTag.MU_THETA_M: (),
    SlopeTag.MU_STAR: (),
    SlopeTag.MU_STAR_B: (),
    SlopeTag.MU_BAR: ("omegabar", "dbar"),
    SlopeTag.MU_PHB_PD: ("d",),
    SlopeTag.MU_THETA_MPHB_PD: ("d",),
    SlopeTag.MU_OMEGA_PD: ("omega", "d"),
}


@dataclass(frozen=True)
class SlopeKind:
    """A slope selector together with exactly the parameters its kind needs."""

    tag: SlopeTag
    omega: DivisorX | None = None
    bfield: DivisorX | None = None
    omegabar: DivisorX | None = None
    dbar: DivisorB | None = None
    d: DivisorB | None = None

    def __post_init__(self):
        required = _REQUIRED[self.tag]
        for name in ("omega", "bfield", "omegabar", "dbar", "d"):
            value = getattr(self, name)
            if name in required and value is None:
                raise ConfigurationError(f"slope kind {self.tag.value} requires parameter {name}")
            if name not in required and value is not None:
                raise ConfigurationError(
                    f"slope kind {self.tag.value} does not take parameter {name}"
                )

    @classmethod
    def mu_omega_b(cls, omega: DivisorX, bfield: DivisorX) -> "SlopeKind":
        return cls(SlopeTag.MU_OMEGA_B, omega=omega, bfield=bfield)

    @classmethod
    def nu_omega_b(cls, omega: DivisorX, bfield: DivisorX) -> "SlopeKind":
        return cls(SlopeTag.NU_OMEGA_B, omega=omega, bfield=bfield)

    @classmethod
    def mu_f(cls) -> "SlopeKind":
        return cls(SlopeTag.MU_F)

    @classmethod
    def mu_theta_m(cls) -> "SlopeKind":
        return cls(SlopeTag.MU_THETA_M)

    @classmethod
    def mu_star(cls) -> "SlopeKind":
        return cls(SlopeTag.MU_STAR)

    @classmethod
    def mu_star_b(cls) -> "SlopeKind":
        return cls(SlopeTag.MU_STAR_B)

    @classmethod
    def mu_bar(cls, omegabar: DivisorX, dbar: DivisorB) -> "SlopeKind":
        return cls(SlopeTag.MU_BAR, omegabar=omegabar, dbar=dbar)

    @classmethod
    def mu_phb_pd(cls, d: DivisorB) -> "SlopeKind":
        return cls(SlopeTag.MU_PHB_PD, d=d)

    @classmethod
    def mu_theta_mphb_pd(cls, d: DivisorB) -> "SlopeKind":
        return cls(SlopeTag.MU_THETA_MPHB_PD, d=d)

    @classmethod
    def mu_omega_pd(cls, omega: DivisorX, d: DivisorB) -> "SlopeKind":
        return cls(SlopeTag.MU_OMEGA_PD, omega=omega, d=d)


@total_ordering
@dataclass(frozen=True)
class SlopeValue:
    """An exact rational slope or +infinity (finite is None)."""

    finite: Fraction | None

    @classmethod
    def of(cls, value) -> "SlopeValue":
        return cls(Fraction(value))

    @classmethod
    def infinity(cls) -> "SlopeValue":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.finite is None

    def __lt__(self, other: "SlopeValue") -> bool:
        if self.finite is None:
            return False
        if other.finite is None:
            return True
        return self.finite < other.finite

    def __str__(self) -> str:
        return "inf" if self.finite is None else str(self.finite)


def _ratio(num, den) -> SlopeValue:
    if den == 0:
        return SlopeValue.infinity()
    return SlopeValue(Fraction(num) / Fraction(den))


def _ch1_vec(g: BaseGeometry, v: ChernVector) -> ChernVector:
    return v.degree_part(1)


def _ch2_vec(g: BaseGeometry, v: ChernVector) -> ChernVector:
    return v.degree_part(2)


def slope(g: BaseGeometry, kind: SlopeKind, v: ChernVector) -> SlopeValue:
    """Evaluate a slope kind on a Chern vector."""
    tag = kind.tag
    hb = g.hb_divisor

    if tag is SlopeTag.MU_F:
        fiber = ChernVector(0, 0, g.zero_divisor(), g.zero_divisor(), 1, 0)
        num = mul(g, fiber, _ch1_vec(g, v)).s
        return _ratio(num, v.n)

    if tag is SlopeTag.MU_THETA_M:
        m = compute_m(g)
        theta_phb = ChernVector(0, 0, g.zero_divisor(), hb, m, 0)
        num = mul(g, theta_phb, _ch1_vec(g, v)).s
        return _ratio(num, v.n)

    if tag is SlopeTag.MU_OMEGA_B:
        tw = twist(g, v, kind.bfield)
        om = divisor_vector(g, kind.omega)
        om2 = mul(g, om, om)
        num = mul(g, om2, _ch1_vec(g, tw)).s
        return _ratio(num, tw.n)

    if tag is SlopeTag.NU_OMEGA_B:
        tw = twist(g, v, kind.bfield)
        om = divisor_vector(g, kind.omega)
        om2 = mul(g, om, om)
        om3 = mul(g, om2, om).s
        num = mul(g, om, _ch2_vec(g, tw)).s - om3 * tw.n / 6
        den = mul(g, om2, _ch1_vec(g, tw)).s
        return _ratio(num, den)

    if tag is SlopeTag.MU_STAR:
        phb = ChernVector(0, 0, hb, g.zero_divisor(), 0, 0)
        den = mul(g, phb, _ch2_vec(g, v)).s
        return _ratio(v.s, den)

    if tag is SlopeTag.MU_STAR_B:
        tw = twist(g, v, g.half_canonical_bfield())
        phb = ChernVector(0, 0, hb, g.zero_divisor(), 0, 0)
        den = mul(g, phb, _ch2_vec(g, tw)).s
        return _ratio(tw.s, den)

    if tag is SlopeTag.MU_BAR:
        tw = twist(g, v, DivisorX.pullback(kind.dbar))
        obar = divisor_vector(g, kind.omegabar)
        den = mul(g, obar, _ch2_vec(g, tw)).s
        return _ratio(tw.s, den)

    if tag in (SlopeTag.MU_PHB_PD, SlopeTag.MU_THETA_MPHB_PD, SlopeTag.MU_OMEGA_PD):
        tw = twist(g, v, DivisorX.pullback(kind.d))
        ch1 = _ch1_vec(g, tw)
        ch2 = _ch2_vec(g, tw)
        if tag is SlopeTag.MU_OMEGA_PD:
            om = divisor_vector(g, kind.omega)
            om2 = mul(g, om, om)
            num = mul(g, om, ch2).s
            den = mul(g, om2, ch1).s
            return _ratio(num, den)
        theta_phb = ChernVector(0, 0, g.zero_divisor(), hb, 0, 0)
        den = mul(g, theta_phb, ch1).s
        if tag is SlopeTag.MU_PHB_PD:
            phb = ChernVector(0, 0, hb, g.zero_divisor(), 0, 0)
            num = mul(g, phb, ch2).s
        else:
            m = compute_m(g)
            theta_m = ChernVector(0, 1, hb.scale(m), g.zero_divisor(), 0, 0)
            num = mul(g, theta_m, ch2).s
        return _ratio(num, den)

    raise DomainError(f"unhandled slope kind {tag}")


def is_fiber_numeric(g: BaseGeometry, v: ChernVector) -> bool:
    """Whether a one-dimensional numeric class is supported on fibers.

    Requires the one-dimensional shape n = x = 0, S = 0; the class is a
    fiber class exactly when eta vanishes.  For classes with eta asserted
    effective this agrees with the canonical twisted slope being infinite.
    """
    if v.n != 0 or v.x != 0 or not v.S.is_zero():
        raise DomainError("fiber test requires a one-dimensional class (n = x = 0, S = 0)")
    return v.eta.is_zero()
