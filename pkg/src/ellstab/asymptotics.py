"""Charges as Laurent germs along a constraint curve, phase limits, the
asymptotic phase order, and finite-parameter wall scanning.

A charge germ is the pair of truncated Laurent series obtained by pushing
the exact expansion of u(v) through the charge's closed form.  Two germs
are ordered by the sign of the leading coefficient of the cross series
re(M) im(N) - im(M) re(N): for phases ranged in a common half plane this
sign equals the sign of sin(pi (phi_N - phi_M)) pointwise, so a positive
lead means M eventually has the smaller phase.  A cross series with no
stored coefficients is reported as equal-through-order unless the data is
exact, in which case the germs are genuinely proportional as stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import charges as charges_mod
from .curves import CurveConstraint, expand_u, solve_u
from .errors import ConfigurationError, DomainError
from .poly import RootInterval, eval_interval
from .ring import BaseGeometry, ChernVector, DivisorB, DivisorX, pair
from .series import LaurentSeries


class ChargeKind(Enum):
    REDUCED = "reduced"
    FULL = "full"


class Side(Enum):
    PLUS = "plus"
    MINUS = "minus"
    EXACT = "exact"


@dataclass(frozen=True)
class PhaseLimit:
    limit: Fraction
    side: Side


@dataclass(frozen=True)
class AsymptoticCharge:
    re: LaurentSeries
    im: LaurentSeries
    kind: ChargeKind

    def is_stored_zero(self) -> bool:
        return self.re.is_stored_zero() and self.im.is_stored_zero()

    def is_exact(self) -> bool:
        return self.re.is_exact() and self.im.is_exact()


@dataclass(frozen=True)
class PhaseOrder:
    """Outcome of an asymptotic phase comparison.

    ``kind`` is one of prec, succ, equal_through_order, exact_equal; the
    floor records how deep a vanishing cross series was trusted.
    """

    kind: str
    floor: int | None = None

    @classmethod
    def prec(cls) -> "PhaseOrder":
        return cls("prec")

    @classmethod
    def succ(cls) -> "PhaseOrder":
        return cls("succ")

    @classmethod
    def equal_through_order(cls, floor: int) -> "PhaseOrder":
        return cls("equal_through_order", floor)

    @classmethod
    def exact_equal(cls) -> "PhaseOrder":
        return cls("exact_equal")

    @property
    def is_prec(self) -> bool:
        return self.kind == "prec"

    @property
    def is_succ(self) -> bool:
        return self.kind == "succ"

    @property
    def is_equalish(self) -> bool:
        return self.kind in ("equal_through_order", "exact_equal")


def charge_series(
    g: BaseGeometry,
    v: ChernVector,
    c: CurveConstraint,
    kind: ChargeKind,
    order: int = 8,
    d: DivisorB | None = None,
) -> AsymptoticCharge:
    """Charge of a vector along the curve as a pair of Laurent series in v."""
    if g.h != c.h:
        raise ConfigurationError("curve and geometry disagree on h")
    u = expand_u(c, order)
    vv = LaurentSeries.monomial(1, 1)
    h, hb, hb2 = g.h, g.hb_divisor, g.hb2

    if kind is ChargeKind.REDUCED:
        hS = pair(g, hb, v.S)
        heta = pair(g, hb, v.eta)
        hu = h * u
        re = (
            (hu * (hu + 2 * vv) + vv * vv) * Fraction(hb2 * v.x, 2)
            + u * (hu + 2 * vv) * Fraction(hS, 2)
        )
        im = (
            (hu + vv) * heta
            + u * v.a
            - u * (hu * hu + 3 * hu * vv + 3 * vv * vv) * Fraction(hb2 * v.n, 6)
        )
        return AsymptoticCharge(re, im, kind)

    if kind is ChargeKind.FULL:
        if v.n != 0 or v.x != 0:
            raise DomainError("full-kind series requires a fiber-degree-trivial class")
        if d is None:
            d = g.zero_divisor()
        hS = pair(g, hb, v.S)
        heta = pair(g, hb, v.eta)
        re = LaurentSeries.const(-(v.s - pair(g, d, v.eta))) + u * (h * u + 2 * vv) * Fraction(
            hS, 2
        )
        im = h * u * heta + u * (v.a - pair(g, d, v.S)) + vv * heta
        return AsymptoticCharge(re, im, kind)

    raise DomainError(f"unknown charge kind {kind}")


def phase_limit(ac: AsymptoticCharge) -> PhaseLimit:
    """Limit of the phase (argument over pi) as v grows, with the approach
    side when a subleading term decides it.

    The reduced kind treats a vanishing charge as the fixed phase one half.
    Germs heading into the open third quadrant have no phase in either
    supported range and raise; a full-kind zero charge is indeterminate.
    """
    re, im = ac.re, ac.im
    re_lead, im_lead = re.leading(), im.leading()

    if re_lead is None and im_lead is None:
        if ac.kind is ChargeKind.REDUCED:
            return PhaseLimit(Fraction(1, 2), Side.EXACT)
        raise DomainError("zero full-kind charge has indeterminate phase")

    if im_lead is None:
        if re_lead[1] > 0:
            return PhaseLimit(Fraction(0), Side.EXACT)
        return PhaseLimit(Fraction(1), Side.EXACT)

    if re_lead is None:
        if im_lead[1] > 0:
            return PhaseLimit(Fraction(1, 2), Side.EXACT)
        return PhaseLimit(Fraction(-1, 2), Side.EXACT)

    if re_lead[1] < 0 and im_lead[1] < 0:
        raise DomainError("charge germ leaves both supported phase ranges")

    if re_lead[0] > im_lead[0]:
        if re_lead[1] > 0:
            side = Side.PLUS if im_lead[1] > 0 else Side.MINUS
            return PhaseLimit(Fraction(0), side)
        return PhaseLimit(Fraction(1), Side.MINUS if im_lead[1] > 0 else Side.PLUS)

    if im_lead[0] > re_lead[0]:
        if im_lead[1] > 0:
            side = Side.MINUS if re_lead[1] > 0 else Side.PLUS
            return PhaseLimit(Fraction(1, 2), side)
        side = Side.PLUS if re_lead[1] > 0 else Side.MINUS
        return PhaseLimit(Fraction(-1, 2), side)

    raise DomainError("real and imaginary leads share an order; the limit is not rational")


def cross_series(acm: AsymptoticCharge, acn: AsymptoticCharge) -> LaurentSeries:
    if acm.kind is not acn.kind:
        raise DomainError("cannot compare charges of different kinds")
    m_re, m_im = _with_zero_convention(acm)
    n_re, n_im = _with_zero_convention(acn)
    return m_re * n_im - m_im * n_re


def _with_zero_convention(ac: AsymptoticCharge) -> tuple[LaurentSeries, LaurentSeries]:
    if ac.kind is ChargeKind.REDUCED and ac.is_stored_zero() and ac.is_exact():
        return LaurentSeries.zero(), LaurentSeries.const(1)
    if ac.kind is ChargeKind.FULL and ac.is_stored_zero() and ac.is_exact():
        raise DomainError("zero full-kind charge has indeterminate phase")
    return ac.re, ac.im


def compare_phases(acm: AsymptoticCharge, acn: AsymptoticCharge) -> PhaseOrder:
    """Asymptotic order of two charge germs of the same kind.

    Decided by the sign of the leading cross coefficient.  A vanishing
    cross with a negatively oriented dot series means the germs are
    antipodal (phases one apart, where the cross is blind); those are
    ordered by their phase limits.
    """
    if acm.kind is not acn.kind:
        raise DomainError("cannot compare charges of different kinds")
    if (acm.re, acm.im, acm.kind) == (acn.re, acn.im, acn.kind):
        return PhaseOrder.exact_equal()
    m_re, m_im = _with_zero_convention(acm)
    n_re, n_im = _with_zero_convention(acn)
    x = m_re * n_im - m_im * n_re
    lead = x.leading()
    if lead is not None:
        return PhaseOrder.prec() if lead[1] > 0 else PhaseOrder.succ()
    dot = m_re * n_re + m_im * n_im
    dot_lead = dot.leading()
    if dot_lead is not None and dot_lead[1] < 0:
        lm = phase_limit(AsymptoticCharge(m_re, m_im, acm.kind))
        ln = phase_limit(AsymptoticCharge(n_re, n_im, acn.kind))
        if lm.limit < ln.limit:
            return PhaseOrder.prec()
        if lm.limit > ln.limit:
            return PhaseOrder.succ()
    if x.is_exact():
        return PhaseOrder.exact_equal()
    return PhaseOrder.equal_through_order(x.trunc)


def compare_vectors(
    g: BaseGeometry,
    m: ChernVector,
    n: ChernVector,
    c: CurveConstraint,
    kind: ChargeKind,
    order: int = 8,
    d: DivisorB | None = None,
) -> PhaseOrder:
    """Compare two vectors along a curve, escalating the order once if the
    cross series vanishes through the first truncation floor."""
    first = compare_phases(
        charge_series(g, m, c, kind, order, d), charge_series(g, n, c, kind, order, d)
    )
    if first.kind != "equal_through_order":
        return first
    doubled = 2 * order
    return compare_phases(
        charge_series(g, m, c, kind, doubled, d), charge_series(g, n, c, kind, doubled, d)
    )


def _charge_at_point(
    g: BaseGeometry,
    v: ChernVector,
    kind: ChargeKind,
    u,
    vpar,
    d: DivisorB | None,
):
    if kind is ChargeKind.REDUCED:
        return charges_mod.reduced_charge(g, v, u, vpar)
    omega = DivisorX(u, g.hb_divisor.scale(vpar))
    bfield = DivisorX.pullback(d if d is not None else g.zero_divisor())
    return charges_mod.full_charge(g, v, omega, bfield)


def cross_sign_at(
    g: BaseGeometry,
    m: ChernVector,
    n: ChernVector,
    c: CurveConstraint,
    kind: ChargeKind,
    vpar,
    d: DivisorB | None = None,
    precision: Fraction = Fraction(1, 2**64),
) -> int:
    """Certified sign of the exact cross value at a finite curve point.

    At rational curve points the sign is computed exactly; at algebraic
    points the cross value is a univariate polynomial in u whose sign at
    the bracketed root is certified by interval refinement, with an exact
    zero detected through a common factor with the curve polynomial.
    """
    from .curves import constraint_poly
    from .poly import RootInterval as RI
    from .poly import _gcd, refine_root

    root = solve_u(c, vpar, precision)
    if root.exact:
        zm = _charge_at_point(g, m, kind, root.lo, vpar, d)
        zn = _charge_at_point(g, n, kind, root.lo, vpar, d)
        val = zm.re * zn.im - zm.im * zn.re
        return 0 if val == 0 else (1 if val > 0 else -1)

    from .poly import Poly2

    usym = Poly2.u()
    zm = _charge_at_point(g, m, kind, usym, vpar, d)
    zn = _charge_at_point(g, n, kind, usym, vpar, d)
    cross = (zm.re * zn.im - zm.im * zn.re).eval_v(vpar)
    if cross.is_zero():
        return 0
    curve_poly = constraint_poly(c).eval_v(vpar)
    common = _gcd(cross, curve_poly)
    if common.degree >= 1:
        sub = common.squarefree()
        from .poly import count_roots

        if count_roots(sub, root.lo, root.hi) >= 1 or sub(root.lo) == 0:
            return 0
    iv = root
    while True:
        lo, hi = eval_interval(cross, iv)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        iv = refine_root(curve_poly, RI(iv.lo, iv.hi), iv.width / 4)


@dataclass(frozen=True)
class WallScanResult:
    walls: tuple[RootInterval, ...]
    degenerate: bool


def wall_scan(
    g: BaseGeometry,
    m: ChernVector,
    n: ChernVector,
    c: CurveConstraint,
    kind: ChargeKind,
    vrange: tuple,
    precision: Fraction = Fraction(1, 2**16),
    d: DivisorB | None = None,
    samples: int = 64,
) -> WallScanResult:
    """Sign-change brackets of the exact cross value over a finite v range.

    The range is sampled on a uniform rational grid; adjacent samples with
    certified opposite signs are bisected down to ``precision``.  A cross
    value that vanishes at every sample is reported as degenerate with no
    walls rather than as a wall everywhere.
    """
    lo, hi = Fraction(vrange[0]), Fraction(vrange[1])
    if not (0 < lo < hi):
        raise DomainError("wall scan requires 0 < vmin < vmax")
    if samples < 2:
        raise DomainError("wall scan needs at least two samples")
    grid = [lo + (hi - lo) * k / samples for k in range(samples + 1)]
    signs = [cross_sign_at(g, m, n, c, kind, vv, d) for vv in grid]
    if all(sg == 0 for sg in signs):
        return WallScanResult((), True)

    walls = []
    k = 0
    while k < samples:
        s1, s2 = signs[k], signs[k + 1]
        if s1 == 0:
            k += 1
            continue
        if s2 == 0:
            j = k + 1
            while j <= samples and signs[j] == 0:
                j += 1
            if j <= samples and signs[j] * s1 < 0:
                walls.append(RootInterval(grid[k + 1], grid[j - 1]))
            k = j
            continue
        if s1 * s2 < 0:
            a, b = grid[k], grid[k + 1]
            while b - a > precision:
                mid = (a + b) / 2
                sm = cross_sign_at(g, m, n, c, kind, mid, d)
                if sm == 0:
                    a = b = mid
                    break
                if sm == s1:
                    a = mid
                else:
                    b = mid
            walls.append(RootInterval(a, b))
        k += 1
    return WallScanResult(tuple(walls), False)
