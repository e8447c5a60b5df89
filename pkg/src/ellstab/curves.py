"""The two polarization-limit curves in the (v, u) quarter plane.

The tilt curve ties a fixed polarization a*Theta + b*pull(H) to the moving
one u*Theta + v*pull(H) through

    a(ha+2b) / (ha+b)^2 = (hu+v) / ((1/6) u (h^2 u^2 + 3huv + 3v^2)),

the one-dimensional curve is h + z/y = (1/2) u (hu + 2v).  Both are handled
through their cross-multiplied polynomial forms.  Root finding is Sturm
counting plus dyadic bisection on exact rational signs; the expansion of
u as a Laurent series in 1/v is obtained by reverting the polynomial term
by term, each step cancelling the current leading residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ComputationFault, ConfigurationError, CurveDomainError
from .poly import Poly2, RootInterval, eval_interval, isolate_positive_roots, reduce_mod_u
from .ring import BaseGeometry, ChernVector, DivisorX, divisor_vector, mul
from .series import LaurentSeries


def _q(x):
    if isinstance(x, (int, str)):
        return Fraction(x)
    return x


@dataclass(frozen=True)
class TiltCurve:
    """Curve for comparing slope data at a*Theta + b*pull(H) with the
    moving polarization; requires a, b > 0, ha + 2b > 0 and ha + b != 0."""

    h: Fraction
    a: Fraction
    b: Fraction

    def __init__(self, h, a, b):
        h, a, b = _q(h), _q(a), _q(b)
        if a <= 0 or b <= 0:
            raise ConfigurationError("tilt curve: a and b must be positive")
        if h * a + 2 * b <= 0:
            raise ConfigurationError("tilt curve: requires h*a + 2*b > 0")
        if h * a + b == 0:
            raise ConfigurationError("tilt curve: requires h*a + b != 0")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def leading_coefficient(self) -> Fraction:
        """First expansion coefficient u1 = 2 (ha+b)^2 / (a (ha+2b))."""
        return 2 * (self.h * self.a + self.b) ** 2 / (self.a * (self.h * self.a + 2 * self.b))


@dataclass(frozen=True)
class OneDimCurve:
    """Curve for one-dimensional classes: h + z/y = (1/2) u (hu + 2v);
    requires y, z > 0 and h + z/y > 0."""

    h: Fraction
    y: Fraction
    z: Fraction

    def __init__(self, h, y, z):
        h, y, z = _q(h), _q(y), _q(z)
        if y <= 0 or z <= 0:
            raise ConfigurationError("one-dimensional curve: y and z must be positive")
        if h + z / y <= 0:
            raise ConfigurationError("one-dimensional curve: requires h + z/y > 0")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @property
    def q(self) -> Fraction:
        return self.h + self.z / self.y

    @property
    def leading_coefficient(self) -> Fraction:
        return self.q


CurveConstraint = TiltCurve | OneDimCurve


@lru_cache(maxsize=None)
def constraint_poly(c: CurveConstraint) -> Poly2:
    """Cross-multiplied curve equation as a polynomial P(u, v); the curve is
    its zero set in the positive quadrant."""
    u, v = Poly2.u(), Poly2.v()
    h = c.h
    if isinstance(c, TiltCurve):
        alpha = c.a * (h * c.a + 2 * c.b)
        beta = (h * c.a + c.b) ** 2
        cubic = h * h * u * u * u + 3 * h * (u * u * v) + 3 * (u * v * v)
        return cubic * Fraction(alpha, 6) - (h * u + v) * beta
    q = c.q
    return (h * (u * u) + 2 * (u * v)) * Fraction(1, 2) - Poly2.const(q)


def solve_u(c: CurveConstraint, vpar, precision) -> RootInterval:
    """The admissible positive root u of the curve at a fixed v.

    Exact rational roots are returned with a collapsed interval; otherwise
    the root is bracketed by a certified sign-change interval no wider than
    ``precision``.  Among several positive roots the one with u*vpar
    closest to the curve's first expansion coefficient is chosen.
    """
    vpar = _q(vpar)
    precision = _q(precision)
    if vpar <= 0:
        raise CurveDomainError("curve solving requires vpar > 0")
    if precision <= 0:
        raise CurveDomainError("precision must be positive")

    if c.h == 0:
        if isinstance(c, TiltCurve):
            root = (c.b / c.a) / vpar
        else:
            root = c.q / vpar
        return RootInterval(root, root)

    p = constraint_poly(c).eval_v(vpar)
    roots = isolate_positive_roots(p, precision)
    if not roots:
        raise CurveDomainError(f"no positive root on the curve at vpar = {vpar}")
    u1 = c.leading_coefficient
    best = min(roots, key=lambda r: abs(r.midpoint * vpar - u1))
    return best


def expand_u(c: CurveConstraint, order: int) -> LaurentSeries:
    """Laurent expansion of u(v) through exponent -order.

    Obtained by term-by-term reversion of the constraint polynomial: each
    step cancels the leading residual using the derivative's leading term.
    Series that terminate (h = 0) are returned exact; otherwise the
    truncation floor is -order.
    """
    if order < 1:
        raise CurveDomainError("expansion order must be at least 1")
    return _expand_u_cached(c, int(order))


@lru_cache(maxsize=None)
def _expand_u_cached(c: CurveConstraint, order: int) -> LaurentSeries:
    poly = constraint_poly(c)
    dpoly = Poly2.from_ucoefficients(
        [(k + 1) * poly.ucoefficient(k + 1) for k in range(poly.udegree())]
    )
    u = LaurentSeries.monomial(-1, c.leading_coefficient)
    while True:
        residual = _eval_poly2_series(poly, u)
        if residual.is_stored_zero() and residual.is_exact():
            return u
        lead = residual.leading()
        if lead is None:
            raise ComputationFault("reversion stalled with an inexact zero residual")
        deriv_lead = _eval_poly2_series(dpoly, u).leading()
        if deriv_lead is None:
            raise ComputationFault("degenerate curve: derivative vanishes along the expansion")
        exp = lead[0] - deriv_lead[0]
        if exp < -order:
            return u.truncate(-order)
        u = u + LaurentSeries.monomial(exp, -lead[1] / deriv_lead[1])


def _eval_poly2_series(p: Poly2, u: LaurentSeries) -> LaurentSeries:
    """Evaluate a (u, v)-polynomial at u = series, v = the series variable."""
    powers = {0: LaurentSeries.const(1)}
    max_u = p.udegree()
    for k in range(1, max_u + 1):
        powers[k] = powers[k - 1] * u
    total = LaurentSeries.zero()
    for (i, j), coeff in p.terms.items():
        total = total + powers[i] * LaurentSeries.monomial(j, coeff)
    return total


def expansion_residual(c: CurveConstraint, order: int) -> LaurentSeries:
    """Residual of the order-``order`` expansion inside the curve polynomial."""
    return _eval_poly2_series(constraint_poly(c), expand_u(c, order))


def _cycle_sides(g: BaseGeometry, c: TiltCurve, u, vpar) -> tuple[ChernVector, ChernVector]:
    """The two degree-two cycles whose equality is the compatibility of the
    fixed and moving polarizations, both built through ring products."""
    hb = g.hb_divisor
    obar1 = divisor_vector(g, DivisorX(c.a, g.zero_divisor()))
    obar2 = divisor_vector(g, DivisorX(0, hb.scale(c.b)))
    obar = obar1 + obar2
    om = divisor_vector(g, DivisorX(u, hb.scale(vpar)))
    theta = divisor_vector(g, DivisorX(1, g.zero_divisor()))

    left_cycle = mul(g, obar1, obar1 + obar2.scale(2))
    om3_over6 = mul(g, mul(g, om, om), om).s / 6
    lhs = left_cycle.scale(om3_over6)

    theta_obar2 = mul(g, theta, mul(g, obar, obar)).s
    rhs = mul(g, om, theta).scale(theta_obar2)
    return lhs, rhs


def _symbolic_difference_parts(g: BaseGeometry, c: TiltCurve) -> list[Poly2]:
    """All components of the symbolic cycle difference, as (u, v) polynomials."""
    lhs, rhs = _cycle_sides(g, c, Poly2.u(), Poly2.v())
    diff = lhs - rhs
    scalars = [diff.n, diff.x, diff.a, diff.s]
    scalars.extend(diff.S.coords)
    scalars.extend(diff.eta.coords)
    parts = []
    for value in scalars:
        if isinstance(value, Poly2):
            parts.append(value)
        elif value != 0:
            parts.append(Poly2.const(value))
    return parts


def chow_identity_check(g: BaseGeometry, c: TiltCurve, u, vpar, tol=None) -> bool:
    """Whether the degree-two cycle identity behind the curve holds at (u, vpar).

    For rational u the two cycles are compared exactly, so the result is
    True precisely on zeros of the constraint polynomial.  For a bracketed
    algebraic u every component of the difference is enclosed by interval
    arithmetic and compared against ``tol`` (default 10^-30).
    """
    if g.h != c.h:
        raise ConfigurationError("curve and geometry disagree on h")
    if isinstance(u, RootInterval) and not u.exact:
        if tol is None:
            tol = Fraction(1, 10**30)
        for part in _symbolic_difference_parts(g, c):
            lo, hi = eval_interval(part.eval_v(_q(vpar)), u)
            if lo < -tol or hi > tol:
                return False
        return True
    if isinstance(u, RootInterval):
        u = u.lo
    lhs, rhs = _cycle_sides(g, c, _q(u), _q(vpar))
    return lhs == rhs


def chow_identity_symbolic_remainder(g: BaseGeometry, c: TiltCurve) -> list[Poly2]:
    """Remainders of the symbolic cycle difference modulo the curve polynomial.

    The cycle computation runs with symbolic (u, v) scalars; the identity is
    exactly the statement that every returned remainder is zero.
    """
    return [reduce_mod_u(part, constraint_poly(c)) for part in _symbolic_difference_parts(g, c)]
