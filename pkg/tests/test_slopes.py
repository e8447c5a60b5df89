"""Slope kinds: examples, infinity conventions, decomposition identities."""

import random
from fractions import Fraction

import pytest

from ellstab.errors import ConfigurationError, DomainError
from ellstab.ring import BaseGeometry, ChernVector, DivisorB, DivisorX, compute_m, pair
from ellstab.slopes import SlopeKind, SlopeValue, is_fiber_numeric, slope
from ellstab.suites import geometry_for, _rand_vector

from conftest import cv, d


def test_mu_f(g1):
    v = cv(2, 3, d(1), d(0), 0, 0)
    assert slope(g1, SlopeKind.mu_f(), v) == SlopeValue.of(Fraction(3, 2))


def test_mu_f_infinity(g1):
    v = cv(0, 3, d(0), d(0), 0, 0)
    assert slope(g1, SlopeKind.mu_f(), v).is_infinite


def test_mu_star_b_closed_form(g1):
    v = cv(0, 0, d(0), d(2), 7, 5)
    assert slope(g1, SlopeKind.mu_star_b(), v) == SlopeValue.of(2)


def test_mu_star_b_equals_quotient_plus_shift():
    rng = random.Random(7)
    for h in (Fraction(-1), Fraction(0), Fraction(1, 2)):
        g = geometry_for(h)
        for _ in range(60):
            eta = Fraction(rng.randint(1, 9), rng.randint(1, 4))
            s = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            v = cv(0, 0, d(0), d(eta), Fraction(rng.randint(-5, 5)), s)
            got = slope(g, SlopeKind.mu_star_b(), v)
            heta = pair(g, g.hb_divisor, v.eta)
            assert got == SlopeValue.of(s / heta + h / 2)


def test_mu_star_infinity_on_fiber(g1):
    v = cv(0, 0, d(0), d(0), 1, 3)
    assert slope(g1, SlopeKind.mu_star(), v).is_infinite


class TestComputeM:
    def test_examples(self):
        assert compute_m(BaseGeometry(1, [[1]], [1], -1, 0, 1)) == 1
        assert compute_m(BaseGeometry(1, [[2]], [1], 0, 0, 1)) == 1
        assert compute_m(BaseGeometry(1, [[1]], [1], 0, 0, 3)) == Fraction(3, 2)

    def test_invalid_geometry_rejected(self):
        with pytest.raises(ConfigurationError):
            BaseGeometry(1, [[1]], [1], -3, 0, 1)


class TestFiberNumeric:
    def test_fiber(self, g1):
        assert is_fiber_numeric(g1, cv(0, 0, d(0), d(0), 1, 0))

    def test_not_fiber(self, g1):
        assert not is_fiber_numeric(g1, cv(0, 0, d(0), d(1), 0, 1))

    def test_precondition(self, g1):
        with pytest.raises(DomainError):
            is_fiber_numeric(g1, cv(1, 0, d(0), d(0), 0, 0))

    def test_agrees_with_infinite_slope(self):
        rng = random.Random(8)
        g = geometry_for(Fraction(-1))
        for _ in range(1000):
            eta = d(Fraction(rng.randint(0, 4)))
            v = cv(0, 0, d(0), eta, Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
            fiberish = is_fiber_numeric(g, v)
            infinite = slope(g, SlopeKind.mu_star_b(), v).is_infinite
            assert fiberish == infinite


class TestOrdering:
    def test_infinity_tops(self):
        inf, one = SlopeValue.infinity(), SlopeValue.of(1)
        assert one < inf
        assert not inf < one
        assert inf == SlopeValue.infinity()
        assert inf <= SlopeValue.infinity()


class TestDecompositions:
    def test_slope_decomposition_on_total_space(self):
        """w-slope splits into the section-slope and fiber-slope pieces."""
        rng = random.Random(9)
        for h in (Fraction(-1), Fraction(0), Fraction(1, 2)):
            g = geometry_for(h)
            m = compute_m(g)
            for _ in range(120):
                v = _rand_vector(rng, 1)
                if v.n == 0:
                    continue
                u = Fraction(rng.randint(1, 6), rng.randint(1, 4))
                vp = Fraction(rng.randint(1, 9), rng.randint(1, 3))
                om = DivisorX(u, g.hb_divisor.scale(vp))
                zero_b = DivisorX(0, g.zero_divisor())
                mu_om = slope(g, SlopeKind.mu_omega_b(om, zero_b), v).finite
                mu_tm = slope(g, SlopeKind.mu_theta_m(), v).finite
                mu_f = slope(g, SlopeKind.mu_f(), v).finite
                coeff = u * (h * u + 2 * vp)
                assert mu_om == coeff * mu_tm + (vp * vp * g.hb2 - coeff * m) * mu_f

    def test_slope_decomposition_on_vertical_classes(self):
        rng = random.Random(10)
        for h in (Fraction(-1), Fraction(0), Fraction(1, 2)):
            g = geometry_for(h)
            m = compute_m(g)
            for _ in range(120):
                v = _rand_vector(rng, 1)
                v = ChernVector(0, 0, v.S, v.eta, v.a, v.s)
                dd = d(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
                if pair(g, g.hb_divisor, v.S) == 0:
                    continue
                u = Fraction(rng.randint(1, 6), rng.randint(1, 4))
                vp = Fraction(rng.randint(1, 9), rng.randint(1, 3))
                coeff = u * (h * u + 2 * vp)
                if coeff == 0:
                    continue
                om = DivisorX(u, g.hb_divisor.scale(vp))
                lhs = slope(g, SlopeKind.mu_omega_pd(om, dd), v).finite
                mu_tm = slope(g, SlopeKind.mu_theta_mphb_pd(dd), v).finite
                mu_ph = slope(g, SlopeKind.mu_phb_pd(dd), v).finite
                assert coeff * lhs == u * mu_tm + (vp - m * u) * mu_ph

    def test_bfield_shift(self):
        rng = random.Random(11)
        g = geometry_for(Fraction(1, 2), rank2=True)
        from ellstab.ring import divisor_vector, mul

        for _ in range(80):
            v = _rand_vector(rng, 2)
            if v.n == 0:
                continue
            u = Fraction(rng.randint(1, 5))
            vp = Fraction(rng.randint(1, 5))
            om = DivisorX(u, g.hb_divisor.scale(vp))
            bfield = DivisorX(
                Fraction(rng.randint(-3, 3)),
                DivisorB([Fraction(rng.randint(-3, 3)) for _ in range(2)]),
            )
            zero_b = DivisorX(0, g.zero_divisor())
            lhs = slope(g, SlopeKind.mu_omega_b(om, bfield), v).finite
            rhs = slope(g, SlopeKind.mu_omega_b(om, zero_b), v).finite
            omv = divisor_vector(g, om)
            om2b = mul(g, mul(g, omv, omv), divisor_vector(g, bfield)).s
            assert lhs == rhs - om2b

    def test_kind_parameter_validation(self):
        with pytest.raises(ConfigurationError):
            SlopeKind(SlopeKind.mu_f().tag, d=DivisorB([1]))
        with pytest.raises(ConfigurationError):
            SlopeKind.mu_bar(None, None)
