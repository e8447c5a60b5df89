from fractions import Fraction

import pytest

from ellstab.ring import BaseGeometry, ChernVector, DivisorB


@pytest.fixture
def g1():
    """Rank-one lattice, unit form, h = -1."""
    return BaseGeometry(1, [[1]], [1], -1)


@pytest.fixture
def g0():
    """Rank-one lattice, unit form, h = 0."""
    return BaseGeometry(1, [[1]], [1], 0)


@pytest.fixture
def g2():
    """Rank-two lattice with an off-diagonal form, h = 1/2."""
    return BaseGeometry(2, [[2, 1], [1, 3]], [1, 0], Fraction(1, 2))


def cv(n, x, s_div, eta_div, a, s):
    return ChernVector(n, x, s_div, eta_div, a, s)


def d(*coords):
    return DivisorB(coords)
