from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quivermod.errors import CyclicQuiver, ZeroDimVector
from quivermod.qseries import PolyQ, RationalFunctionQ as R
from quivermod.quiver import (
    Quiver,
    StabilityData,
    count_G,
    count_R,
    euler_form,
    is_coprime,
    moduli_dimension,
    r_over_g,
    slope,
    validate_quiver,
)

q = PolyQ([0, 1])
K3 = Quiver.from_arrows("ij", {("i", "j"): 3})
CHAIN = Quiver.from_arrows("ijk", {("i", "j"): 1, ("j", "k"): 1})
POINT = Quiver.from_arrows("i", {})


def test_validate():
    assert validate_quiver(K3) == (0, 1)
    assert validate_quiver(POINT) == (0,)
    with pytest.raises(CyclicQuiver):
        Quiver.from_arrows("ij", {("i", "j"): 1, ("j", "i"): 1})
    with pytest.raises(CyclicQuiver):
        Quiver.from_arrows("i", {("i", "i"): 1})


def test_euler_form():
    assert euler_form(K3, (1, 0), (0, 1)) == -3
    assert euler_form(K3, (2, 3), (2, 3)) == -5
    assert euler_form(CHAIN, (1, 1, 1), (1, 1, 1)) == 1


def test_slope():
    assert slope(StabilityData((1, 0)), (2, 3)) == Fraction(2, 5)
    assert slope(StabilityData((2, 3, 0)), (0, 1, 1)) == Fraction(3, 2)
    with pytest.raises(ZeroDimVector):
        slope(StabilityData((1, 0)), (0, 0))


def test_counts():
    assert count_R(K3, (2, 3)) == R(q**18)
    assert count_R(K3, (0, 0)) == 1
    assert count_R(CHAIN, (1, 1, 1)) == R(q**2)
    assert count_G(POINT, (2,)) == R((q**2 - 1) * (q**2 - q))
    assert count_G(K3, (0, 0)) == 1
    assert count_G(K3, (1, 1)) == R((q - 1) ** 2)


def test_coprime_and_dimension():
    S = StabilityData((1, 0))
    assert is_coprime(S, (2, 3))
    assert not is_coprime(S, (2, 2))
    assert is_coprime(StabilityData((2, 3, 0)), (1, 1, 1))
    assert moduli_dimension(K3, (1, 1)) == 2
    assert moduli_dimension(K3, (2, 3)) == 6
    assert moduli_dimension(CHAIN, (1, 1, 1)) == 0


vec2 = st.tuples(st.integers(0, 6), st.integers(0, 6))
nonzero2 = vec2.filter(any)


@given(vec2, vec2, vec2)
def test_euler_bilinear(d, d2, e):
    s = tuple(a + b for a, b in zip(d, d2))
    assert euler_form(K3, s, e) == euler_form(K3, d, e) + euler_form(K3, d2, e)
    assert euler_form(K3, e, s) == euler_form(K3, e, d) + euler_form(K3, e, d2)


@given(vec2)
def test_count_degrees(d):
    assert count_G(K3, d).num.degree == sum(x * x for x in d)
    ratio = r_over_g(K3, d)
    assert ratio == count_R(K3, d) / count_G(K3, d)
    assert ratio.num.degree - ratio.den.degree == -euler_form(K3, d, d)


@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), nonzero2, st.integers(1, 5))
def test_slope_scaling(theta, d, n):
    S = StabilityData(theta)
    assert slope(S, d) == slope(S, tuple(n * x for x in d))


@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), st.integers(1, 4), st.integers(-4, 4), nonzero2, nonzero2)
def test_affine_reparametrisation(theta, a, b, d, e):
    S = StabilityData(theta)
    T = StabilityData(tuple(a * t + b for t in theta))
    assert slope(T, d) == a * slope(S, d) + b
    assert (slope(S, d) < slope(S, e)) == (slope(T, d) < slope(T, e))
    assert (slope(S, d) <= slope(S, e)) == (slope(T, d) <= slope(T, e))
