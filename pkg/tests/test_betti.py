from fractions import Fraction

import pytest

from oracles import dense_inverse
from quivermod import betti, hn
from quivermod.errors import BudgetExceeded, NotCoprime, ZeroDimVector
from quivermod.qseries import PolyQ, RationalFunctionQ as R
from quivermod.quiver import Quiver, StabilityData

q = PolyQ([0, 1])
K3 = Quiver.from_arrows("ij", {("i", "j"): 3})
K1 = Quiver.from_arrows("ij", {("i", "j"): 1})
CHAIN = Quiver.from_arrows("ijk", {("i", "j"): 1, ("j", "k"): 1})
POINT = Quiver.from_arrows("i", {})
KTHETA = StabilityData((1, 0))
CTHETA = StabilityData((2, 3, 0))


def test_lattice_points():
    assert betti.lattice_points(K3, KTHETA, (1, 1)).points == ((0, 0), (1, 0), (1, 1))
    assert betti.lattice_points(POINT, StabilityData((5,)), (3,)).points == ((0,), (3,))
    pts = set(betti.lattice_points(CHAIN, CTHETA, (1, 1, 1)).points)
    assert pts == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1)}
    # slope 3/2 sits below 5/3
    assert (0, 1, 1) not in pts
    with pytest.raises(ZeroDimVector):
        betti.lattice_points(K3, KTHETA, (0, 0))


@pytest.mark.parametrize("Q, S, d", [(K3, KTHETA, (3, 4)), (CHAIN, CTHETA, (2, 2, 2))])
def test_lattice_is_linear_extension(Q, S, d):
    lat = betti.lattice_points(Q, S, d)
    pos = {e: k for k, e in enumerate(lat.points)}
    for e in lat.points:
        for f in lat.points:
            if e != f and all(a <= b for a, b in zip(e, f)):
                assert pos[e] < pos[f]
    size = 1
    for x in d:
        size *= x + 1
    assert len(lat) <= size + 1


def test_transfer_matrix_entries():
    T = betti.transfer_matrix(K3, KTHETA, (1, 1))
    assert T[(0, 0)][(1, 0)] == R(1, q - 1)
    assert T[(1, 0)][(1, 1)] == R(1, q - 1)
    assert T[(0, 0)][(1, 1)] == R(q**3, (q - 1) ** 2)
    assert all(T[e][e] == 1 for e in T)


def test_corner_inverse():
    lat = betti.lattice_points(K3, KTHETA, (1, 1))
    T = betti.transfer_matrix(K3, KTHETA, (1, 1))
    assert betti.corner_inverse(T, lat) == R(1 - q**3, (q - 1) ** 2)
    lat1 = betti.lattice_points(POINT, StabilityData((0,)), (1,))
    assert betti.corner_inverse(betti.transfer_matrix(POINT, StabilityData((0,)), (1,)), lat1) == R(-1, q - 1)
    identity = {e: {e: R(1)} for e in lat.points}
    assert betti.corner_inverse(identity, lat) == 0


@pytest.mark.parametrize("Q, S, d", [(K3, KTHETA, (2, 3)), (CHAIN, CTHETA, (1, 2, 1))])
def test_back_substitution_solves_system(Q, S, d):
    lat = betti.lattice_points(Q, S, d)
    T = betti.transfer_matrix(Q, S, d)
    x = betti.solve_column(T, lat)
    for e in lat.points:
        row = sum((T[e][f] * x[f] for f in T[e]), R(0))
        assert row == (1 if e == lat.top else 0)


@pytest.mark.parametrize("Q, S, d", [(K3, KTHETA, (2, 3)), (CHAIN, CTHETA, (1, 1, 1)), (K3, KTHETA, (1, 2))])
def test_corner_matches_dense_inverse(Q, S, d):
    # full Gauss-Jordan inverse at q = 5, independent of back-substitution
    lat = betti.lattice_points(Q, S, d)
    T = betti.transfer_matrix(Q, S, d)
    M = [[T[e][f](5) if f in T[e] else Fraction(0) for f in lat.points] for e in lat.points]
    inv = dense_inverse(M)
    assert inv[0][-1] == -betti.ev_semistable_tm(Q, S, d)(5)


def test_ev_tm_examples():
    assert betti.ev_semistable_tm(K3, KTHETA, (1, 1)) == R(q**3 - 1, (q - 1) ** 2)
    assert betti.ev_semistable_tm(CHAIN, CTHETA, (1, 1, 1)) == R(1, q - 1)
    assert betti.ev_semistable_tm(K1, StabilityData((0, 1)), (1, 1)) == 0


def test_resolved_sum():
    assert betti.resolved_sum(K3, KTHETA, (1, 1)) == R(q**3 - 1, (q - 1) ** 2)
    assert betti.count_resolved_tuples(KTHETA, (1, 1)) == 2
    # singleton support: only the tuple (d) survives
    assert betti.resolved_sum(CHAIN, CTHETA, (0, 2, 0)) == R(1, (q**2 - 1) * (q**2 - q))
    assert betti.resolved_sum(CHAIN, CTHETA, (1, 1, 1)) == R(1, q - 1)
    with pytest.raises(BudgetExceeded):
        betti.resolved_sum(K3, KTHETA, (3, 4), budget=10)


@pytest.mark.parametrize("d", [(1, 1), (2, 3), (3, 2), (2, 2), (3, 4), (0, 3)])
def test_three_routes_agree(d):
    tm = betti.ev_semistable_tm(K3, KTHETA, d)
    assert tm == hn.ev_semistable(K3, KTHETA, d)
    assert tm == betti.resolved_sum(K3, KTHETA, d)


def test_poincare_examples():
    r = betti.poincare(K3, KTHETA, (1, 1))
    assert r.poincare_q == PolyQ([1, 1, 1])
    assert r.poincare_v == [1, 0, 1, 0, 1]
    assert r.betti == [1, 0, 1, 0, 1]
    assert r.euler == 3 and r.moduli_dim == 2 and r.coprime and not r.empty
    assert r.poincare_str() == "1 + v^2 + v^4"
    chain = betti.poincare(CHAIN, CTHETA, (1, 1, 1))
    assert chain.poincare_q == PolyQ([1]) and chain.moduli_dim == 0
    with pytest.raises(NotCoprime):
        betti.poincare(K3, KTHETA, (2, 2))


def test_empty_locus():
    r = betti.poincare(K1, KTHETA, (2, 1))
    assert r.empty and r.poincare_q.is_zero() and r.euler == 0 and r.betti == []


def test_euler_characteristic():
    make = lambda coeffs: betti.BettiResult(PolyQ(coeffs), 0, True, not coeffs)
    assert betti.euler_characteristic(make([1, 1, 1])) == 3
    assert betti.euler_characteristic(make([])) == 0
    assert betti.euler_characteristic(make([1])) == 1


def test_interpolated_samples():
    # (q-1) * ev at q = 2..5 for the projective plane
    lat = betti.lattice_points(K3, KTHETA, (1, 1))
    assert [(k - 1) * betti._series_at(K3, KTHETA, lat, k) for k in (2, 3, 4, 5)] == [7, 13, 21, 31]
    assert betti.poincare_interpolated(K3, KTHETA, (1, 1)).poincare_q == PolyQ([1, 1, 1])
    assert betti.poincare_interpolated(POINT, StabilityData((0,)), (1,)).poincare_q == PolyQ([1])


@pytest.mark.parametrize("Q, S, d", [
    (K3, KTHETA, (2, 3)), (K3, KTHETA, (3, 5)), (K1, KTHETA, (2, 1)), (CHAIN, CTHETA, (1, 1, 1)),
])
def test_interpolation_equals_symbolic(Q, S, d):
    assert betti.poincare_interpolated(Q, S, d) == betti.poincare(Q, S, d)


@pytest.mark.parametrize("method", ["tm", "recursion", "oracle", "interp"])
def test_methods_agree(method):
    assert betti.poincare(K3, KTHETA, (2, 3), method=method) == betti.poincare(K3, KTHETA, (2, 3))


def test_result_dict_roundtrip():
    r = betti.poincare(K3, KTHETA, (2, 3))
    assert betti.BettiResult.from_dict(r.to_dict()) == r
    assert betti.structural_failures(K3, (2, 3), r) == []
