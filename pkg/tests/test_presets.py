import pytest

from quivermod.betti import poincare
from quivermod.errors import InvalidInput
from quivermod.presets import (
    grassmannian_reference,
    kronecker_rank2_euler_reference,
    kronecker_rank2_reference,
    parse_preset,
    preset_flag,
    preset_kronecker,
    preset_linear,
    preset_subspace,
)
from quivermod.qseries import PolyQ
from quivermod.quiver import validate_quiver


def same_data(a, b):
    # vertex names differ between presets; compare arrows, stability and dimensions
    return a[0].r == b[0].r and a[1].theta == b[1].theta and a[2] == b[2]


def test_linear():
    Q, S = preset_linear(2)
    assert Q.r == ((0, 1), (0, 0)) and S.theta == (-1, -2)
    Q, S = preset_linear(1)
    assert Q.n == 1 and S.theta == (-1,)
    assert preset_linear(3)[0].r == ((0, 1, 0), (0, 0, 1), (0, 0, 0))
    with pytest.raises(InvalidInput):
        preset_linear(0)


def test_subspace():
    Q, S, d = preset_subspace(2, 3)
    assert Q.n == 4 and sum(c for *_, c in Q.arrows()) == 3
    assert all(j == 0 for _, j, _ in Q.arrows())
    assert d == (2, 1, 1, 1) and S.theta == (-1, 0, 0, 0)
    assert preset_subspace(1, 1)[0].n == 2
    assert preset_subspace(2, 5)[2] == (2, 1, 1, 1, 1, 1)


def test_kronecker():
    Q, S, d = preset_kronecker(3, 1, 1)
    assert Q.r == ((0, 3), (0, 0)) and S.theta == (1, 0) and d == (1, 1)
    assert preset_kronecker(1, 1, 0)[2] == (1, 0)
    assert preset_kronecker(3, 2, 3)[2] == (2, 3)
    with pytest.raises(InvalidInput):
        preset_kronecker(3, 0, 0)


def test_flag():
    Q, S, d = preset_flag(1, 0, [[1]], 1)
    assert Q.n == 2 and d == (1, 1)
    assert same_data(preset_flag(2, 0, [[1], [1]], 2), preset_subspace(2, 2))
    with pytest.raises(InvalidInput):
        preset_flag(1, 1, [[2, 1, 0]], 2)
    Q, S, d = preset_flag(1, 1, [[0, 1, 2]], 3)
    assert d == (3, 0, 1, 2) and validate_quiver(Q)


def test_references():
    assert grassmannian_reference(3, 1) == PolyQ([1, 1, 1])
    assert grassmannian_reference(5, 0) == PolyQ([1])
    assert grassmannian_reference(4, 2) == PolyQ([1, 1, 2, 1, 1])
    assert kronecker_rank2_reference(3, 1) == PolyQ([1, 1, 1])
    # W^1_{2,1} is empty: every map k^2 -> k has a kernel
    assert kronecker_rank2_reference(1, 1) == PolyQ()
    with pytest.raises(InvalidInput):
        kronecker_rank2_reference(3, 2)
    assert kronecker_rank2_euler_reference(3, 1) == 3
    assert kronecker_rank2_euler_reference(2, 1) == 1
    assert kronecker_rank2_euler_reference(3, 3) == 13


@pytest.mark.parametrize("n", range(1, 7))
def test_grassmannians(n):
    for b in range(1, n + 1):
        assert poincare(*preset_kronecker(n, 1, b)).poincare_q == grassmannian_reference(n, b)


@pytest.mark.parametrize("n, b", [(n, b) for n in (1, 2, 3, 4) for b in (1, 3, 5) if b <= 2 * n])
def test_rank2_kronecker(n, b):
    r = poincare(*preset_kronecker(n, 2, b))
    assert r.poincare_q == kronecker_rank2_reference(n, b)
    assert r.euler == kronecker_rank2_euler_reference(n, b)


def test_parse_preset():
    Q, S, d = parse_preset("kronecker:n=3,a=2,b=3")
    assert d == (2, 3)
    assert parse_preset("linear:n=3")[2] is None
    assert same_data(parse_preset("flag:r=2,N=0,dims=1/1,d0=2"), preset_subspace(2, 2))
    for bad in ("kronecker:n=3,a=1", "nope:n=1", "subspace:m=x,n=2", "kronecker:n3"):
        with pytest.raises(InvalidInput):
            parse_preset(bad)


@pytest.mark.parametrize("spec", ["linear:n=4", "subspace:m=2,n=5", "kronecker:n=4,a=2,b=3",
                                  "flag:r=3,N=1,dims=0-1-1/0-0-1/0-1-2,d0=2"])
def test_presets_are_acyclic(spec):
    Q = parse_preset(spec)[0]
    assert len(validate_quiver(Q)) == Q.n
