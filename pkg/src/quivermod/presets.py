"""Standard example quivers and closed-form reference polynomials.

Families: ``linear`` (equioriented chain), ``subspace`` (n vectors in k^m),
``flag`` (flags feeding a central vertex) and ``kronecker`` (n parallel
arrows). The reference formulas cover Grassmannians and the rank-2
Kronecker moduli, and serve as oracles for the general engine.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Sequence, Tuple

from .errors import InvalidInput, NonPolynomial
from .qseries import PolyQ, RationalFunctionQ, q_binomial, ratfun_to_poly
from .quiver import DimVector, Quiver, StabilityData


def _positive(**params):
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise InvalidInput(f"{name} must be a positive integer, got {value!r}")


def preset_linear(n: int) -> Tuple[Quiver, StabilityData]:
    """i_1 -> i_2 -> ... -> i_n with theta(i_k) = -k."""
    _positive(n=n)
    names = [f"i{k}" for k in range(1, n + 1)]
    Q = Quiver.from_arrows(names, {(names[k], names[k + 1]): 1 for k in range(n - 1)})
    return Q, StabilityData(tuple(-k for k in range(1, n + 1)))


def preset_subspace(m: int, n: int) -> Tuple[Quiver, StabilityData, DimVector]:
    """Star with arrows i_k -> i_0, d = m*i_0 + sum i_k, theta = -i_0^*."""
    _positive(m=m, n=n)
    names = [f"i{k}" for k in range(n + 1)]
    Q = Quiver.from_arrows(names, {(names[k], names[0]): 1 for k in range(1, n + 1)})
    S = StabilityData((-1,) + (0,) * n)
    return Q, S, (m,) + (1,) * n


def preset_kronecker(n: int, a: int, b: int) -> Tuple[Quiver, StabilityData, DimVector]:
    """i =(n arrows)=> j, d = a*i + b*j, theta = i^*."""
    _positive(n=n)
    if a < 0 or b < 0 or (a, b) == (0, 0):
        raise InvalidInput("a, b must be nonnegative and not both zero")
    Q = Quiver.from_arrows(["i", "j"], {("i", "j"): n})
    return Q, StabilityData((1, 0)), (a, b)


def preset_flag(r: int, N: int, dims: Sequence[Sequence[int]], d0: int) -> Tuple[Quiver, StabilityData, DimVector]:
    """r arms of 2N+1 vertices feeding i_0, theta = -i_0^*.

    ``dims[nu]`` lists the arm dimensions from the far end p = N down to
    p = -N (the vertex adjacent to i_0); each arm must be weakly increasing
    and bounded by d0.
    """
    _positive(r=r)
    if N < 0 or d0 < 0:
        raise InvalidInput("N and d0 must be nonnegative")
    if len(dims) != r:
        raise InvalidInput(f"expected {r} arms, got {len(dims)}")
    length = 2 * N + 1
    names = ["i0"]
    arrows: Dict[Tuple[str, str], int] = {}
    d = [d0]
    for nu, arm in enumerate(dims, start=1):
        arm = [int(x) for x in arm]
        if len(arm) != length:
            raise InvalidInput(f"arm {nu} needs {length} dimensions, got {len(arm)}")
        if any(x < 0 for x in arm) or any(a > b for a, b in zip(arm, arm[1:])) or arm[-1] > d0:
            raise InvalidInput(f"arm {nu} dimensions {arm} are not a flag inside k^{d0}")
        arm_names = [f"i{nu}_{p}" for p in range(N, -N - 1, -1)]
        names += arm_names
        d += arm
        for src, dst in zip(arm_names, arm_names[1:]):
            arrows[(src, dst)] = 1
        arrows[(arm_names[-1], "i0")] = 1
    Q = Quiver.from_arrows(names, arrows)
    S = StabilityData((-1,) + (0,) * (len(names) - 1))
    return Q, S, tuple(d)


def grassmannian_reference(n: int, b: int) -> PolyQ:
    """Poincare polynomial of Gr(b, n) in q = v^2."""
    if not 0 <= b <= n:
        raise InvalidInput("need 0 <= b <= n")
    return q_binomial(n, b)


def _rank2_check(n: int, b: int):
    _positive(n=n, b=b)
    if b % 2 == 0:
        raise InvalidInput("b must be odd for (2, b) to be coprime")
    if b > 2 * n:
        raise InvalidInput("need b <= 2n")


def kronecker_rank2_reference(n: int, b: int) -> PolyQ:
    """Closed form for the Poincare polynomial of the moduli of 2i + bj.

    P = (q-1)^{-1} q^{-1} ( [2n, b]/(q+1) - sum_{k=0}^{(b-1)/2}
    q^{(n-b+k)k} [n, k][n, b-k] ) with Gaussian binomials [n, k].
    """
    _rank2_check(n, b)
    q = PolyQ.monomial(1)
    total = RationalFunctionQ(q_binomial(2 * n, b), q + 1)
    for k in range((b - 1) // 2 + 1):
        term = RationalFunctionQ(q_binomial(n, k) * q_binomial(n, b - k))
        total = total - RationalFunctionQ.monomial((n - b + k) * k) * term
    result = total / RationalFunctionQ((q - 1) * q)
    try:
        return ratfun_to_poly(result)
    except NonPolynomial as exc:
        raise NonPolynomial(f"rank-2 closed form for (n, b) = ({n}, {b}) is not a polynomial") from exc


def kronecker_rank2_euler_reference(n: int, b: int) -> int:
    _rank2_check(n, b)
    value = Fraction(b * n - 1, 4) * comb(2 * n, b)
    value -= n * sum(k * comb(n, k) * comb(n, b - k) for k in range((b - 1) // 2 + 1))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral Euler characteristic {value}")
    return int(value)


def parse_preset(spec: str):
    """``name:key=val,...`` -> (Quiver, StabilityData, d or None).

    Flag arms are given as ``dims=1-2/1-2`` (arms split by ``/``, entries by
    ``-``). The linear family has no canonical d and returns None.
    """
    name, _, rest = spec.partition(":")
    params: Dict[str, str] = {}
    for item in filter(None, rest.split(",")):
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidInput(f"malformed preset parameter {item!r}")
        params[key.strip()] = value.strip()

    def ints(*keys):
        missing = [k for k in keys if k not in params]
        if missing:
            raise InvalidInput(f"preset {name!r} is missing {', '.join(missing)}")
        try:
            return [int(params[k]) for k in keys]
        except ValueError as exc:
            raise InvalidInput(f"preset {name!r}: parameters must be integers") from exc

    if name == "linear":
        (n,) = ints("n")
        Q, S = preset_linear(n)
        return Q, S, None
    if name == "subspace":
        return preset_subspace(*ints("m", "n"))
    if name == "kronecker":
        return preset_kronecker(*ints("n", "a", "b"))
    if name == "flag":
        r, N, d0 = ints("r", "N", "d0")
        if "dims" not in params:
            raise InvalidInput("preset 'flag' is missing dims")
        try:
            dims = [[int(x) for x in arm.split("-")] for arm in params["dims"].split("/")]
        except ValueError as exc:
            raise InvalidInput("flag dims must look like 1-2/1-2") from exc
        return preset_flag(r, N, dims, d0)
    raise InvalidInput(f"unknown preset {name!r}; expected linear, subspace, flag or kronecker")
